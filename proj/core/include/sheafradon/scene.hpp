#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sheafradon/sheaf.hpp"

namespace sheafradon {

/// Malformed or unsupported scene input. `where` is a JSON-pointer-like path.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// CSG description of a planar region.
struct Region {
  enum class Kind { box, segment, polygon, disc, diff, union_of };

  Kind kind = Kind::box;
  /// box: min, max. segment: a, b. polygon: vertices. disc: center.
  std::vector<Point> points;
  /// box: left, right, bottom, top. segment: a end, b end. polygon: [0] is
  /// closed (true) or open interior (false).
  std::array<bool, 4> closed{true, true, true, true};
  Rational radius;
  /// diff: outer followed by holes. union_of: the parts.
  std::vector<Region> children;
  bool disjoint = true;

  static Region box(Point lo, Point hi);
  static Region segment(Point a, Point b);
  static Region polygon(std::vector<Point> vertices, bool closed = true);
  static Region disc(Point center, Rational radius);
  static Region diff(Region outer, std::vector<Region> holes);
  static Region union_of(std::vector<Region> parts);

  bool contains(const Point& x) const;
  /// Bounding box of the region (of the outer body for a difference).
  Box bounds() const;

  friend bool operator==(const Region& a, const Region& b);
};

struct SceneGenerator {
  Region region;
  int degree = 0;
  long mult = 1;
  friend bool operator==(const SceneGenerator& a, const SceneGenerator& b) {
    return a.region == b.region && a.degree == b.degree && a.mult == b.mult;
  }
};

struct Scene {
  std::uint32_t field = 2;
  Backend backend = Backend::grid;
  Rational margin{1};
  std::vector<SceneGenerator> generators;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.field == b.field && a.backend == b.backend && a.margin == b.margin && a.generators == b.generators;
  }
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);
std::string write_scene(const Scene& s);
void save_scene(const Scene& s, const std::string& path);

/// Window: bounding box of all supports grown by the margin. Grid scenes are
/// cut along every coordinate the regions use.
SheafObject compile(const Scene& s);

}  // namespace sheafradon
