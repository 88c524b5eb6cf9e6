#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheafradon/rational.hpp"

namespace sheafradon {

/// Primitive integer direction (p, q) != (0, 0) with gcd(|p|, |q|) = 1.
struct Direction {
  std::int64_t p = 1;
  std::int64_t q = 0;

  Direction() = default;
  Direction(std::int64_t p_, std::int64_t q_);

  Rational dot(const Point& x) const { return x.x * p + x.y * q; }
  std::int64_t norm2() const { return p * p + q * q; }
  std::int64_t l1() const { return (p < 0 ? -p : p) + (q < 0 ? -q : q); }
  double angle() const;
  std::string to_string() const;

  friend bool operator==(const Direction& a, const Direction& b) { return a.p == b.p && a.q == b.q; }
};

/// Axis-aligned closed box; degenerate boxes model segments and points.
struct Box {
  Rational xmin, xmax, ymin, ymax;

  Box() = default;
  Box(Rational x0, Rational x1, Rational y0, Rational y1);
  /// Throws std::invalid_argument for a segment that is not axis-aligned.
  static Box from_segment(const Point& a, const Point& b);

  bool contains(const Point& x) const;
  bool interior_contains(const Point& x) const;
  bool strictly_contains(const Box& inner) const;
  friend bool operator==(const Box& a, const Box& b) {
    return a.xmin == b.xmin && a.xmax == b.xmax && a.ymin == b.ymin && a.ymax == b.ymax;
  }
};

/// Minkowski sum of each box with the closed L-infinity ball of radius a.
std::vector<Box> linf_dilate(const std::vector<Box>& boxes, const Rational& a);

struct Edge {
  std::size_t tail;
  std::size_t head;
};

struct FaceSide {
  std::size_t edge;
  int sign;  // +1 when the edge orientation agrees with the counterclockwise cycle
};

struct GridAxes {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

/// Regular cell complex of a bounded planar region with convex faces.
/// Cells carry one id space: vertices first, then edges, then faces.
class PlanarComplex {
 public:
  PlanarComplex() = default;

  /// Faces are counterclockwise vertex cycles; every consecutive pair must be
  /// one of the listed edges. Edges are reoriented tail -> head in
  /// lexicographic point order.
  static PlanarComplex from_cells(std::vector<Point> vertices,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                  std::vector<std::vector<std::size_t>> face_cycles);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t cell_count() const { return vertices_.size() + edges_.size() + faces_.size(); }

  int dim(std::size_t cell) const;
  std::size_t edge_cell(std::size_t e) const { return vertices_.size() + e; }
  std::size_t face_cell(std::size_t f) const { return vertices_.size() + edges_.size() + f; }
  /// Index within the cells of the same dimension.
  std::size_t local_index(std::size_t cell) const;

  const Point& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<FaceSide>& face(std::size_t f) const { return faces_[f]; }
  const std::vector<std::size_t>& face_cycle(std::size_t f) const { return face_cycles_[f]; }

  /// (cell, incidence) pairs one dimension down / up.
  const std::vector<std::pair<std::size_t, int>>& boundary(std::size_t cell) const {
    return boundary_[cell];
  }
  const std::vector<std::pair<std::size_t, int>>& coboundary(std::size_t cell) const {
    return coboundary_[cell];
  }
  int incidence(std::size_t higher, std::size_t lower) const;

  /// Vertex indices of the closure of a cell.
  std::vector<std::size_t> closure_vertices(std::size_t cell) const;
  /// A rational point in the relative interior of the cell.
  Point representative(std::size_t cell) const;
  /// The cell whose relative interior contains x, if x lies in the complex.
  std::optional<std::size_t> locate(const Point& x) const;

  const std::optional<GridAxes>& grid_axes() const { return grid_; }
  Box bounds() const;

  /// Throws std::logic_error describing the first violated invariant.
  void validate() const;

 private:
  friend PlanarComplex build_grid(const std::vector<Rational>&, const std::vector<Rational>&);
  void index_incidences();

  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<FaceSide>> faces_;
  std::vector<std::vector<std::size_t>> face_cycles_;
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary_;
  std::vector<std::vector<std::pair<std::size_t, int>>> coboundary_;
  std::optional<GridAxes> grid_;
};

using ComplexPtr = std::shared_ptr<const PlanarComplex>;

/// Rectilinear complex on strictly increasing cuts (at least two per axis).
PlanarComplex build_grid(const std::vector<Rational>& x_cuts, const std::vector<Rational>& y_cuts);

/// A refined complex with, for every old cell, the new cells partitioning it.
struct Refinement {
  ComplexPtr complex;
  std::vector<std::vector<std::size_t>> cell_map;
};

Refinement refine_by_line(const PlanarComplex& c, const Direction& d, const Rational& s);
/// Successive refinement by several parallel lines, with composed cell map.
Refinement refine_by_lines(const PlanarComplex& c, const Direction& d,
                           const std::vector<Rational>& levels);

/// Subset of cells of one complex.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(ComplexPtr parent);
  CellSet(ComplexPtr parent, std::vector<bool> mask);
  static CellSet all(ComplexPtr parent);
  static CellSet from_cells(ComplexPtr parent, const std::vector<std::size_t>& cells);

  const ComplexPtr& parent() const { return parent_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool contains(std::size_t cell) const { return mask_[cell]; }
  void insert(std::size_t cell) { mask_[cell] = true; }
  void erase(std::size_t cell) { mask_[cell] = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::size_t> cells() const;

  CellSet united(const CellSet& other) const;
  CellSet intersected(const CellSet& other) const;
  CellSet minus(const CellSet& other) const;
  bool subset_of(const CellSet& other) const;

  bool is_closed() const;
  bool is_open() const;
  bool is_locally_closed() const { return !violation(); }
  /// A chain lower < middle < upper of incident cells with the ends inside
  /// the set and the middle outside, if one exists.
  std::optional<std::array<std::size_t, 3>> violation() const;
  /// True when every cell of `part` with a boundary cell in this set has it
  /// inside `part` as well, i.e. `part` is closed in this set.
  bool has_closed_part(const CellSet& part) const;
  bool has_open_part(const CellSet& part) const;

  CellSet transported(const Refinement& r) const;

  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  void check_same_parent(const CellSet& other) const;

  ComplexPtr parent_;
  std::vector<bool> mask_;
};

CellSet closure(const CellSet& z);
CellSet star(const CellSet& z);
bool is_locally_closed(const CellSet& z);

/// The subcomplex spanned by a closed cell-set, with new -> parent cell ids.
struct Subcomplex {
  ComplexPtr complex;
  std::vector<std::size_t> to_parent;
};
Subcomplex subcomplex(const CellSet& closed);

enum class HalfPlane { closed_below, open_below };

/// Cells lying in {x : x.d <= s} (closed) or {x : x.d < s} (open). The complex
/// must already be refined by the line x.d = s.
CellSet halfplane_cells(const ComplexPtr& c, const Direction& d, const Rational& s,
                        HalfPlane side = HalfPlane::closed_below);

}  // namespace sheafradon
