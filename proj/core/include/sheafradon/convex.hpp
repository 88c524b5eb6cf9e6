#pragma once

#include <string>
#include <vector>

#include "sheafradon/cohomology.hpp"
#include "sheafradon/planar.hpp"
#include "sheafradon/rational.hpp"

namespace sheafradon {

enum class Norm { l2, linf };

std::string to_string(Norm n);
Norm parse_norm(const std::string& s);

/// Support-function value max_{|u| <= 1} u.d of the unit ball of `norm`,
/// i.e. the dual norm of d: sqrt(p^2 + q^2) for L2, |p| + |q| for L-infinity.
Surd unit_ball_support(Norm norm, const Direction& d);

/// Compact convex body: a convex polygon (one point and segments allowed) or
/// a disc with rational center and positive rational radius.
class ConvexBody {
 public:
  /// The points must be in convex position; collinear points on an edge are
  /// dropped. Throws std::invalid_argument otherwise.
  static ConvexBody polygon(const std::vector<Point>& points);
  static ConvexBody disc(const Point& center, const Rational& radius);

  bool is_disc() const { return is_disc_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  bool contains(const Point& x) const;
  Surd support_min(const Direction& d) const;
  Box bounding_box() const;

  /// Whether the closed ball of radius a >= 0 around x meets the body.
  bool meets_ball(const Point& x, const Rational& a, Norm norm) const;
  /// The same predicate evaluated by a different construction (vertex, edge
  /// and corner tests instead of distances / separating axes).
  bool meets_ball_direct(const Point& x, const Rational& a, Norm norm) const;

  bool contains_body(const ConvexBody& inner) const;
  bool disjoint_from(const ConvexBody& other) const;

  friend bool operator==(const ConvexBody& a, const ConvexBody& b);

 private:
  Rational polygon_squared_distance(const Point& x) const;

  bool is_disc_ = false;
  std::vector<Point> vertices_;  // counterclockwise hull
  Point center_;
  Rational radius_;
};

/// C minus the union of pairwise disjoint compact convex holes inside C.
class ConvexDiffRegion {
 public:
  ConvexDiffRegion(ConvexBody outer, std::vector<ConvexBody> holes);

  const ConvexBody& outer() const { return outer_; }
  const std::vector<ConvexBody>& holes() const { return holes_; }
  bool contains(const Point& x) const;
  long euler_c() const { return 1 - static_cast<long>(holes_.size()); }

  friend bool operator==(const ConvexDiffRegion& a, const ConvexDiffRegion& b) {
    return a.outer_ == b.outer_ && a.holes_ == b.holes_;
  }

 private:
  ConvexBody outer_;
  std::vector<ConvexBody> holes_;
};

/// H^*_c of (C n K) minus the union of the holes met by K, for a compact
/// convex K: outer_met = [C n K nonempty], holes_met = #{i : D_i n K nonempty}.
GradedDims convex_rank_rule(bool outer_met, std::size_t holes_met);

}  // namespace sheafradon
