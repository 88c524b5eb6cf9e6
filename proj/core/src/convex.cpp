#include "sheafradon/convex.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheafradon {

std::string to_string(Norm n) { return n == Norm::l2 ? "l2" : "linf"; }

Norm parse_norm(const std::string& s) {
  if (s == "l2" || s == "L2") return Norm::l2;
  if (s == "linf" || s == "LINF") return Norm::linf;
  throw std::invalid_argument("unknown norm '" + s + "' (expected l2 or linf)");
}

Surd unit_ball_support(Norm norm, const Direction& d) {
  if (norm == Norm::linf) return Surd(Rational(d.l1()));
  return Surd::sqrt_of(d.norm2());
}

namespace {

// Andrew's monotone chain, dropping collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational segment_squared_distance(const Point& a, const Point& b, const Point& x) {
  Point ab = b - a;
  Rational len2 = squared_norm(ab);
  if (len2 == 0) return squared_norm(x - a);
  Rational t = dot(x - a, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return squared_norm(x - (a + t * ab));
}

Rational box_squared_distance(const Box& b, const Point& x) {
  Rational dx = 0, dy = 0;
  if (x.x < b.xmin) dx = b.xmin - x.x;
  if (x.x > b.xmax) dx = x.x - b.xmax;
  if (x.y < b.ymin) dy = b.ymin - x.y;
  if (x.y > b.ymax) dy = x.y - b.ymax;
  return dx * dx + dy * dy;
}

// Projection interval of a point list onto an axis.
std::pair<Rational, Rational> project(const std::vector<Point>& pts, const Point& axis) {
  Rational lo = dot(pts[0], axis), hi = lo;
  for (const auto& p : pts) {
    Rational v = dot(p, axis);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

std::vector<Point> separating_axes(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> axes{{1, 0}, {0, 1}};
  for (const auto* poly : {&a, &b}) {
    const auto& p = *poly;
    if (p.size() < 2) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Point e = p[(i + 1) % p.size()] - p[i];
      axes.emplace_back(-e.y, e.x);
    }
  }
  return axes;
}

// Closed convex polygons (possibly degenerate) intersect iff no axis separates them.
bool polygons_meet(const std::vector<Point>& a, const std::vector<Point>& b) {
  for (const auto& axis : separating_axes(a, b)) {
    auto [alo, ahi] = project(a, axis);
    auto [blo, bhi] = project(b, axis);
    if (ahi < blo || bhi < alo) return false;
  }
  return true;
}

std::vector<Point> square_corners(const Point& x, const Rational& a) {
  return {{x.x - a, x.y - a}, {x.x + a, x.y - a}, {x.x + a, x.y + a}, {x.x - a, x.y + a}};
}

bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  auto orient = [](const Point& a, const Point& b, const Point& c) { return sgn(cross(b - a, c - a)); };
  auto on_seg = [](const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_seg(p1, p2, q1)) return true;
  if (o2 == 0 && on_seg(p1, p2, q2)) return true;
  if (o3 == 0 && on_seg(q1, q2, p1)) return true;
  if (o4 == 0 && on_seg(q1, q2, p2)) return true;
  return false;
}

}  // namespace

ConvexBody ConvexBody::polygon(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("polygon without vertices");
  ConvexBody b;
  b.vertices_ = convex_hull(points);
  // Every given point must lie on the hull boundary.
  if (b.vertices_.size() >= 3) {
    for (const auto& p : points) {
      bool on_boundary = false;
      const auto& h = b.vertices_;
      for (std::size_t i = 0; i < h.size() && !on_boundary; ++i) {
        const Point& u = h[i];
        const Point& v = h[(i + 1) % h.size()];
        on_boundary = cross(v - u, p - u) == 0 && dot(p - u, v - u) >= 0 &&
                      dot(p - u, v - u) <= squared_norm(v - u);
      }
      if (!on_boundary) {
        throw std::invalid_argument("polygon vertex " + to_string(p) + " is not in convex position");
      }
    }
  }
  return b;
}

ConvexBody ConvexBody::disc(const Point& center, const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("disc radius must be positive");
  ConvexBody b;
  b.is_disc_ = true;
  b.center_ = center;
  b.radius_ = radius;
  return b;
}

bool operator==(const ConvexBody& a, const ConvexBody& b) {
  if (a.is_disc_ != b.is_disc_) return false;
  if (a.is_disc_) return a.center_ == b.center_ && a.radius_ == b.radius_;
  return a.vertices_ == b.vertices_;
}

bool ConvexBody::contains(const Point& x) const {
  if (is_disc_) return squared_norm(x - center_) <= radius_ * radius_;
  return polygon_squared_distance(x) == 0;
}

Rational ConvexBody::polygon_squared_distance(const Point& x) const {
  const auto& v = vertices_;
  if (v.size() == 1) return squared_norm(x - v[0]);
  if (v.size() == 2) return segment_squared_distance(v[0], v[1], x);
  bool inside = true;
  for (std::size_t i = 0; i < v.size() && inside; ++i) {
    inside = cross(v[(i + 1) % v.size()] - v[i], x - v[i]) >= 0;
  }
  if (inside) return 0;
  Rational best = segment_squared_distance(v[0], v[1], x);
  for (std::size_t i = 1; i < v.size(); ++i) {
    best = std::min(best, segment_squared_distance(v[i], v[(i + 1) % v.size()], x));
  }
  return best;
}

Surd ConvexBody::support_min(const Direction& d) const {
  if (is_disc_) return Surd(d.dot(center_), -radius_, d.norm2());
  Rational best = d.dot(vertices_[0]);
  for (const auto& p : vertices_) best = std::min(best, d.dot(p));
  return Surd(best);
}

Box ConvexBody::bounding_box() const {
  if (is_disc_) {
    return Box(center_.x - radius_, center_.x + radius_, center_.y - radius_, center_.y + radius_);
  }
  Box b(vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y);
  for (const auto& p : vertices_) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

bool ConvexBody::meets_ball(const Point& x, const Rational& a, Norm norm) const {
  if (a < 0) throw std::invalid_argument("meets_ball needs a >= 0");
  if (norm == Norm::l2) {
    if (is_disc_) return squared_norm(x - center_) <= (radius_ + a) * (radius_ + a);
    return polygon_squared_distance(x) <= a * a;
  }
  Box sq(x.x - a, x.x + a, x.y - a, x.y + a);
  if (is_disc_) return box_squared_distance(sq, center_) <= radius_ * radius_;
  return polygons_meet(vertices_, square_corners(x, a));
}

bool ConvexBody::meets_ball_direct(const Point& x, const Rational& a, Norm norm) const {
  if (a < 0) throw std::invalid_argument("meets_ball needs a >= 0");
  if (is_disc_) {
    if (norm == Norm::l2) {
      // Nearest point of the disc to x lies on the ray from the center.
      Rational r2 = squared_norm(x - center_);
      if (r2 <= radius_ * radius_) return true;
      // |x - c| - r <= a  <=>  |x - c| <= r + a.
      return r2 <= (radius_ + a) * (radius_ + a);
    }
    // Clamp the center into the square and test that point.
    Rational x0 = x.x - a, x1 = x.x + a, y0 = x.y - a, y1 = x.y + a;
    Point clamp(std::clamp(center_.x, x0, x1), std::clamp(center_.y, y0, y1));
    return contains(clamp);
  }
  const auto& v = vertices_;
  if (norm == Norm::l2) {
    if (contains(x)) return true;
    for (const auto& p : v) {
      if (squared_norm(p - x) <= a * a) return true;
    }
    for (std::size_t i = 0; i + 1 < v.size() + (v.size() > 2 ? 1 : 0); ++i) {
      const Point& p = v[i];
      const Point& q = v[(i + 1) % v.size()];
      Point e = q - p;
      Rational t = dot(x - p, e);
      if (t < 0 || t > squared_norm(e)) continue;
      Rational c = cross(e, x - p);
      if (c * c <= a * a * squared_norm(e)) return true;
    }
    return false;
  }
  Box sq(x.x - a, x.x + a, x.y - a, x.y + a);
  for (const auto& p : v) {
    if (sq.contains(p)) return true;
  }
  auto corners = square_corners(x, a);
  for (const auto& c : corners) {
    if (contains(c)) return true;
  }
  if (v.size() >= 2) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.size() == 2 && i == 1) break;
      const Point& p = v[i];
      const Point& q = v[(i + 1) % v.size()];
      for (std::size_t j = 0; j < 4; ++j) {
        if (segments_meet(p, q, corners[j], corners[(j + 1) % 4])) return true;
      }
    }
  }
  return false;
}

bool ConvexBody::contains_body(const ConvexBody& inner) const {
  if (!inner.is_disc_) {
    for (const auto& p : inner.vertices_) {
      if (!contains(p)) return false;
    }
    return true;
  }
  if (is_disc_) {
    if (radius_ < inner.radius_) return false;
    Rational gap = radius_ - inner.radius_;
    return squared_norm(inner.center_ - center_) <= gap * gap;
  }
  if (vertices_.size() < 3 || !contains(inner.center_)) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Point e = vertices_[(i + 1) % vertices_.size()] - vertices_[i];
    Rational c = cross(e, inner.center_ - vertices_[i]);
    if (c * c < inner.radius_ * inner.radius_ * squared_norm(e)) return false;
  }
  return true;
}

bool ConvexBody::disjoint_from(const ConvexBody& other) const {
  if (is_disc_ && other.is_disc_) {
    Rational sum = radius_ + other.radius_;
    return squared_norm(center_ - other.center_) > sum * sum;
  }
  if (is_disc_) return other.polygon_squared_distance(center_) > radius_ * radius_;
  if (other.is_disc_) return polygon_squared_distance(other.center_) > other.radius_ * other.radius_;
  return !polygons_meet(vertices_, other.vertices_);
}

ConvexDiffRegion::ConvexDiffRegion(ConvexBody outer, std::vector<ConvexBody> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    if (!outer_.contains_body(holes_[i])) {
      throw std::invalid_argument("hole " + std::to_string(i) + " is not contained in the outer body");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!holes_[i].disjoint_from(holes_[j])) {
        throw std::invalid_argument("holes " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are not disjoint");
      }
    }
  }
}

bool ConvexDiffRegion::contains(const Point& x) const {
  if (!outer_.contains(x)) return false;
  for (const auto& h : holes_) {
    if (h.contains(x)) return false;
  }
  return true;
}

GradedDims convex_rank_rule(bool outer_met, std::size_t holes_met) {
  GradedDims g;
  if (!outer_met) {
    if (holes_met > 0) throw std::logic_error("a hole is met while its outer body is not");
    return g;
  }
  if (holes_met == 0) g.add(0, 1);
  else g.add(1, static_cast<long>(holes_met) - 1);
  return g;
}

}  // namespace sheafradon
