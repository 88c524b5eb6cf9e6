#include "sheafradon/scene.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sheafradon {

using nlohmann::json;

Region Region::box(Point lo, Point hi) {
  Region r;
  r.kind = Kind::box;
  r.points = {std::move(lo), std::move(hi)};
  return r;
}

Region Region::segment(Point a, Point b) {
  Region r;
  r.kind = Kind::segment;
  r.points = {std::move(a), std::move(b)};
  return r;
}

Region Region::polygon(std::vector<Point> vertices, bool closed) {
  Region r;
  r.kind = Kind::polygon;
  r.points = std::move(vertices);
  r.closed = {closed, true, true, true};
  return r;
}

Region Region::disc(Point center, Rational radius) {
  Region r;
  r.kind = Kind::disc;
  r.points = {std::move(center)};
  r.radius = std::move(radius);
  return r;
}

Region Region::diff(Region outer, std::vector<Region> holes) {
  Region r;
  r.kind = Kind::diff;
  r.children.push_back(std::move(outer));
  for (auto& h : holes) r.children.push_back(std::move(h));
  return r;
}

Region Region::union_of(std::vector<Region> parts) {
  Region r;
  r.kind = Kind::union_of;
  r.children = std::move(parts);
  return r;
}

bool operator==(const Region& a, const Region& b) {
  if (a.kind != b.kind || a.points != b.points || a.children != b.children) return false;
  switch (a.kind) {
    case Region::Kind::box: return a.closed == b.closed;
    case Region::Kind::segment: return a.closed[0] == b.closed[0] && a.closed[1] == b.closed[1];
    case Region::Kind::polygon: return a.closed[0] == b.closed[0];
    case Region::Kind::disc: return a.radius == b.radius;
    case Region::Kind::diff: return true;
    case Region::Kind::union_of: return a.disjoint == b.disjoint;
  }
  return false;
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& x) {
  if (cross(b - a, x - a) != 0) return false;
  Rational t = dot(x - a, b - a);
  return t >= 0 && t <= squared_norm(b - a);
}

// Exact even-odd test; boundary points report `boundary`.
bool in_polygon(const std::vector<Point>& vs, const Point& x, bool boundary) {
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(vs[i], vs[(i + 1) % n], x)) return boundary;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % n];
    if ((p.y > x.y) != (q.y > x.y)) {
      // x-coordinate of the crossing, compared without division
      Rational lhs = (x.x - p.x) * (q.y - p.y);
      Rational rhs = (x.y - p.y) * (q.x - p.x);
      if ((q.y > p.y) ? lhs < rhs : lhs > rhs) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

bool Region::contains(const Point& x) const {
  switch (kind) {
    case Kind::box: {
      const Point& lo = points[0];
      const Point& hi = points[1];
      if (x.x < lo.x || x.x > hi.x || x.y < lo.y || x.y > hi.y) return false;
      if (!closed[0] && x.x == lo.x) return false;
      if (!closed[1] && x.x == hi.x) return false;
      if (!closed[2] && x.y == lo.y) return false;
      if (!closed[3] && x.y == hi.y) return false;
      return true;
    }
    case Kind::segment:
      if (!on_segment(points[0], points[1], x)) return false;
      if (!closed[0] && x == points[0]) return false;
      if (!closed[1] && x == points[1]) return false;
      return true;
    case Kind::polygon: return in_polygon(points, x, closed[0]);
    case Kind::disc: return squared_norm(x - points[0]) <= radius * radius;
    case Kind::diff:
      if (!children[0].contains(x)) return false;
      return std::none_of(children.begin() + 1, children.end(), [&](const Region& h) { return h.contains(x); });
    case Kind::union_of:
      return std::any_of(children.begin(), children.end(), [&](const Region& p) { return p.contains(x); });
  }
  return false;
}

Box Region::bounds() const {
  switch (kind) {
    case Kind::disc:
      return Box(points[0].x - radius, points[0].x + radius, points[0].y - radius, points[0].y + radius);
    case Kind::diff: return children[0].bounds();
    case Kind::union_of: {
      if (children.empty()) throw std::invalid_argument("empty union has no bounds");
      Box b = children[0].bounds();
      for (const auto& c : children) {
        Box o = c.bounds();
        b = Box(std::min(b.xmin, o.xmin), std::max(b.xmax, o.xmax), std::min(b.ymin, o.ymin),
                std::max(b.ymax, o.ymax));
      }
      return b;
    }
    default: {
      Box b(points[0].x, points[0].x, points[0].y, points[0].y);
      for (const auto& p : points) {
        b = Box(std::min(b.xmin, p.x), std::max(b.xmax, p.x), std::min(b.ymin, p.y), std::max(b.ymax, p.y));
      }
      return b;
    }
  }
}

// ------------------------------------------------------------------ parsing

namespace {

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where, e.what());
    }
  }
  throw InputError(where, "expected an integer or a rational string such as \"3/2\"");
}

Point read_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where, "expected a point [x, y]");
  return Point(read_rational(j[0], where + "/0"), read_rational(j[1], where + "/1"));
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, std::string("missing \"") + key + "\"");
  return *it;
}

bool read_flag(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected \"closed\" or \"open\"");
  const auto s = j.get<std::string>();
  if (s == "closed") return true;
  if (s == "open") return false;
  throw InputError(where, "expected \"closed\" or \"open\", got \"" + s + "\"");
}

Region read_region(const json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) throw InputError(where, "a region is an object with exactly one kind key");
  const std::string kind = j.begin().key();
  const json& body = j.begin().value();
  const std::string at = where + "/" + kind;
  if (kind == "box") {
    Region r = Region::box(read_point(member(body, "min", at), at + "/min"),
                           read_point(member(body, "max", at), at + "/max"));
    if (r.points[0].x > r.points[1].x || r.points[0].y > r.points[1].y) throw InputError(at, "min exceeds max");
    if (body.contains("side_flags")) {
      const json& f = body["side_flags"];
      const char* names[4] = {"left", "right", "bottom", "top"};
      for (int i = 0; i < 4; ++i) {
        if (f.contains(names[i])) r.closed[i] = read_flag(f[names[i]], at + "/side_flags/" + names[i]);
      }
    }
    return r;
  }
  if (kind == "segment") {
    Region r = Region::segment(read_point(member(body, "a", at), at + "/a"),
                               read_point(member(body, "b", at), at + "/b"));
    if (body.contains("end_flags")) {
      const json& f = body["end_flags"];
      if (f.contains("a")) r.closed[0] = read_flag(f["a"], at + "/end_flags/a");
      if (f.contains("b")) r.closed[1] = read_flag(f["b"], at + "/end_flags/b");
    }
    return r;
  }
  if (kind == "polygon") {
    const json& vs = member(body, "vertices", at);
    if (!vs.is_array() || vs.size() < 3) throw InputError(at + "/vertices", "need at least three vertices");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(read_point(vs[i], at + "/vertices/" + std::to_string(i)));
    bool closed = body.contains("closure") ? read_flag(body["closure"], at + "/closure") : true;
    return Region::polygon(std::move(pts), closed);
  }
  if (kind == "disc") {
    Rational r = read_rational(member(body, "radius", at), at + "/radius");
    if (r <= 0) throw InputError(at + "/radius", "radius must be positive");
    return Region::disc(read_point(member(body, "center", at), at + "/center"), r);
  }
  if (kind == "diff") {
    Region outer = read_region(member(body, "outer", at), at + "/outer");
    std::vector<Region> holes;
    if (body.contains("holes")) {
      const json& hs = body["holes"];
      if (!hs.is_array()) throw InputError(at + "/holes", "expected an array");
      for (std::size_t i = 0; i < hs.size(); ++i) holes.push_back(read_region(hs[i], at + "/holes/" + std::to_string(i)));
    }
    return Region::diff(std::move(outer), std::move(holes));
  }
  if (kind == "union") {
    const json& ps = member(body, "parts", at);
    if (!ps.is_array() || ps.empty()) throw InputError(at + "/parts", "expected a nonempty array");
    std::vector<Region> parts;
    for (std::size_t i = 0; i < ps.size(); ++i) parts.push_back(read_region(ps[i], at + "/parts/" + std::to_string(i)));
    Region r = Region::union_of(std::move(parts));
    if (body.contains("disjoint")) {
      if (!body["disjoint"].is_boolean()) throw InputError(at + "/disjoint", "expected a boolean");
      r.disjoint = body["disjoint"].get<bool>();
    }
    return r;
  }
  throw InputError(where, "unknown region kind \"" + kind + "\"");
}

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

const char* flag(bool closed) { return closed ? "closed" : "open"; }

json region_json(const Region& r) {
  switch (r.kind) {
    case Region::Kind::box:
      return {{"box",
               {{"min", point_json(r.points[0])},
                {"max", point_json(r.points[1])},
                {"side_flags",
                 {{"left", flag(r.closed[0])}, {"right", flag(r.closed[1])}, {"bottom", flag(r.closed[2])},
                  {"top", flag(r.closed[3])}}}}}};
    case Region::Kind::segment:
      return {{"segment",
               {{"a", point_json(r.points[0])},
                {"b", point_json(r.points[1])},
                {"end_flags", {{"a", flag(r.closed[0])}, {"b", flag(r.closed[1])}}}}}};
    case Region::Kind::polygon: {
      json vs = json::array();
      for (const auto& p : r.points) vs.push_back(point_json(p));
      return {{"polygon", {{"vertices", vs}, {"closure", flag(r.closed[0])}}}};
    }
    case Region::Kind::disc:
      return {{"disc", {{"center", point_json(r.points[0])}, {"radius", to_string(r.radius)}}}};
    case Region::Kind::diff: {
      json hs = json::array();
      for (std::size_t i = 1; i < r.children.size(); ++i) hs.push_back(region_json(r.children[i]));
      return {{"diff", {{"outer", region_json(r.children[0])}, {"holes", hs}}}};
    }
    case Region::Kind::union_of: {
      json ps = json::array();
      for (const auto& c : r.children) ps.push_back(region_json(c));
      return {{"union", {{"parts", ps}, {"disjoint", r.disjoint}}}};
    }
  }
  return {};
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("", "scene must be a JSON object");
  Scene s;
  if (j.contains("field")) {
    if (!j["field"].is_number_unsigned()) throw InputError("/field", "expected a prime");
    auto p = j["field"].get<std::uint64_t>();
    if (p > 0x7fffffffULL || !is_prime(static_cast<std::uint32_t>(p))) throw InputError("/field", "not a prime below 2^31");
    s.field = static_cast<std::uint32_t>(p);
  }
  const json& backend = member(j, "backend", "");
  if (backend == "grid") {
    s.backend = Backend::grid;
  } else if (backend == "convex") {
    s.backend = Backend::convex;
  } else {
    throw InputError("/backend", "expected \"grid\" or \"convex\"");
  }
  if (j.contains("margin")) s.margin = read_rational(j["margin"], "/margin");
  if (s.margin <= 0) throw InputError("/margin", "margin must be positive");
  const json& gens = member(j, "generators", "");
  if (!gens.is_array()) throw InputError("/generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string at = "/generators/" + std::to_string(i);
    SceneGenerator g;
    g.region = read_region(member(gens[i], "region", at), at + "/region");
    if (gens[i].contains("degree")) {
      if (!gens[i]["degree"].is_number_integer()) throw InputError(at + "/degree", "expected an integer");
      g.degree = gens[i]["degree"].get<int>();
    }
    if (gens[i].contains("mult")) {
      if (!gens[i]["mult"].is_number_integer() || gens[i]["mult"].get<long>() < 1) {
        throw InputError(at + "/mult", "expected a positive integer");
      }
      g.mult = gens[i]["mult"].get<long>();
    }
    s.generators.push_back(std::move(g));
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open scene file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string write_scene(const Scene& s) {
  json gens = json::array();
  for (const auto& g : s.generators) {
    gens.push_back({{"region", region_json(g.region)}, {"degree", g.degree}, {"mult", g.mult}});
  }
  json j = {{"field", s.field},
            {"backend", s.backend == Backend::grid ? "grid" : "convex"},
            {"margin", to_string(s.margin)},
            {"generators", gens}};
  return j.dump(2) + "\n";
}

void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path, "cannot write scene file");
  out << write_scene(s);
}

// ---------------------------------------------------------------- compiling

namespace {

void grid_cuts(const Region& r, const std::string& where, std::set<Rational>& xs, std::set<Rational>& ys) {
  switch (r.kind) {
    case Region::Kind::disc: throw InputError(where, "discs need the convex backend");
    case Region::Kind::segment:
      if (r.points[0].x != r.points[1].x && r.points[0].y != r.points[1].y) {
        throw InputError(where, "grid segments must be axis-aligned");
      }
      break;
    case Region::Kind::polygon:
      for (std::size_t i = 0; i < r.points.size(); ++i) {
        const Point& p = r.points[i];
        const Point& q = r.points[(i + 1) % r.points.size()];
        if (p.x != q.x && p.y != q.y) throw InputError(where, "grid polygons must be rectilinear");
      }
      break;
    case Region::Kind::diff:
    case Region::Kind::union_of:
      for (std::size_t i = 0; i < r.children.size(); ++i) {
        grid_cuts(r.children[i], where + "/" + std::to_string(i), xs, ys);
      }
      return;
    case Region::Kind::box: break;
  }
  for (const auto& p : r.points) {
    xs.insert(p.x);
    ys.insert(p.y);
  }
}

ConvexBody convex_body(const Region& r, const std::string& where) {
  try {
    switch (r.kind) {
      case Region::Kind::disc: return ConvexBody::disc(r.points[0], r.radius);
      case Region::Kind::box:
        if (!std::all_of(r.closed.begin(), r.closed.end(), [](bool c) { return c; })) {
          throw InputError(where, "the convex backend takes closed boxes only");
        }
        return ConvexBody::polygon({r.points[0], {r.points[1].x, r.points[0].y}, r.points[1], {r.points[0].x, r.points[1].y}});
      case Region::Kind::segment:
        if (!r.closed[0] || !r.closed[1]) throw InputError(where, "the convex backend takes closed segments only");
        return ConvexBody::polygon(r.points);
      case Region::Kind::polygon:
        if (!r.closed[0]) throw InputError(where, "the convex backend takes closed polygons only");
        return ConvexBody::polygon(r.points);
      default: throw InputError(where, "expected a convex body");
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(where, e.what());
  }
}

void convex_parts(const Region& r, const std::string& where, std::vector<ConvexDiffRegion>& out) {
  if (r.kind == Region::Kind::union_of) {
    if (!r.disjoint) throw InputError(where, "the convex backend needs disjoint unions");
    std::size_t first = out.size();
    for (std::size_t i = 0; i < r.children.size(); ++i) convex_parts(r.children[i], where + "/" + std::to_string(i), out);
    for (std::size_t i = first; i < out.size(); ++i) {
      for (std::size_t j = first; j < i; ++j) {
        if (!out[i].outer().disjoint_from(out[j].outer())) throw InputError(where, "union parts overlap");
      }
    }
    return;
  }
  if (r.kind == Region::Kind::diff) {
    ConvexBody outer = convex_body(r.children[0], where + "/outer");
    std::vector<ConvexBody> holes;
    for (std::size_t i = 1; i < r.children.size(); ++i) {
      holes.push_back(convex_body(r.children[i], where + "/holes/" + std::to_string(i - 1)));
    }
    try {
      out.emplace_back(std::move(outer), std::move(holes));
    } catch (const std::invalid_argument& e) {
      throw InputError(where, e.what());
    }
    return;
  }
  out.emplace_back(convex_body(r, where), std::vector<ConvexBody>{});
}

Box scene_window(const Scene& s) {
  std::optional<Box> b;
  for (const auto& g : s.generators) {
    Box o = g.region.bounds();
    if (!b) {
      b = o;
    } else {
      b = Box(std::min(b->xmin, o.xmin), std::max(b->xmax, o.xmax), std::min(b->ymin, o.ymin), std::max(b->ymax, o.ymax));
    }
  }
  if (!b) b = Box(0, 0, 0, 0);
  return Box(b->xmin - s.margin, b->xmax + s.margin, b->ymin - s.margin, b->ymax + s.margin);
}

}  // namespace

SheafObject compile(const Scene& s) {
  const Field field(s.field);
  const Box window = scene_window(s);
  if (s.backend == Backend::convex) {
    std::vector<ConvexGenerator> gens;
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      std::vector<ConvexDiffRegion> parts;
      convex_parts(s.generators[i].region, "/generators/" + std::to_string(i) + "/region", parts);
      for (auto& p : parts) gens.push_back({std::move(p), s.generators[i].degree, s.generators[i].mult});
    }
    return SheafObject::on_convex(field, window, std::move(gens));
  }
  std::set<Rational> xs{window.xmin, window.xmax}, ys{window.ymin, window.ymax};
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    grid_cuts(s.generators[i].region, "/generators/" + std::to_string(i) + "/region", xs, ys);
  }
  auto grid = std::make_shared<const PlanarComplex>(
      build_grid(std::vector<Rational>(xs.begin(), xs.end()), std::vector<Rational>(ys.begin(), ys.end())));
  std::vector<GridGenerator> gens;
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    CellSet z(grid);
    for (std::size_t c = 0; c < grid->cell_count(); ++c) {
      if (s.generators[i].region.contains(grid->representative(c))) z.insert(c);
    }
    if (!z.is_locally_closed()) {
      throw InputError("/generators/" + std::to_string(i) + "/region", "region is not locally closed");
    }
    gens.push_back({std::move(z), s.generators[i].degree, s.generators[i].mult});
  }
  return SheafObject::on_grid(field, std::move(grid), std::move(gens));
}

}  // namespace sheafradon
