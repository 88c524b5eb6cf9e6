#include "sheafradon/planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sheafradon {

// ---------------------------------------------------------------- Direction

Direction::Direction(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
  if (p == 0 && q == 0) throw std::invalid_argument("direction (0, 0)");
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("direction " + to_string() + " is not primitive");
  }
}

double Direction::angle() const { return std::atan2(static_cast<double>(q), static_cast<double>(p)); }

std::string Direction::to_string() const {
  return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

// ---------------------------------------------------------------------- Box

Box::Box(Rational x0, Rational x1, Rational y0, Rational y1)
    : xmin(std::move(x0)), xmax(std::move(x1)), ymin(std::move(y0)), ymax(std::move(y1)) {
  if (xmin > xmax || ymin > ymax) throw std::invalid_argument("box with min > max");
}

Box Box::from_segment(const Point& a, const Point& b) {
  if (a.x != b.x && a.y != b.y) {
    throw std::invalid_argument("segment " + sheafradon::to_string(a) + "-" +
                                sheafradon::to_string(b) + " is not axis-aligned");
  }
  return Box(std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y));
}

bool Box::contains(const Point& x) const {
  return xmin <= x.x && x.x <= xmax && ymin <= x.y && x.y <= ymax;
}

bool Box::interior_contains(const Point& x) const {
  return xmin < x.x && x.x < xmax && ymin < x.y && x.y < ymax;
}

bool Box::strictly_contains(const Box& inner) const {
  return xmin < inner.xmin && inner.xmax < xmax && ymin < inner.ymin && inner.ymax < ymax;
}

std::vector<Box> linf_dilate(const std::vector<Box>& boxes, const Rational& a) {
  if (a < 0) throw std::invalid_argument("linf_dilate needs a >= 0");
  std::vector<Box> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.emplace_back(b.xmin - a, b.xmax + a, b.ymin - a, b.ymax + a);
  return out;
}

// ------------------------------------------------------------ PlanarComplex

PlanarComplex PlanarComplex::from_cells(
    std::vector<Point> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::vector<std::vector<std::size_t>> face_cycles) {
  PlanarComplex c;
  c.vertices_ = std::move(vertices);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
  for (const auto& [u, v] : edges) {
    if (u >= c.vertices_.size() || v >= c.vertices_.size() || u == v) {
      throw std::invalid_argument("edge with invalid endpoints");
    }
    Edge e = c.vertices_[u] < c.vertices_[v] ? Edge{u, v} : Edge{v, u};
    auto key = std::minmax(u, v);
    if (!lookup.emplace(key, c.edges_.size()).second) {
      throw std::invalid_argument("duplicate edge");
    }
    c.edges_.push_back(e);
  }
  c.face_cycles_ = std::move(face_cycles);
  for (const auto& cycle : c.face_cycles_) {
    if (cycle.size() < 3) throw std::invalid_argument("face with fewer than 3 vertices");
    std::vector<FaceSide> sides;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t a = cycle[i];
      std::size_t b = cycle[(i + 1) % cycle.size()];
      auto it = lookup.find(std::minmax(a, b));
      if (it == lookup.end()) throw std::invalid_argument("face side is not an edge");
      const Edge& e = c.edges_[it->second];
      sides.push_back({it->second, e.tail == a ? 1 : -1});
    }
    c.faces_.push_back(std::move(sides));
  }
  c.index_incidences();
  return c;
}

void PlanarComplex::index_incidences() {
  boundary_.assign(cell_count(), {});
  coboundary_.assign(cell_count(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    std::size_t ec = edge_cell(e);
    boundary_[ec] = {{edges_[e].tail, -1}, {edges_[e].head, 1}};
    coboundary_[edges_[e].tail].push_back({ec, -1});
    coboundary_[edges_[e].head].push_back({ec, 1});
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::size_t fc = face_cell(f);
    for (const auto& side : faces_[f]) {
      boundary_[fc].push_back({edge_cell(side.edge), side.sign});
      coboundary_[edge_cell(side.edge)].push_back({fc, side.sign});
    }
  }
}

int PlanarComplex::dim(std::size_t cell) const {
  if (cell < vertices_.size()) return 0;
  if (cell < vertices_.size() + edges_.size()) return 1;
  if (cell < cell_count()) return 2;
  throw std::out_of_range("cell id out of range");
}

std::size_t PlanarComplex::local_index(std::size_t cell) const {
  switch (dim(cell)) {
    case 0: return cell;
    case 1: return cell - vertices_.size();
    default: return cell - vertices_.size() - edges_.size();
  }
}

int PlanarComplex::incidence(std::size_t higher, std::size_t lower) const {
  for (const auto& [c, s] : boundary_[higher]) {
    if (c == lower) return s;
  }
  return 0;
}

std::vector<std::size_t> PlanarComplex::closure_vertices(std::size_t cell) const {
  switch (dim(cell)) {
    case 0: return {cell};
    case 1: {
      const Edge& e = edges_[local_index(cell)];
      return {e.tail, e.head};
    }
    default: return face_cycles_[local_index(cell)];
  }
}

Point PlanarComplex::representative(std::size_t cell) const {
  auto vs = closure_vertices(cell);
  Point sum(0, 0);
  for (auto v : vs) sum = sum + vertices_[v];
  Rational scale(1);
  scale /= static_cast<unsigned long>(vs.size());
  return scale * sum;
}

namespace {

// Position of t among sorted cuts: (index, on_cut). Between cuts i and i+1
// gives (i, false). Outside gives nullopt.
std::optional<std::pair<std::size_t, bool>> axis_position(const std::vector<Rational>& cuts,
                                                          const Rational& t) {
  if (t < cuts.front() || t > cuts.back()) return std::nullopt;
  auto it = std::lower_bound(cuts.begin(), cuts.end(), t);
  std::size_t i = static_cast<std::size_t>(it - cuts.begin());
  if (*it == t) return std::make_pair(i, true);
  return std::make_pair(i - 1, false);
}

bool on_open_segment(const Point& a, const Point& b, const Point& x) {
  if (cross(b - a, x - a) != 0) return false;
  Rational t = dot(x - a, b - a);
  return t > 0 && t < squared_norm(b - a);
}

}  // namespace

std::optional<std::size_t> PlanarComplex::locate(const Point& x) const {
  if (grid_) {
    auto px = axis_position(grid_->xs, x.x);
    auto py = axis_position(grid_->ys, x.y);
    if (!px || !py) return std::nullopt;
    const std::size_t nx = grid_->xs.size();
    const std::size_t ny = grid_->ys.size();
    const std::size_t h_edges = (nx - 1) * ny;
    auto [i, xon] = *px;
    auto [j, yon] = *py;
    if (xon && yon) return i * ny + j;
    if (!xon && yon) return edge_cell(i * ny + j);
    if (xon && !yon) return edge_cell(h_edges + i * (ny - 1) + j);
    return face_cell(i * (ny - 1) + j);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == x) return v;
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (on_open_segment(vertices_[edges_[e].tail], vertices_[edges_[e].head], x)) {
      return edge_cell(e);
    }
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& cyc = face_cycles_[f];
    bool inside = true;
    for (std::size_t i = 0; i < cyc.size() && inside; ++i) {
      const Point& a = vertices_[cyc[i]];
      const Point& b = vertices_[cyc[(i + 1) % cyc.size()]];
      inside = cross(b - a, x - a) > 0;
    }
    if (inside) return face_cell(f);
  }
  return std::nullopt;
}

Box PlanarComplex::bounds() const {
  if (vertices_.empty()) throw std::logic_error("bounds of an empty complex");
  Box b(vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y);
  for (const auto& v : vertices_) {
    b.xmin = std::min(b.xmin, v.x);
    b.xmax = std::max(b.xmax, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

void PlanarComplex::validate() const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!(vertices_[edges_[e].tail] < vertices_[edges_[e].head])) {
      throw std::logic_error("edge " + std::to_string(e) + " not oriented lexicographically");
    }
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& cyc = face_cycles_[f];
    Rational area2 = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point& a = vertices_[cyc[i]];
      const Point& b = vertices_[cyc[(i + 1) % cyc.size()]];
      const Point& c = vertices_[cyc[(i + 2) % cyc.size()]];
      area2 += cross(a, b);
      if (cross(b - a, c - b) < 0) {
        throw std::logic_error("face " + std::to_string(f) + " is not convex");
      }
    }
    if (area2 <= 0) throw std::logic_error("face " + std::to_string(f) + " is not counterclockwise");
    // Boundary of the boundary vanishes.
    std::map<std::size_t, int> dd;
    for (const auto& [e, s] : boundary_[face_cell(f)]) {
      for (const auto& [v, t] : boundary_[e]) dd[v] += s * t;
    }
    for (const auto& [v, total] : dd) {
      if (total != 0) {
        throw std::logic_error("boundary of boundary nonzero at face " + std::to_string(f));
      }
    }
  }
}

PlanarComplex build_grid(const std::vector<Rational>& x_cuts, const std::vector<Rational>& y_cuts) {
  auto check = [](const std::vector<Rational>& cuts, const char* axis) {
    if (cuts.size() < 2) {
      throw std::invalid_argument(std::string("build_grid: need >= 2 ") + axis + " cuts");
    }
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (!(cuts[i - 1] < cuts[i])) {
        throw std::invalid_argument(std::string("build_grid: ") + axis +
                                    " cuts not strictly increasing");
      }
    }
  };
  check(x_cuts, "x");
  check(y_cuts, "y");
  const std::size_t nx = x_cuts.size();
  const std::size_t ny = y_cuts.size();
  std::vector<Point> vertices;
  vertices.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) vertices.emplace_back(x_cuts[i], y_cuts[j]);
  }
  auto vid = [ny](std::size_t i, std::size_t j) { return i * ny + j; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) edges.emplace_back(vid(i, j), vid(i + 1, j));
  }
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j + 1 < ny; ++j) edges.emplace_back(vid(i, j), vid(i, j + 1));
  }
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i + 1 < nx; ++i) {
    for (std::size_t j = 0; j + 1 < ny; ++j) {
      faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  PlanarComplex c = PlanarComplex::from_cells(std::move(vertices), edges, std::move(faces));
  c.grid_ = GridAxes{x_cuts, y_cuts};
  return c;
}

// --------------------------------------------------------------- refinement

Refinement refine_by_line(const PlanarComplex& c, const Direction& d, const Rational& s) {
  const std::size_t nv = c.vertex_count();
  std::vector<int> side(nv);
  for (std::size_t v = 0; v < nv; ++v) side[v] = sgn(d.dot(c.vertex(v)) - s);

  auto face_split = [&](std::size_t f) {
    bool neg = false, pos = false;
    for (auto v : c.face_cycle(f)) {
      neg = neg || side[v] < 0;
      pos = pos || side[v] > 0;
    }
    return neg && pos;
  };
  bool any = false;
  for (std::size_t f = 0; f < c.face_count() && !any; ++f) any = face_split(f);
  for (std::size_t e = 0; e < c.edge_count() && !any; ++e) {
    any = side[c.edge(e).tail] * side[c.edge(e).head] < 0;
  }
  if (!any) {
    Refinement r;
    r.complex = std::make_shared<PlanarComplex>(c);
    r.cell_map.resize(c.cell_count());
    for (std::size_t i = 0; i < c.cell_count(); ++i) r.cell_map[i] = {i};
    return r;
  }

  std::vector<Point> vertices = c.vertices();
  std::vector<std::optional<std::size_t>> cut_vertex(c.edge_count());
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    if (side[ed.tail] * side[ed.head] < 0) {
      const Point& a = c.vertex(ed.tail);
      const Point& b = c.vertex(ed.head);
      Rational lambda = (s - d.dot(a)) / d.dot(b - a);
      cut_vertex[e] = vertices.size();
      vertices.push_back(a + lambda * (b - a));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> edge_image(c.edge_count());
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    if (cut_vertex[e]) {
      edge_image[e] = {edges.size(), edges.size() + 1};
      edges.emplace_back(ed.tail, *cut_vertex[e]);
      edges.emplace_back(*cut_vertex[e], ed.head);
    } else {
      edge_image[e] = {edges.size()};
      edges.emplace_back(ed.tail, ed.head);
    }
  }

  std::vector<std::vector<std::size_t>> faces;
  struct FaceImage {
    std::vector<std::size_t> faces;
    std::optional<std::size_t> chord;
  };
  std::vector<FaceImage> face_image(c.face_count());
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    const auto& cyc = c.face_cycle(f);
    std::vector<std::size_t> expanded;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      expanded.push_back(cyc[i]);
      std::size_t e = c.face(f)[i].edge;
      if (cut_vertex[e]) expanded.push_back(*cut_vertex[e]);
    }
    if (!face_split(f)) {
      face_image[f].faces = {faces.size()};
      faces.push_back(std::move(expanded));
      continue;
    }
    auto on_line = [&](std::size_t v) { return v >= nv || side[v] == 0; };
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      if (on_line(expanded[i])) zeros.push_back(i);
    }
    if (zeros.size() != 2) throw std::logic_error("refine_by_line: non-convex face split");
    auto arc = [&](std::size_t from, std::size_t to) {
      std::vector<std::size_t> out;
      for (std::size_t i = from;; i = (i + 1) % expanded.size()) {
        out.push_back(expanded[i]);
        if (i == to) break;
      }
      return out;
    };
    auto first = arc(zeros[0], zeros[1]);
    auto second = arc(zeros[1], zeros[0]);
    // Negative side first, for a deterministic numbering.
    bool first_negative = side[first[1]] < 0;
    if (!first_negative) std::swap(first, second);
    face_image[f].faces = {faces.size(), faces.size() + 1};
    face_image[f].chord = edges.size();
    edges.emplace_back(expanded[zeros[0]], expanded[zeros[1]]);
    faces.push_back(std::move(first));
    faces.push_back(std::move(second));
  }

  auto refined = std::make_shared<PlanarComplex>(
      PlanarComplex::from_cells(std::move(vertices), edges, std::move(faces)));
  Refinement r;
  r.cell_map.resize(c.cell_count());
  for (std::size_t v = 0; v < nv; ++v) r.cell_map[v] = {v};
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    auto& img = r.cell_map[c.edge_cell(e)];
    img.push_back(refined->edge_cell(edge_image[e][0]));
    if (cut_vertex[e]) {
      img.push_back(*cut_vertex[e]);
      img.push_back(refined->edge_cell(edge_image[e][1]));
    }
  }
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    auto& img = r.cell_map[c.face_cell(f)];
    img.push_back(refined->face_cell(face_image[f].faces[0]));
    if (face_image[f].chord) {
      img.push_back(refined->edge_cell(*face_image[f].chord));
      img.push_back(refined->face_cell(face_image[f].faces[1]));
    }
  }
  r.complex = std::move(refined);
  return r;
}

Refinement refine_by_lines(const PlanarComplex& c, const Direction& d,
                           const std::vector<Rational>& levels) {
  Refinement acc;
  acc.complex = std::make_shared<PlanarComplex>(c);
  acc.cell_map.resize(c.cell_count());
  for (std::size_t i = 0; i < c.cell_count(); ++i) acc.cell_map[i] = {i};
  for (const auto& s : levels) {
    Refinement step = refine_by_line(*acc.complex, d, s);
    for (auto& img : acc.cell_map) {
      std::vector<std::size_t> next;
      for (auto cell : img) {
        const auto& sub = step.cell_map[cell];
        next.insert(next.end(), sub.begin(), sub.end());
      }
      img = std::move(next);
    }
    acc.complex = std::move(step.complex);
  }
  return acc;
}

// ------------------------------------------------------------------ CellSet

CellSet::CellSet(ComplexPtr parent) : parent_(std::move(parent)) {
  mask_.assign(parent_ ? parent_->cell_count() : 0, false);
}

CellSet::CellSet(ComplexPtr parent, std::vector<bool> mask)
    : parent_(std::move(parent)), mask_(std::move(mask)) {
  if (!parent_ || mask_.size() != parent_->cell_count()) {
    throw std::invalid_argument("cell-set mask size does not match its complex");
  }
}

CellSet CellSet::all(ComplexPtr parent) {
  std::size_t n = parent->cell_count();
  return CellSet(std::move(parent), std::vector<bool>(n, true));
}

CellSet CellSet::from_cells(ComplexPtr parent, const std::vector<std::size_t>& cells) {
  CellSet s(std::move(parent));
  for (auto c : cells) {
    if (c >= s.mask_.size()) throw std::out_of_range("cell id out of range");
    s.mask_[c] = true;
  }
  return s;
}

std::size_t CellSet::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<std::size_t> CellSet::cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

void CellSet::check_same_parent(const CellSet& other) const {
  if (parent_ != other.parent_) throw std::invalid_argument("cell-sets on different complexes");
}

CellSet CellSet::united(const CellSet& other) const {
  check_same_parent(other);
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || other.mask_[i];
  return out;
}

CellSet CellSet::intersected(const CellSet& other) const {
  check_same_parent(other);
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_[i];
  return out;
}

CellSet CellSet::minus(const CellSet& other) const {
  check_same_parent(other);
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && !other.mask_[i];
  return out;
}

bool CellSet::subset_of(const CellSet& other) const {
  check_same_parent(other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

bool CellSet::is_closed() const {
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (!mask_[c]) continue;
    for (const auto& [b, s] : parent_->boundary(c)) {
      if (!mask_[b]) return false;
    }
  }
  return true;
}

bool CellSet::is_open() const {
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (!mask_[c]) continue;
    for (const auto& [b, s] : parent_->coboundary(c)) {
      if (!mask_[b]) return false;
    }
  }
  return true;
}

std::optional<std::array<std::size_t, 3>> CellSet::violation() const {
  // In a planar complex the only chains with an intermediate cell are
  // vertex < edge < face.
  const PlanarComplex& c = *parent_;
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    std::size_t fc = c.face_cell(f);
    if (!mask_[fc]) continue;
    for (const auto& [e, s] : c.boundary(fc)) {
      if (mask_[e]) continue;
      for (const auto& [v, t] : c.boundary(e)) {
        if (mask_[v]) return std::array<std::size_t, 3>{v, e, fc};
      }
    }
  }
  return std::nullopt;
}

bool CellSet::has_closed_part(const CellSet& part) const {
  check_same_parent(part);
  if (!part.subset_of(*this)) return false;
  for (auto c : part.cells()) {
    for (const auto& [b, s] : parent_->boundary(c)) {
      if (mask_[b] && !part.mask_[b]) return false;
    }
  }
  return true;
}

bool CellSet::has_open_part(const CellSet& part) const {
  check_same_parent(part);
  if (!part.subset_of(*this)) return false;
  for (auto c : part.cells()) {
    for (const auto& [b, s] : parent_->coboundary(c)) {
      if (mask_[b] && !part.mask_[b]) return false;
    }
  }
  return true;
}

CellSet CellSet::transported(const Refinement& r) const {
  if (r.cell_map.size() != mask_.size()) {
    throw std::invalid_argument("refinement does not start from this cell-set's complex");
  }
  CellSet out(r.complex);
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (!mask_[c]) continue;
    for (auto n : r.cell_map[c]) out.mask_[n] = true;
  }
  return out;
}

CellSet closure(const CellSet& z) {
  CellSet out = z;
  const PlanarComplex& c = *z.parent();
  // Faces, then edges: one pass per dimension from the top suffices.
  for (std::size_t cell = c.cell_count(); cell-- > 0;) {
    if (!out.contains(cell)) continue;
    for (const auto& [b, s] : c.boundary(cell)) out.insert(b);
  }
  return out;
}

CellSet star(const CellSet& z) {
  CellSet out = z;
  const PlanarComplex& c = *z.parent();
  for (std::size_t cell = 0; cell < c.cell_count(); ++cell) {
    if (!out.contains(cell)) continue;
    for (const auto& [b, s] : c.coboundary(cell)) out.insert(b);
  }
  return out;
}

bool is_locally_closed(const CellSet& z) { return z.is_locally_closed(); }

Subcomplex subcomplex(const CellSet& closed) {
  if (!closed.is_closed()) throw std::invalid_argument("subcomplex needs a closed cell-set");
  const PlanarComplex& c = *closed.parent();
  std::vector<std::size_t> vmap(c.vertex_count(), SIZE_MAX);
  std::vector<Point> vertices;
  Subcomplex out;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (!closed.contains(v)) continue;
    vmap[v] = vertices.size();
    vertices.push_back(c.vertex(v));
    out.to_parent.push_back(v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_parents;
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (!closed.contains(c.edge_cell(e))) continue;
    edges.emplace_back(vmap[c.edge(e).tail], vmap[c.edge(e).head]);
    edge_parents.push_back(c.edge_cell(e));
  }
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> face_parents;
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    if (!closed.contains(c.face_cell(f))) continue;
    std::vector<std::size_t> cyc;
    for (auto v : c.face_cycle(f)) cyc.push_back(vmap[v]);
    faces.push_back(std::move(cyc));
    face_parents.push_back(c.face_cell(f));
  }
  out.to_parent.insert(out.to_parent.end(), edge_parents.begin(), edge_parents.end());
  out.to_parent.insert(out.to_parent.end(), face_parents.begin(), face_parents.end());
  out.complex = std::make_shared<PlanarComplex>(
      PlanarComplex::from_cells(std::move(vertices), edges, std::move(faces)));
  return out;
}

CellSet halfplane_cells(const ComplexPtr& c, const Direction& d, const Rational& s,
                        HalfPlane side) {
  std::vector<int> vs(c->vertex_count());
  for (std::size_t v = 0; v < vs.size(); ++v) vs[v] = sgn(d.dot(c->vertex(v)) - s);
  CellSet out(c);
  for (std::size_t cell = 0; cell < c->cell_count(); ++cell) {
    bool neg = false, zero = false, pos = false;
    for (auto v : c->closure_vertices(cell)) {
      neg = neg || vs[v] < 0;
      zero = zero || vs[v] == 0;
      pos = pos || vs[v] > 0;
    }
    if (neg && pos) {
      throw std::invalid_argument("halfplane_cells: complex not refined by the line");
    }
    bool inside = side == HalfPlane::closed_below ? !pos : (!pos && neg);
    if (inside) out.insert(cell);
  }
  return out;
}

}  // namespace sheafradon
