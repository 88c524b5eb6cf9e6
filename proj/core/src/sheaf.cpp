#include "sheafradon/sheaf.hpp"

#include <algorithm>
#include <set>

#include "sheafradon/parallel.hpp"

namespace sheafradon {

std::string to_string(Backend b) { return b == Backend::grid ? "grid" : "convex"; }

KernelSpec KernelSpec::radon() { return {KernelKind::radon, Rational(0), Norm::l2}; }

KernelSpec KernelSpec::radon_thickened(const Rational& a) {
  if (a < 0) throw std::invalid_argument("thickened Radon kernel needs a >= 0");
  return {KernelKind::radon_thickened, a, Norm::l2};
}

KernelSpec KernelSpec::delta(const Rational& a, Norm norm) {
  if (a < 0) throw std::invalid_argument("Delta kernel needs a >= 0");
  return {KernelKind::delta, a, norm};
}

KernelSpec KernelSpec::zt(const Rational& a, Norm norm) {
  if (a < 0) throw std::invalid_argument("Z kernel needs a >= 0");
  return {KernelKind::zt, a, norm};
}

ChiArrow::ChiArrow(Rational a, Rational b, KernelKind k) : from(std::move(a)), to(std::move(b)), kernel(k) {
  if (!(from >= to && to >= 0)) throw std::invalid_argument("chi arrow needs a >= b >= 0");
}

// -------------------------------------------------------------- SheafObject

SheafObject SheafObject::on_grid(Field field, ComplexPtr grid, std::vector<GridGenerator> gens) {
  if (!grid || !grid->grid_axes()) throw std::invalid_argument("grid backend needs a rectilinear grid");
  SheafObject f;
  f.backend_ = Backend::grid;
  f.field_ = field;
  f.window_ = grid->bounds();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].region.parent() != grid) {
      throw std::invalid_argument("generator " + std::to_string(i) + " lives on another complex");
    }
    if (gens[i].mult < 1) throw std::invalid_argument("generator multiplicity must be >= 1");
    if (auto bad = gens[i].region.violation()) {
      throw std::invalid_argument("generator " + std::to_string(i) +
                                  " is not locally closed (chain " + std::to_string((*bad)[0]) +
                                  " < " + std::to_string((*bad)[1]) + " < " +
                                  std::to_string((*bad)[2]) + ")");
    }
  }
  f.grid_ = std::move(grid);
  f.grid_gens_ = std::move(gens);
  return f;
}

SheafObject SheafObject::on_convex(Field field, Box window, std::vector<ConvexGenerator> gens) {
  SheafObject f;
  f.backend_ = Backend::convex;
  f.field_ = field;
  f.window_ = std::move(window);
  for (const auto& g : gens) {
    if (g.mult < 1) throw std::invalid_argument("generator multiplicity must be >= 1");
  }
  f.convex_gens_ = std::move(gens);
  return f;
}

std::size_t SheafObject::generator_count() const {
  return backend_ == Backend::grid ? grid_gens_.size() : convex_gens_.size();
}

SheafObject SheafObject::generator(std::size_t i) const {
  SheafObject g = *this;
  if (backend_ == Backend::grid) g.grid_gens_ = {grid_gens_.at(i)};
  else g.convex_gens_ = {convex_gens_.at(i)};
  return g;
}

namespace {

void extend(std::optional<Box>& acc, const Box& b) {
  if (!acc) {
    acc = b;
    return;
  }
  acc->xmin = std::min(acc->xmin, b.xmin);
  acc->xmax = std::max(acc->xmax, b.xmax);
  acc->ymin = std::min(acc->ymin, b.ymin);
  acc->ymax = std::max(acc->ymax, b.ymax);
}

bool in_region(const CellSet& region, const Point& p) {
  auto cell = region.parent()->locate(p);
  return cell && region.contains(*cell);
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Cuts of `axis` strictly inside (lo, hi), plus lo, hi and any extras in range.
std::vector<Rational> clipped_cuts(const std::vector<Rational>& axis, const Rational& lo,
                                   const Rational& hi, const std::vector<Rational>& extra = {}) {
  std::vector<Rational> out{lo, hi};
  for (const auto& c : axis) {
    if (lo < c && c < hi) out.push_back(c);
  }
  for (const auto& c : extra) {
    if (lo <= c && c <= hi) out.push_back(c);
  }
  return sorted_unique(std::move(out));
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  Rational x0 = std::max(a.xmin, b.xmin), x1 = std::min(a.xmax, b.xmax);
  Rational y0 = std::max(a.ymin, b.ymin), y1 = std::min(a.ymax, b.ymax);
  if (x0 > x1 || y0 > y1) return std::nullopt;
  return Box(x0, x1, y0, y1);
}

Box square(const Point& x, const Rational& r) { return Box(x.x - r, x.x + r, x.y - r, x.y + r); }

ComplexPtr local_grid(const SheafObject& f, const Box& box, const std::vector<Rational>& extra_x = {},
                      const std::vector<Rational>& extra_y = {}) {
  const GridAxes& axes = *f.grid()->grid_axes();
  return std::make_shared<PlanarComplex>(
      build_grid(clipped_cuts(axes.xs, box.xmin, box.xmax, extra_x),
                 clipped_cuts(axes.ys, box.ymin, box.ymax, extra_y)));
}

template <class Pred>
CellSet cells_where(const ComplexPtr& c, Pred pred) {
  CellSet out(c);
  for (std::size_t cell = 0; cell < c->cell_count(); ++cell) {
    if (pred(c->representative(cell))) out.insert(cell);
  }
  return out;
}

void require_grid(const SheafObject& f, const char* what) {
  if (f.backend() != Backend::grid) throw std::invalid_argument(std::string(what) + " needs the grid backend");
}

}  // namespace

std::optional<Box> SheafObject::support_box() const {
  std::optional<Box> acc;
  if (backend_ == Backend::grid) {
    for (const auto& g : grid_gens_) {
      for (auto cell : g.region.cells()) {
        for (auto v : grid_->closure_vertices(cell)) {
          const Point& p = grid_->vertex(v);
          extend(acc, Box(p.x, p.x, p.y, p.y));
        }
      }
    }
  } else {
    for (const auto& g : convex_gens_) extend(acc, g.region.outer().bounding_box());
  }
  return acc;
}

long SheafObject::euler_c() const {
  long e = 0;
  if (backend_ == Backend::grid) {
    for (const auto& g : grid_gens_) {
      e += g.mult * (g.degree % 2 == 0 ? 1 : -1) * sheafradon::euler_c(g.region);
    }
  } else {
    for (const auto& g : convex_gens_) e += g.mult * (g.degree % 2 == 0 ? 1 : -1) * g.region.euler_c();
  }
  return e;
}

void SheafObject::check_margin(const Rational& a) const {
  auto box = support_box();
  if (!box) return;
  Rational r = a < 0 ? Rational(-a) : a;
  Box grown(box->xmin - r, box->xmax + r, box->ymin - r, box->ymax + r);
  if (!window_.strictly_contains(grown)) {
    throw MarginError("window does not strictly contain the support thickened by " +
                      to_string(r));
  }
}

// -------------------------------------------------------------------- stalk

GradedDims stalk(const SheafObject& f, const Point& x) {
  if (!f.window().contains(x)) throw std::out_of_range("point " + to_string(x) + " outside the window");
  GradedDims out;
  if (f.backend() == Backend::grid) {
    auto cell = f.grid()->locate(x);
    for (const auto& g : f.grid_generators()) {
      if (g.region.contains(*cell)) out.add(g.degree, g.mult);
    }
  } else {
    for (const auto& g : f.convex_generators()) {
      if (g.region.contains(x)) out.add(g.degree, g.mult);
    }
  }
  return out;
}

SheafObject tensor_restrict(const SheafObject& f, const CellSet& region) {
  require_grid(f, "tensor_restrict");
  if (region.parent() != f.grid()) throw std::invalid_argument("restriction region on another grid");
  std::vector<GridGenerator> gens;
  for (std::size_t i = 0; i < f.grid_generators().size(); ++i) {
    const auto& g = f.grid_generators()[i];
    CellSet cut = g.region.intersected(region);
    if (!cut.is_locally_closed()) {
      throw std::invalid_argument("generator " + std::to_string(i) +
                                  " meets the region in a set that is not locally closed");
    }
    gens.push_back({std::move(cut), g.degree, g.mult});
  }
  return SheafObject::on_grid(f.field(), f.grid(), std::move(gens));
}

SheafObject regrid(const SheafObject& f, const ComplexPtr& finer) {
  require_grid(f, "regrid");
  if (!(finer->bounds() == f.window())) throw std::invalid_argument("regrid: windows differ");
  std::vector<GridGenerator> gens;
  for (const auto& g : f.grid_generators()) {
    gens.push_back({cells_where(finer, [&](const Point& p) { return in_region(g.region, p); }),
                    g.degree, g.mult});
  }
  return SheafObject::on_grid(f.field(), finer, std::move(gens));
}

Triangle triangle_split(const SheafObject& f, const CellSet& closed_part) {
  require_grid(f, "triangle_split");
  if (f.grid_generators().size() != 1) throw std::invalid_argument("triangle_split needs one generator");
  const GridGenerator& g = f.grid_generators().front();
  if (!g.region.has_closed_part(closed_part)) {
    throw std::invalid_argument("triangle_split: Z' is not closed in Z");
  }
  CellSet open = g.region.minus(closed_part);
  auto one = [&](const CellSet& z) {
    std::vector<GridGenerator> gens;
    if (!z.empty()) gens.push_back({z, g.degree, g.mult});
    return SheafObject::on_grid(f.field(), f.grid(), std::move(gens));
  };
  return Triangle{one(open), f, one(closed_part), extension_from_open(g.region, open, f.field()),
                  restriction_to_closed(g.region, closed_part, f.field())};
}

// -------------------------------------------------------------- convolution

GradedDims convolve_stalk(const SheafObject& f, const BallSpec& ball, const Point& x) {
  if (!f.window().contains(x)) throw std::out_of_range("point " + to_string(x) + " outside the window");
  const Rational& a = ball.radius;
  GradedDims out;
  if (f.backend() == Backend::convex) {
    if (a < 0) throw std::invalid_argument("convex backend does not support negative radii");
    for (const auto& g : f.convex_generators()) {
      bool met = g.region.outer().meets_ball(x, a, ball.norm);
      std::size_t holes = 0;
      for (const auto& h : g.region.holes()) holes += h.meets_ball(x, a, ball.norm) ? 1 : 0;
      out = out + convex_rank_rule(met, holes).shifted(g.degree).scaled(g.mult);
    }
    return out;
  }
  if (ball.norm != Norm::linf) throw std::invalid_argument("grid backend needs the L-infinity ball");
  if (a == 0) return stalk(f, x);
  const bool open = a < 0;
  const Rational r = open ? Rational(-a) : a;
  const Box sq = square(x, r);
  auto clip = intersect(sq, f.window());
  ComplexPtr local = local_grid(f, *clip);
  for (const auto& g : f.grid_generators()) {
    CellSet z = cells_where(local, [&](const Point& p) {
      return in_region(g.region, p) && (!open || sq.interior_contains(p));
    });
    out = out + hcc(z, f.field()).shifted(g.degree - (open ? 2 : 0)).scaled(g.mult);
  }
  return out;
}

GradedDims compose_kernel_stalk(const KernelSpec& k, const SheafObject& f, const Point& x) {
  if (k.kind != KernelKind::delta) throw std::invalid_argument("stalk composition implemented for Delta_a only");
  if (!f.window().contains(x)) throw std::out_of_range("point " + to_string(x) + " outside the window");
  GradedDims out;
  if (f.backend() == Backend::convex) {
    for (const auto& g : f.convex_generators()) {
      bool met = g.region.outer().meets_ball_direct(x, k.a, k.norm);
      std::size_t holes = 0;
      for (const auto& h : g.region.holes()) holes += h.meets_ball_direct(x, k.a, k.norm) ? 1 : 0;
      out = out + convex_rank_rule(met, holes).shifted(g.degree).scaled(g.mult);
    }
    return out;
  }
  if (k.norm != Norm::linf) throw std::invalid_argument("grid backend needs the L-infinity ball");
  // Whole-window refinement by the ball's sides, then F restricted to the ball.
  const GridAxes& axes = *f.grid()->grid_axes();
  const Box& w = f.window();
  auto finer = std::make_shared<PlanarComplex>(
      build_grid(clipped_cuts(axes.xs, w.xmin, w.xmax, {x.x - k.a, x.x, x.x + k.a}),
                 clipped_cuts(axes.ys, w.ymin, w.ymax, {x.y - k.a, x.y, x.y + k.a})));
  SheafObject moved = regrid(f, finer);
  const Box sq = square(x, k.a);
  SheafObject restricted = tensor_restrict(moved, cells_where(finer, [&](const Point& p) { return sq.contains(p); }));
  for (const auto& g : restricted.grid_generators()) {
    out = out + hcc(g.region, f.field()).shifted(g.degree).scaled(g.mult);
  }
  return out;
}

// ---------------------------------------------------------------- StalkField

GradedDims StalkField::at(const Point& x) const {
  auto cell = complex->locate(x);
  if (!cell) throw std::out_of_range("point " + to_string(x) + " outside the stalk field");
  return dims[*cell];
}

std::vector<int> StalkField::degrees() const {
  std::set<int> ds;
  for (const auto& g : dims) {
    for (const auto& [k, v] : g.entries()) ds.insert(k);
  }
  return {ds.begin(), ds.end()};
}

namespace {

// Rank, per degree, of the generization map from the stalk at x to the stalk
// at a nearby x2 (|x2 - x| <= eps / 2 in the max norm).
GradedDims generization_rank(const SheafObject& f, const Rational& a, const Point& x, const Point& x2,
                             const Rational& eps) {
  GradedDims out;
  if (a >= 0) {
    // Sections near x: the ball of radius a + eps; restrict to the ball at x2.
    const Box big = square(x, a + eps);
    const Box small = square(x2, a);
    auto clip = intersect(big, f.window());
    ComplexPtr local = local_grid(f, *clip, {small.xmin, small.xmax}, {small.ymin, small.ymax});
    for (const auto& g : f.grid_generators()) {
      CellSet z = cells_where(local, [&](const Point& p) { return in_region(g.region, p); });
      CellSet part = cells_where(local, [&](const Point& p) { return in_region(g.region, p) && small.contains(p); });
      CochainMap m = restriction_to_closed(z, part, f.field());
      for (int k = 0; k < 3; ++k) out.add(k + g.degree, static_cast<long>(m.induced_rank(k)) * g.mult);
    }
    return out;
  }
  // Open balls: sections near x live on the ball of radius r - eps, which
  // extends by zero into the ball at x2.
  const Rational r = -a;
  const Box big = square(x2, r);
  const Box small = square(x, r - eps);
  auto clip = intersect(big, f.window());
  ComplexPtr local = local_grid(f, *clip, {small.xmin, small.xmax}, {small.ymin, small.ymax});
  for (const auto& g : f.grid_generators()) {
    CellSet z = cells_where(local, [&](const Point& p) { return in_region(g.region, p) && big.interior_contains(p); });
    CellSet part = cells_where(local, [&](const Point& p) {
      return in_region(g.region, p) && small.interior_contains(p);
    });
    CochainMap m = extension_from_open(z, part, f.field());
    for (int k = 0; k < 3; ++k) out.add(k + g.degree - 2, static_cast<long>(m.induced_rank(k)) * g.mult);
  }
  return out;
}

Rational min_gap(const std::vector<Rational>& cuts) {
  Rational best = cuts[1] - cuts[0];
  for (std::size_t i = 2; i < cuts.size(); ++i) best = std::min(best, Rational(cuts[i] - cuts[i - 1]));
  return best;
}

}  // namespace

StalkField convolve_grid(const SheafObject& f, const Rational& a, Norm norm) {
  require_grid(f, "convolve_grid");
  if (norm != Norm::linf) throw std::invalid_argument("grid backend needs the L-infinity ball");
  f.check_margin(a);
  const GridAxes& axes = *f.grid()->grid_axes();
  const Box& w = f.window();
  auto strata_cuts = [&](const std::vector<Rational>& base, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (const auto& c : base) {
      for (const Rational& v : {Rational(c - a), c, Rational(c + a)}) {
        if (lo <= v && v <= hi) out.push_back(v);
      }
    }
    return sorted_unique(std::move(out));
  };
  std::vector<Rational> xs = strata_cuts(axes.xs, w.xmin, w.xmax);
  std::vector<Rational> ys = strata_cuts(axes.ys, w.ymin, w.ymax);

  StalkField sf;
  sf.complex = std::make_shared<PlanarComplex>(build_grid(xs, ys));
  sf.field = f.field();
  sf.radius = a;
  const PlanarComplex& c = *sf.complex;
  const BallSpec ball{Norm::linf, a};

  sf.dims.resize(c.cell_count());
  std::vector<char> constant(c.cell_count(), 1);
  parallel_for(c.cell_count(), [&](std::size_t cell) {
    Point rep = c.representative(cell);
    sf.dims[cell] = convolve_stalk(f, ball, rep);
    // Sample points between the representative and each closure vertex.
    if (c.dim(cell) > 0) {
      for (auto v : c.closure_vertices(cell)) {
        Point mid = make_rational(1, 2) * (rep + c.vertex(v));
        if (!(convolve_stalk(f, ball, mid) == sf.dims[cell])) constant[cell] = 0;
      }
    }
  });
  sf.constancy_verified = std::all_of(constant.begin(), constant.end(), [](char v) { return v != 0; });
  if (!sf.constancy_verified) throw std::logic_error("convolve_grid: stalk not constant on a stratum");

  const Rational eps = std::min(min_gap(xs), min_gap(ys)) / 4;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t lo = 0; lo < c.cell_count(); ++lo) {
    std::set<std::size_t> above;
    for (const auto& [u, s] : c.coboundary(lo)) {
      above.insert(u);
      for (const auto& [uu, t] : c.coboundary(u)) above.insert(uu);
    }
    for (auto u : above) pairs.emplace_back(lo, u);
  }
  std::vector<GradedDims> ranks(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    auto [lo, up] = pairs[i];
    Point x = c.representative(lo);
    Point target = c.representative(up);
    Point delta = target - x;
    Rational reach = std::max(Rational(abs(delta.x)), Rational(abs(delta.y)));
    Rational lambda = std::min(Rational(1), Rational(eps / (2 * reach)));
    ranks[i] = generization_rank(f, a, x, x + lambda * delta, eps);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [lo, up] = pairs[i];
    for (const auto& [k, r] : ranks[i].entries()) {
      if (r > std::min(sf.dims[lo].at(k), sf.dims[up].at(k))) {
        throw std::logic_error("convolve_grid: generization rank exceeds a stalk dimension");
      }
    }
    sf.ranks.emplace(pairs[i], std::move(ranks[i]));
  }
  return sf;
}

IndicatorResult recognize_indicator(const StalkField& sf, int degree) {
  IndicatorResult res;
  const PlanarComplex& c = *sf.complex;
  CellSet support(sf.complex);
  for (std::size_t cell = 0; cell < c.cell_count(); ++cell) {
    long d = sf.dims[cell].at(degree);
    if (d > 1) {
      res.diagnostic = "stalk of dimension " + std::to_string(d) + " at " + to_string(c.representative(cell));
      return res;
    }
    if (d == 1) support.insert(cell);
  }
  for (const auto& [pair, r] : sf.ranks) {
    if (support.contains(pair.first) && support.contains(pair.second) && r.at(degree) != 1) {
      res.diagnostic = "generization map not an isomorphism between " +
                       to_string(c.representative(pair.first)) + " and " +
                       to_string(c.representative(pair.second));
      return res;
    }
  }
  if (!support.is_locally_closed()) {
    res.diagnostic = "support is not locally closed";
    return res;
  }
  res.support = std::move(support);
  return res;
}

std::optional<SheafObject> field_as_object(const StalkField& sf, std::string* why) {
  auto degrees = sf.degrees();
  if (degrees.size() > 1) {
    if (why) *why = "cohomology in " + std::to_string(degrees.size()) + " degrees";
    return std::nullopt;
  }
  std::vector<GridGenerator> gens;
  if (!degrees.empty()) {
    IndicatorResult ind = recognize_indicator(sf, degrees.front());
    if (!ind.support) {
      if (why) *why = ind.diagnostic;
      return std::nullopt;
    }
    gens.push_back({*ind.support, degrees.front(), 1});
  }
  return SheafObject::on_grid(sf.field, sf.complex, std::move(gens));
}

std::optional<StalkField> convolve_twice(const SheafObject& f, const Rational& a, const Rational& b,
                                         std::string* why) {
  require_grid(f, "convolve_twice");
  std::vector<SheafObject> parts;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i < f.generator_count(); ++i) {
    GridGenerator g = f.grid_generators()[i];
    const long mult = g.mult;
    g.mult = 1;
    SheafObject single = SheafObject::on_grid(f.field(), f.grid(), {g});
    auto mid = field_as_object(convolve_grid(single, a), why);
    if (!mid) return std::nullopt;
    std::vector<GridGenerator> scaled = mid->grid_generators();
    for (auto& s : scaled) s.mult = mult;
    parts.push_back(SheafObject::on_grid(f.field(), mid->grid(), std::move(scaled)));
    const GridAxes& axes = *mid->grid()->grid_axes();
    xs.insert(xs.end(), axes.xs.begin(), axes.xs.end());
    ys.insert(ys.end(), axes.ys.begin(), axes.ys.end());
  }
  if (parts.empty()) return convolve_grid(f, a + b);
  auto common = std::make_shared<PlanarComplex>(build_grid(sorted_unique(xs), sorted_unique(ys)));
  std::vector<GridGenerator> gens;
  for (const auto& p : parts) {
    SheafObject moved = regrid(p, common);
    gens.insert(gens.end(), moved.grid_generators().begin(), moved.grid_generators().end());
  }
  return convolve_grid(SheafObject::on_grid(f.field(), common, std::move(gens)), b);
}

std::optional<Point> first_difference(const StalkField& lhs, const StalkField& rhs) {
  const GridAxes& la = *lhs.complex->grid_axes();
  const GridAxes& ra = *rhs.complex->grid_axes();
  std::vector<Rational> xs = la.xs, ys = la.ys;
  xs.insert(xs.end(), ra.xs.begin(), ra.xs.end());
  ys.insert(ys.end(), ra.ys.begin(), ra.ys.end());
  PlanarComplex common = build_grid(sorted_unique(xs), sorted_unique(ys));
  for (std::size_t cell = 0; cell < common.cell_count(); ++cell) {
    Point p = common.representative(cell);
    auto lc = lhs.complex->locate(p);
    auto rc = rhs.complex->locate(p);
    if (!lc || !rc) return p;
    if (!(lhs.dims[*lc] == rhs.dims[*rc])) return p;
  }
  return std::nullopt;
}

}  // namespace sheafradon
