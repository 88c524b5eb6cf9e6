#include "sheafradon/radon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sheafradon/parallel.hpp"

namespace sheafradon {

std::string to_string(BirthKind k) {
  switch (k) {
    case BirthKind::minus_infinity: return "minus_infinity";
    case BirthKind::at_point: return "at_point";
    case BirthKind::just_after: return "just_after";
  }
  return "?";
}

std::string to_string(DeathKind k) {
  switch (k) {
    case DeathKind::at_point: return "at_point";
    case DeathKind::just_before: return "just_before";
    case DeathKind::plus_infinity: return "plus_infinity";
  }
  return "?";
}

bool Bar::contains(const Surd& u) const {
  switch (birth.kind) {
    case BirthKind::minus_infinity: break;
    case BirthKind::at_point:
      if (u < birth.level) return false;
      break;
    case BirthKind::just_after:
      if (u <= birth.level) return false;
      break;
  }
  switch (death.kind) {
    case DeathKind::plus_infinity: break;
    case DeathKind::at_point:
      if (u > death.level) return false;
      break;
    case DeathKind::just_before:
      if (u >= death.level) return false;
      break;
  }
  return true;
}

std::string Bar::to_string() const {
  std::ostringstream os;
  os << "H^" << degree << ' ';
  switch (birth.kind) {
    case BirthKind::minus_infinity: os << "(-inf"; break;
    case BirthKind::at_point: os << '[' << birth.level.to_string(); break;
    case BirthKind::just_after: os << '(' << birth.level.to_string(); break;
  }
  os << ", ";
  switch (death.kind) {
    case DeathKind::plus_infinity: os << "+inf)"; break;
    case DeathKind::at_point: os << death.level.to_string() << ']'; break;
    case DeathKind::just_before: os << death.level.to_string() << ')'; break;
  }
  if (mult != 1) os << " x" << mult;
  return os.str();
}

namespace {

// Position of an endpoint on the extended line; an endpoint sits just below
// or just above its level according to the decoration.
int birth_rank(BirthKind k) { return k == BirthKind::just_after ? 1 : 0; }
int death_rank(DeathKind k) { return k == DeathKind::just_before ? 0 : 1; }

std::strong_ordering compare_bars(const Bar& a, const Bar& b) {
  if (auto c = a.degree <=> b.degree; c != 0) return c;
  bool ai = a.birth.kind == BirthKind::minus_infinity;
  bool bi = b.birth.kind == BirthKind::minus_infinity;
  if (ai != bi) return ai ? std::strong_ordering::less : std::strong_ordering::greater;
  if (!ai) {
    if (auto c = a.birth.level <=> b.birth.level; c != 0) return c;
    if (auto c = birth_rank(a.birth.kind) <=> birth_rank(b.birth.kind); c != 0) return c;
  }
  ai = a.death.kind == DeathKind::plus_infinity;
  bi = b.death.kind == DeathKind::plus_infinity;
  if (ai != bi) return ai ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!ai) {
    if (auto c = a.death.level <=> b.death.level; c != 0) return c;
    if (auto c = death_rank(a.death.kind) <=> death_rank(b.death.kind); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool same_interval(const Bar& a, const Bar& b) {
  Bar x = a, y = b;
  x.mult = y.mult = 1;
  return x == y;
}

}  // namespace

DecoratedBarcode::DecoratedBarcode(std::vector<Bar> bars) {
  std::erase_if(bars, [](const Bar& b) { return b.mult == 0; });
  for (auto& b : bars) {
    if (b.mult < 0) throw std::invalid_argument("bar with negative multiplicity");
    if (b.birth.kind == BirthKind::minus_infinity) b.birth.level = Surd();
    if (b.death.kind == DeathKind::plus_infinity) b.death.level = Surd();
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) { return compare_bars(a, b) < 0; });
  for (auto& b : bars) {
    if (!bars_.empty() && same_interval(bars_.back(), b)) {
      bars_.back().mult += b.mult;
    } else {
      bars_.push_back(b);
    }
  }
}

long DecoratedBarcode::dim_at(int degree, const Surd& u) const {
  long n = 0;
  for (const auto& b : bars_) {
    if (b.degree == degree && b.contains(u)) n += b.mult;
  }
  return n;
}

std::string DecoratedBarcode::to_string() const {
  if (bars_.empty()) return "{}";
  std::string out;
  for (const auto& b : bars_) {
    if (!out.empty()) out += "; ";
    out += b.to_string();
  }
  return out;
}

DecoratedBarcode translate(const DecoratedBarcode& b, const Surd& delta) {
  std::vector<Bar> out = b.bars();
  for (auto& bar : out) {
    if (bar.birth.kind != BirthKind::minus_infinity) bar.birth.level = bar.birth.level + delta;
    if (bar.death.kind != DeathKind::plus_infinity) bar.death.level = bar.death.level + delta;
  }
  return DecoratedBarcode(std::move(out));
}

Surd DirectionalProfile::representative(std::size_t stratum) const {
  const std::size_t m = levels.size();
  if (stratum >= strata()) throw std::out_of_range("stratum index");
  if (m == 0) return Surd(0);
  if (stratum == 0) return levels.front() - Surd(1);
  if (stratum == 2 * m) return levels.back() + Surd(1);
  if (stratum % 2 == 1) return levels[stratum / 2];
  const std::size_t k = stratum / 2;
  return (levels[k - 1] + levels[k]) / Rational(2);
}

long DirectionalProfile::rank(int degree, long i, long j) const {
  auto it = ranks.find(degree);
  if (it == ranks.end()) return 0;
  const long s = static_cast<long>(strata());
  if (i < 0 || j < 0 || i >= s || j >= s) return 0;
  if (i > j) std::swap(i, j);
  return it->second[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

GradedDims DirectionalProfile::dims_at(std::size_t stratum) const {
  GradedDims g;
  for (const auto& [deg, table] : ranks) g.add(deg, table[stratum][stratum]);
  return g;
}

namespace {

Rational as_rational(const Surd& s) {
  if (!s.is_rational()) throw std::logic_error("expected a rational level, got " + s.to_string());
  return s.rational_part();
}

// Maximum of u.d over the corners of the L-infinity ball of radius a.
Rational corner_support(const Rational& a, const Direction& d) {
  Rational best = -a * d.p - a * d.q;
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      Rational v = a * sx * d.p + a * sy * d.q;
      if (v > best) best = v;
    }
  }
  return best;
}

}  // namespace

Surd ball_support(const BallSpec& ball, const Direction& d) {
  if (ball.radius < 0) throw std::invalid_argument("ball support needs a >= 0");
  if (ball.radius == 0) return Surd(0);
  if (ball.norm == Norm::linf) return Surd(corner_support(ball.radius, d));
  return -ConvexBody::disc(Point(0, 0), ball.radius).support_min(d);
}

namespace {

Surd shift_of(const ConvolvedSheaf& f, const Direction& d) {
  if (!f.ball) return Surd(0);
  if (f.base.backend() == Backend::grid && f.ball->norm != Norm::linf) {
    throw std::invalid_argument("grid objects are thickened by the L-infinity ball only");
  }
  return ball_support(*f.ball, d);
}

void sort_unique(std::vector<Surd>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Surd> base_criticals(const ConvolvedSheaf& f, const Direction& d) {
  std::vector<Surd> out;
  const Surd h = shift_of(f, d);
  if (f.base.backend() == Backend::grid) {
    const auto& grid = *f.base.grid();
    for (const auto& g : f.base.grid_generators()) {
      CellSet cl = closure(g.region);
      for (auto c : cl.cells()) {
        if (grid.dim(c) == 0) out.push_back(Surd(d.dot(grid.vertex(c))) - h);
      }
    }
  } else {
    for (const auto& g : f.base.convex_generators()) {
      out.push_back(g.region.outer().support_min(d) - h);
      for (const auto& hole : g.region.holes()) out.push_back(hole.support_min(d) - h);
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Surd> strata_reps(const std::vector<Surd>& levels) {
  DirectionalProfile p;
  p.levels = levels;
  std::vector<Surd> reps;
  for (std::size_t s = 0; s < p.strata(); ++s) reps.push_back(p.representative(s));
  return reps;
}

// One grid generator prepared for a sweep in direction d: the closure of its
// region as a complex refined by the given lines, the region inside it and
// the height max_{v in closure(c)} v.d of every cell.
struct Sweep {
  ComplexPtr complex;
  CellSet z;
  std::vector<Rational> height;

  CellSet sublevel(const Rational& u) const {
    CellSet s(complex);
    for (auto c : z.cells()) {
      if (height[c] <= u) s.insert(c);
    }
    return s;
  }
};

Sweep make_sweep(const CellSet& region, const Direction& d, const std::vector<Rational>& lines) {
  Subcomplex sub = subcomplex(closure(region));
  std::vector<bool> mask(sub.complex->cell_count());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = region.contains(sub.to_parent[i]);
  CellSet z(sub.complex, mask);

  Rational lo, hi;
  bool first = true;
  for (const auto& v : sub.complex->vertices()) {
    Rational h = d.dot(v);
    if (first || h < lo) lo = h;
    if (first || h > hi) hi = h;
    first = false;
  }
  std::vector<Rational> inside;
  for (const auto& s : lines) {
    if (s > lo && s < hi) inside.push_back(s);
  }
  Refinement r = refine_by_lines(*sub.complex, d, inside);
  Sweep sw{r.complex, z.transported(r), {}};
  const auto& cx = *sw.complex;
  sw.height.resize(cx.cell_count());
  for (std::size_t c = 0; c < cx.cell_count(); ++c) {
    auto vs = cx.closure_vertices(c);
    Rational best = d.dot(cx.vertex(vs.front()));
    for (auto v : vs) {
      Rational h = d.dot(cx.vertex(v));
      if (h > best) best = h;
    }
    sw.height[c] = best;
  }
  return sw;
}

struct StrataBar {
  int dim;
  std::size_t first;
  std::size_t last;
};

using SparseColumn = std::vector<std::pair<std::size_t, std::uint32_t>>;

// col <- col - factor * other, both sorted by row.
void axpy(SparseColumn& col, const SparseColumn& other, std::uint32_t factor, const Field& field) {
  SparseColumn out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.emplace_back(other[j].first, field.neg(field.mul(factor, other[j].second)));
      ++j;
    } else {
      std::uint32_t v = field.sub(col[i].second, field.mul(factor, other[j].second));
      if (v != 0) out.emplace_back(col[i].first, v);
      ++i;
      ++j;
    }
  }
  col = std::move(out);
}

// Persistence of the Borel-Moore chains of Z filtered by sublevel strata.
std::vector<StrataBar> sweep_bars(const Sweep& sw, const std::vector<Rational>& base_reps, const Field& field) {
  const auto& cx = *sw.complex;
  std::vector<std::size_t> cells = sw.z.cells();
  std::vector<std::size_t> filt(cx.cell_count(), 0);
  for (auto c : cells) {
    auto it = std::lower_bound(base_reps.begin(), base_reps.end(), sw.height[c]);
    if (it == base_reps.end()) throw std::logic_error("cell above the top stratum");
    filt[c] = static_cast<std::size_t>(it - base_reps.begin());
  }
  std::sort(cells.begin(), cells.end(), [&](std::size_t a, std::size_t b) {
    if (filt[a] != filt[b]) return filt[a] < filt[b];
    if (cx.dim(a) != cx.dim(b)) return cx.dim(a) < cx.dim(b);
    return a < b;
  });
  std::vector<long> pos(cx.cell_count(), -1);
  for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = static_cast<long>(i);

  std::vector<SparseColumn> cols(cells.size());
  std::vector<long> owner(cells.size(), -1);
  std::vector<bool> killed(cells.size(), false);
  std::vector<StrataBar> bars;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    SparseColumn& col = cols[j];
    for (auto [face, inc] : cx.boundary(cells[j])) {
      if (pos[face] >= 0) col.emplace_back(static_cast<std::size_t>(pos[face]), field.reduce(inc));
    }
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      long k = owner[col.back().first];
      if (k < 0) break;
      const SparseColumn& piv = cols[static_cast<std::size_t>(k)];
      std::uint32_t factor = field.mul(col.back().second, field.inv(piv.back().second));
      axpy(col, piv, factor, field);
    }
    if (!col.empty()) {
      std::size_t low = col.back().first;
      owner[low] = static_cast<long>(j);
      killed[low] = true;
      std::size_t b = filt[cells[low]], e = filt[cells[j]];
      if (e > b) bars.push_back({cx.dim(cells[low]), b, e - 1});
    }
  }
  const std::size_t top = base_reps.size() - 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cols[i].empty() && !killed[i]) bars.push_back({cx.dim(cells[i]), filt[cells[i]], top});
  }
  return bars;
}

using RankTables = std::map<int, std::vector<std::vector<long>>>;

void add_rank(RankTables& t, int degree, std::size_t i, std::size_t j, long v, std::size_t s) {
  if (v == 0) return;
  auto& table = t[degree];
  if (table.empty()) table.assign(s, std::vector<long>(s, 0));
  table[i][j] += v;
}

void grid_ranks(const ConvolvedSheaf& f, const Direction& d, const std::vector<Surd>& reps, RankMethod method,
                RankTables& out) {
  const Rational h = as_rational(shift_of(f, d));
  std::vector<Rational> base;
  for (const auto& r : reps) base.push_back(as_rational(r) + h);
  const std::size_t s = reps.size();
  for (const auto& g : f.base.grid_generators()) {
    if (g.region.empty()) continue;
    Sweep sw = make_sweep(g.region, d, base);
    if (method == RankMethod::persistence) {
      for (const auto& bar : sweep_bars(sw, base, f.base.field())) {
        for (std::size_t i = bar.first; i <= bar.last; ++i) {
          for (std::size_t j = i; j <= bar.last; ++j) add_rank(out, bar.dim + g.degree, i, j, g.mult, s);
        }
      }
      continue;
    }
    std::vector<CellSet> levels;
    for (const auto& u : base) levels.push_back(sw.sublevel(u));
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        CochainMap r = restriction_to_closed(levels[j], levels[i], f.base.field());
        for (int k = 0; k <= 2; ++k) {
          add_rank(out, k + g.degree, i, j, static_cast<long>(r.induced_rank(k)) * g.mult, s);
        }
      }
    }
  }
}

struct ConvexCounts {
  bool outer = false;
  std::size_t holes = 0;
};

ConvexCounts convex_counts(const ConvexGenerator& g, const Direction& d, const Surd& h, const Surd& t) {
  ConvexCounts c;
  c.outer = g.region.outer().support_min(d) - h <= t;
  for (const auto& hole : g.region.holes()) {
    if (hole.support_min(d) - h <= t) ++c.holes;
  }
  return c;
}

// Ranks of H_c(Z n H_hi) -> H_c(Z n H_lo) for one convex generator.
GradedDims convex_restriction_rank(const ConvexCounts& lo, const ConvexCounts& hi) {
  GradedDims g;
  if (lo.outer && hi.holes == 0) g.add(0, 1);
  if (lo.holes > 1) g.add(1, static_cast<long>(lo.holes) - 1);
  return g;
}

void convex_ranks(const ConvolvedSheaf& f, const Direction& d, const std::vector<Surd>& reps, RankTables& out) {
  const Surd h = shift_of(f, d);
  const std::size_t s = reps.size();
  for (const auto& g : f.base.convex_generators()) {
    std::vector<ConvexCounts> counts;
    for (const auto& t : reps) counts.push_back(convex_counts(g, d, h, t));
    for (std::size_t i = 0; i < s; ++i) {
      GradedDims dim = convex_rank_rule(counts[i].outer, counts[i].holes);
      for (const auto& [k, v] : dim.entries()) add_rank(out, k + g.degree, i, i, v * g.mult, s);
      for (std::size_t j = i + 1; j < s; ++j) {
        const GradedDims r = convex_restriction_rank(counts[i], counts[j]);
        for (const auto& [k, v] : r.entries()) {
          add_rank(out, k + g.degree, i, j, v * g.mult, s);
        }
      }
    }
  }
}

}  // namespace

std::vector<Surd> critical_levels(const ConvolvedSheaf& f, const Direction& d) { return base_criticals(f, d); }

DirectionalProfile profile(const ConvolvedSheaf& f, const Direction& d, RankMethod method,
                           const std::vector<Surd>& extra_levels) {
  DirectionalProfile p;
  p.direction = d;
  p.levels = base_criticals(f, d);
  p.levels.insert(p.levels.end(), extra_levels.begin(), extra_levels.end());
  sort_unique(p.levels);
  std::vector<Surd> reps = strata_reps(p.levels);
  if (f.base.backend() == Backend::grid) {
    grid_ranks(f, d, reps, method, p.ranks);
  } else {
    convex_ranks(f, d, reps, p.ranks);
  }
  return p;
}

DecoratedBarcode decompose(const DirectionalProfile& p) {
  const long s = static_cast<long>(p.strata());
  const long top = s - 1;
  std::vector<Bar> bars;
  for (const auto& [deg, table] : p.ranks) {
    for (long i = 0; i < s; ++i) {
      for (long j = i; j < s; ++j) {
        long mult = p.rank(deg, i, j) - p.rank(deg, i - 1, j) - p.rank(deg, i, j + 1) + p.rank(deg, i - 1, j + 1);
        if (mult < 0) {
          throw std::logic_error("negative interval multiplicity " + std::to_string(mult) + " in degree " +
                                 std::to_string(deg) + " on strata [" + std::to_string(i) + ", " +
                                 std::to_string(j) + "]");
        }
        if (mult == 0) continue;
        Bar b;
        b.degree = deg;
        b.mult = mult;
        if (i == 0) {
          b.birth.kind = BirthKind::minus_infinity;
        } else if (i % 2 == 1) {
          b.birth = {BirthKind::at_point, p.levels[static_cast<std::size_t>(i / 2)]};
        } else {
          b.birth = {BirthKind::just_after, p.levels[static_cast<std::size_t>(i / 2 - 1)]};
        }
        if (j == top) {
          b.death.kind = DeathKind::plus_infinity;
        } else if (j % 2 == 1) {
          b.death = {DeathKind::at_point, p.levels[static_cast<std::size_t>(j / 2)]};
        } else {
          b.death = {DeathKind::just_before, p.levels[static_cast<std::size_t>(j / 2)]};
        }
        bars.push_back(b);
      }
    }
  }
  return DecoratedBarcode(std::move(bars));
}

std::vector<Direction> default_directions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one direction");
  const double two_pi = 2 * std::numbers::pi;
  auto gap = [&](double a, double b) {
    double x = std::fmod(std::abs(a - b), two_pi);
    return std::min(x, two_pi - x);
  };
  for (std::int64_t height = 1;; ++height) {
    std::vector<Direction> pool;
    for (std::int64_t p = -height; p <= height; ++p) {
      for (std::int64_t q = -height; q <= height; ++q) {
        if ((p != 0 || q != 0) && std::gcd(p, q) == 1) pool.emplace_back(p, q);
      }
    }
    std::vector<Direction> out;
    for (std::size_t k = 0; k < n; ++k) {
      double target = two_pi * static_cast<double>(k) / static_cast<double>(n);
      const Direction* best = nullptr;
      double best_gap = 0;
      for (const auto& d : pool) {
        double g = gap(d.angle(), target);
        if (!best || g < best_gap - 1e-12) {
          best = &d;
          best_gap = g;
        }
      }
      out.push_back(*best);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < n && distinct; ++i) {
      for (std::size_t j = i + 1; j < n && distinct; ++j) distinct = !(out[i] == out[j]);
    }
    if (distinct) return out;
  }
}

Surd to_unit(const Surd& scaled, const Direction& d, Norm norm) {
  if (norm == Norm::l2) return scaled.divided_by_sqrt(d.norm2());
  return scaled / Rational(d.l1());
}

bool RadonSummary::has_phi() const {
  return !phi.empty() && std::all_of(phi.begin(), phi.end(), [](const auto& v) { return v.has_value(); });
}

std::optional<Surd> epigraph_level(const DecoratedBarcode& b) {
  if (b.bars().size() != 1) return std::nullopt;
  const Bar& bar = b.bars().front();
  if (bar.degree != 1 || bar.mult != 1 || bar.birth.kind != BirthKind::at_point ||
      bar.death.kind != DeathKind::plus_infinity) {
    return std::nullopt;
  }
  return bar.birth.level;
}

RadonSummary radon_summary(const ConvolvedSheaf& f, const std::vector<Direction>& directions) {
  RadonSummary s;
  s.directions = directions;
  s.barcodes.resize(directions.size());
  s.phi.resize(directions.size());
  parallel_for(directions.size(), [&](std::size_t i) {
    s.barcodes[i] = decompose(profile(f, directions[i]));
    s.phi[i] = epigraph_level(s.barcodes[i]);
  });
  return s;
}

namespace {

// Rank of H_c(Z n {x.d <= hi}) -> H_c(Z n {x.d <= lo}), computed directly.
GradedDims direct_restriction_rank(const SheafObject& f, const Direction& d, const Surd& lo, const Surd& hi) {
  GradedDims out;
  if (f.backend() == Backend::grid) {
    const Rational l = as_rational(lo), u = as_rational(hi);
    for (const auto& g : f.grid_generators()) {
      if (g.region.empty()) continue;
      Sweep sw = make_sweep(g.region, d, {l, u});
      CochainMap r = restriction_to_closed(sw.sublevel(u), sw.sublevel(l), f.field());
      GradedDims part;
      for (int k = 0; k <= 2; ++k) part.add(k, static_cast<long>(r.induced_rank(k)));
      out = out + part.shifted(g.degree).scaled(g.mult);
    }
  } else {
    for (const auto& g : f.convex_generators()) {
      auto a = convex_counts(g, d, Surd(0), lo);
      auto b = convex_counts(g, d, Surd(0), hi);
      out = out + convex_restriction_rank(a, b).shifted(g.degree).scaled(g.mult);
    }
  }
  return out;
}

GradedDims predicted_rank(const DecoratedBarcode& bc, const Surd& lo, const Surd& hi) {
  GradedDims g;
  for (const auto& b : bc.bars()) {
    if (b.contains(lo) && b.contains(hi)) g.add(b.degree, b.mult);
  }
  return g;
}

}  // namespace

CheckReport shift_identity_check(const SheafObject& f, const BallSpec& ball, const Direction& d) {
  CheckReport rep;
  const Surd h = ball_support(ball, d);
  ConvolvedSheaf plain{f, std::nullopt};
  ConvolvedSheaf thick{f, ball};
  DecoratedBarcode base = decompose(profile(plain, d));
  DirectionalProfile pa = profile(thick, d);
  DecoratedBarcode moved = decompose(pa);
  DecoratedBarcode expected = translate(base, -h);
  if (!(moved == expected)) {
    rep.fail("direction " + d.to_string() + ": barcode " + moved.to_string() + " but shifted base " +
             expected.to_string());
  }
  for (const Rational& frac : {Rational(0), make_rational(1, 2)}) {
    const Surd low_shift = frac * h;
    for (std::size_t s = 0; s < pa.strata(); ++s) {
      const Surd t = pa.representative(s);
      GradedDims direct = direct_restriction_rank(f, d, t + low_shift, t + h);
      GradedDims predicted = predicted_rank(base, t + low_shift, t + h);
      if (!(direct == predicted)) {
        rep.fail("direction " + d.to_string() + ", b/a = " + to_string(frac) + ", t = " + t.to_string() +
                 ": map rank " + direct.to_string() + ", barcode predicts " + predicted.to_string());
      }
    }
  }
  return rep;
}

long composed_kernel_stalk(const Direction& d, const Rational& t, const Point& x, const Rational& a) {
  const std::int64_t n = d.norm2();
  Surd gap = Surd(d.dot(x)) - Surd::sqrt_of(n, t);
  if (gap.sign() <= 0) return 1;
  return gap * gap <= Surd(a * a * n) ? 1 : 0;
}

bool thickened_incidence(const Direction& d, const Rational& t, const Point& x, const Rational& a) {
  return Surd(d.dot(x)) <= Surd::sqrt_of(d.norm2(), t + a);
}

HalfplaneStalkReport halfplane_stalk_verify(const std::vector<Direction>& dirs, const std::vector<Rational>& ts,
                                   const std::vector<Point>& xs, const std::vector<Rational>& radii) {
  HalfplaneStalkReport rep;
  for (const auto& d : dirs) {
    for (const auto& t : ts) {
      for (const auto& x : xs) {
        for (const auto& a : radii) {
          ++rep.samples;
          if (Surd(d.dot(x)) == Surd::sqrt_of(d.norm2(), t + a)) ++rep.boundary_cases;
          long lhs = composed_kernel_stalk(d, t, x, a);
          long rhs = thickened_incidence(d, t, x, a) ? 1 : 0;
          if (lhs != rhs) {
            ++rep.counterexamples;
            if (rep.first_counterexamples.size() < 5) {
              rep.first_counterexamples.push_back("d=" + d.to_string() + " t=" + to_string(t) +
                                                  " x=" + to_string(x) + " a=" + to_string(a));
            }
          }
        }
      }
    }
  }
  return rep;
}

CheckReport chi_c_conservation(const ConvolvedSheaf& f, const std::vector<Direction>& directions) {
  CheckReport rep;
  const long expected = f.base.euler_c();
  std::vector<std::string> errors(directions.size());
  parallel_for(directions.size(), [&](std::size_t i) {
    DirectionalProfile p = profile(f, directions[i]);
    long bottom = p.dims_at(0).euler();
    long tail = p.dims_at(p.strata() - 1).euler();
    if (bottom != 0 || tail != expected) {
      errors[i] = "direction " + directions[i].to_string() + ": chi below " + std::to_string(bottom) +
                  ", chi above " + std::to_string(tail) + ", expected " + std::to_string(expected);
    }
  });
  for (auto& e : errors) {
    if (!e.empty()) rep.fail(e);
  }
  return rep;
}

}  // namespace sheafradon
