#include "sheafradon/reference_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sheafradon/distance.hpp"
#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/report.hpp"

namespace sheafradon {

void CheckResult::fail(const std::string& why) {
  pass = false;
  ++failure_count;
  if (failures.size() < 8) failures.push_back(why);
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"name", c.name},
                           {"status", c.pass ? "PASS" : "FAIL"},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"runtime_s", std::round(c.seconds * 1000) / 1000},
                           {"failure_count", c.failure_count},
                           {"failures", c.failures}});
  }
  return j.dump(2) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

CheckResult start(int id, std::string name) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

Rational half() { return make_rational(1, 2); }

Bar half_line(int degree, const Surd& birth) {
  Bar b;
  b.degree = degree;
  b.birth = {BirthKind::at_point, birth};
  return b;
}

Rational positive(const Rational& v) { return v > 0 ? v : Rational(0); }

ConvolvedSheaf plain(const SheafObject& f) { return {f, std::nullopt}; }
ConvolvedSheaf thick(const SheafObject& f, Norm norm, const Rational& a) { return {f, BallSpec{norm, a}}; }

}  // namespace

// --------------------------------------------------------------------------

CheckResult check_disc_barcodes(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(1, "disc barcodes: one degree-0 bar [-r, inf) per direction");
  const auto dirs = default_directions(o.directions);
  std::size_t rows = 0;
  for (const Rational& radius : {half(), Rational(1), Rational(2)}) {
    SheafObject f = compile(disc_scene(radius));
    RadonSummary s = radon_summary(plain(f), dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      ++rows;
      const Surd birth = Surd::sqrt_of(dirs[i].norm2(), -radius);
      DecoratedBarcode expected({half_line(0, birth)});
      if (!(s.barcodes[i] == expected)) {
        r.fail("r=" + to_string(radius) + " d=" + dirs[i].to_string() + ": " + s.barcodes[i].to_string());
        continue;
      }
      if (!(to_unit(birth, dirs[i]) == Surd(-radius))) r.fail("unit birth not -r at " + dirs[i].to_string());
    }
  }
  r.expected = "3 radii x " + std::to_string(dirs.size()) + " directions, exact";
  r.computed = std::to_string(rows - r.failure_count) + "/" + std::to_string(rows) + " barcodes exact";
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

namespace {

// Closed forms for the thickened notched square with the L-infinity ball.
bool linf_h0(const Point& x, const Rational& a) {
  return a < 1 && x.x >= -1 - a && x.x <= 1 + a && x.y > -1 + a && x.y < 1 - a;
}
bool linf_h1(const Point& x, const Rational& a) {
  return a >= 1 && x.x >= -1 - a && x.x <= 1 + a && x.y >= 1 - a && x.y <= a - 1;
}

// The same with the Euclidean ball.
GradedDims l2_expected(const Point& x, const Rational& a) {
  const Rational gx = positive(Rational(abs(x.x) - 1));
  const Rational gy = positive(Rational(abs(x.y) - 1));
  const Rational a2 = a * a;
  const bool in_s = gx * gx + gy * gy <= a2;
  const bool in_i = gx * gx + (x.y - 1) * (x.y - 1) <= a2;
  const bool in_j = gx * gx + (x.y + 1) * (x.y + 1) <= a2;
  if (in_i && in_j) return GradedDims{{1, 1}};
  if (in_s && !in_i && !in_j) return GradedDims{{0, 1}};
  return {};
}

}  // namespace

CheckResult check_thickening_thresholds(const SuiteOptions&) {
  Timer timer;
  CheckResult r = start(2, "thickened notched square: H0/H1 supports and the threshold at a = 1");
  const std::vector<Rational> radii{0, half(), make_rational(99, 100), 1, make_rational(3, 2)};

  SheafObject grid = compile(notched_square_scene(Backend::grid));
  std::ostringstream grid_summary;
  for (const auto& a : radii) {
    StalkField sf = convolve_grid(grid, a);
    for (int degree : {0, 1}) {
      IndicatorResult ind = recognize_indicator(sf, degree);
      if (!ind.support) {
        r.fail("grid a=" + to_string(a) + " H" + std::to_string(degree) + " not an indicator: " + ind.diagnostic);
        continue;
      }
      const auto& cx = *sf.complex;
      std::size_t wrong = 0;
      for (std::size_t c = 0; c < cx.cell_count(); ++c) {
        Point p = cx.representative(c);
        bool want = degree == 0 ? linf_h0(p, a) : linf_h1(p, a);
        if (want != ind.support->contains(c)) ++wrong;
      }
      if (wrong) r.fail("grid a=" + to_string(a) + " H" + std::to_string(degree) + ": " + std::to_string(wrong) + " cells differ");
      grid_summary << "a=" << to_string(a) << " H" << degree << " cells=" << ind.support->size() << "; ";
    }
    if (sf.degrees().size() > 0 && sf.degrees().back() > 1) r.fail("grid a=" + to_string(a) + ": cohomology above degree 1");
  }

  SheafObject convex = compile(notched_square_scene(Backend::convex));
  std::size_t samples = 0;
  for (const auto& a : radii) {
    const BallSpec ball{Norm::l2, a};
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 40; ++j) {
        Point x(make_rational(-60 + 3 * i, 20), make_rational(-60 + 3 * j, 20));
        ++samples;
        GradedDims got = convolve_stalk(convex, ball, x);
        GradedDims want = l2_expected(x, a);
        if (!(got == want)) {
          r.fail("convex a=" + to_string(a) + " x=" + to_string(x) + ": " + got.to_string() + " vs " + want.to_string());
        }
      }
    }
  }
  // The jump itself: at the center H1 is absent just below a = 1 and present at 1.
  for (const auto& [a, want] : {std::pair{make_rational(99, 100), GradedDims{{0, 1}}}, std::pair{Rational(1), GradedDims{{1, 1}}}}) {
    GradedDims got = convolve_stalk(convex, BallSpec{Norm::l2, a}, Point(0, 0));
    if (!(got == want)) r.fail("center stalk at a=" + to_string(a) + " is " + got.to_string());
  }
  r.expected = "grid supports equal the closed forms for a in {0,1/2,99/100,1,3/2}; convex stalks match at 41x41 points";
  r.computed = grid_summary.str() + std::to_string(samples) + " convex samples, " + std::to_string(r.failure_count) + " failures";
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

CheckResult check_epigraph(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(3, "notched square: one degree-1 bar [|y2|-|y1|, inf), shifted by -a under thickening");
  const auto dirs = default_directions(o.directions);
  const std::vector<Rational> radii{half(), 1, make_rational(3, 2)};
  double worst = 0;
  std::size_t barcodes = 0;

  for (Backend backend : {Backend::convex, Backend::grid}) {
    const std::string tag = backend == Backend::convex ? "convex" : "grid";
    const Norm norm = backend == Backend::convex ? Norm::l2 : Norm::linf;
    SheafObject f = compile(notched_square_scene(backend));
    RadonSummary base = radon_summary(plain(f), dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      ++barcodes;
      const Direction& d = dirs[i];
      const Surd phi(Rational(std::abs(d.q) - std::abs(d.p)));
      if (!base.phi[i] || !(*base.phi[i] == phi)) {
        r.fail(tag + " d=" + d.to_string() + ": " + base.barcodes[i].to_string());
        continue;
      }
      const double n = std::sqrt(static_cast<double>(d.norm2()));
      const double want = std::abs(d.q / n) - std::abs(d.p / n);
      const double got = to_unit(*base.phi[i], d, Norm::l2).to_double();
      worst = std::max(worst, std::abs(got - want));
      if (std::abs(got - want) > kUnitTolerance) r.fail(tag + " d=" + d.to_string() + ": unit level off by " + format_double(got - want));
    }
    for (const auto& a : radii) {
      RadonSummary moved = radon_summary(thick(f, norm, a), dirs);
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        ++barcodes;
        if (!base.phi[i]) continue;
        const Surd h = ball_support(BallSpec{norm, a}, dirs[i]);
        if (!moved.phi[i] || !(*moved.phi[i] == *base.phi[i] - h)) {
          r.fail(tag + " a=" + to_string(a) + " d=" + dirs[i].to_string() + ": " + moved.barcodes[i].to_string());
          continue;
        }
        const double shift = to_unit(*moved.phi[i] - *base.phi[i], dirs[i], norm).to_double() + to_double(a);
        worst = std::max(worst, std::abs(shift));
        if (std::abs(shift) > kUnitTolerance) r.fail(tag + ": unit shift is not -a");
        CheckReport shift_check = shift_identity_check(f, BallSpec{norm, a}, dirs[i]);
        for (const auto& why : shift_check.details) r.fail(tag + " a=" + to_string(a) + ": " + why);
      }
    }
    if (backend != Backend::grid) continue;
    // Independent route: thicken cell by cell, recognize the result as an
    // indicator object and sweep that object without any shift.
    for (const auto& a : radii) {
      std::string why;
      auto obj = field_as_object(convolve_grid(f, a), &why);
      if (!obj) {
        r.fail("grid a=" + to_string(a) + ": thickened field not recognized: " + why);
        continue;
      }
      RadonSummary direct = radon_summary(plain(*obj), dirs);
      RadonSummary moved = radon_summary(thick(f, Norm::linf, a), dirs);
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (!(direct.barcodes[i] == moved.barcodes[i])) {
          r.fail("grid a=" + to_string(a) + " d=" + dirs[i].to_string() + ": swept thickened object gives " +
                 direct.barcodes[i].to_string() + ", shifted profile gives " + moved.barcodes[i].to_string());
        }
      }
    }
  }
  r.expected = "exact scaled levels; unit error <= 1e-9";
  r.computed = std::to_string(barcodes) + " barcodes, max unit error " + format_double(worst);
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

CheckResult check_halfplane_disc_lattice(const SuiteOptions&) {
  Timer timer;
  CheckResult r = start(4, "half-plane / disc stalk lattice");
  std::vector<Direction> dirs{{1, 0}, {0, 1}, {3, 4}, {-4, 3}};
  for (const auto& d : default_directions(24)) {
    if (dirs.size() == 16) break;
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  std::vector<Rational> ts;
  for (int k = -12; k <= 12; ++k) ts.push_back(make_rational(k, 4));
  std::vector<Point> xs;
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) xs.emplace_back(make_rational(-12 + i, 4), make_rational(-12 + j, 4));
  }
  HalfplaneStalkReport rep = halfplane_stalk_verify(dirs, ts, xs, {half(), Rational(1)});
  for (const auto& c : rep.first_counterexamples) r.fail(c);
  if (rep.counterexamples > rep.first_counterexamples.size()) {
    r.failure_count = rep.counterexamples;
    r.pass = false;
  }
  if (rep.boundary_cases == 0) r.fail("no boundary samples x.y = t + a were exercised");
  r.expected = "0 counterexamples, boundary cases > 0";
  r.computed = std::to_string(rep.samples) + " samples, " + std::to_string(rep.boundary_cases) + " boundary, " +
               std::to_string(rep.counterexamples) + " counterexamples";
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

CheckResult check_pinch(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(5, "distance between F and its thickening is exactly a");
  const auto dirs = default_directions(o.directions);
  std::size_t pairs = 0;
  for (const auto& sc : suite_scenes()) {
    SheafObject f = compile(sc.scene);
    for (const Rational& a : {half(), Rational(1)}) {
      ++pairs;
      const std::string tag = sc.name + " a=" + to_string(a);
      DistanceReport lower = sup_direction_distance(plain(f), thick(f, sc.norm, a), dirs);
      DistanceReport upper = shift_upper_bound(f, a);
      const Cost target = Cost::of(Surd(a));
      if (lower.value < target) r.fail(tag + ": lower bound " + lower.value.to_string());
      if (upper.value > target) r.fail(tag + ": upper bound " + upper.value.to_string());
      if (!upper.shift || !upper.shift->validate()) r.fail(tag + ": shift certificate does not validate");
      if (lower.kind != BoundKind::lower_bound || upper.kind != BoundKind::upper_bound) r.fail(tag + ": bound kinds");
      if (std::abs(lower.value.to_double() - to_double(a)) > kUnitTolerance) r.fail(tag + ": unit value off");
      if (lower.witness && lower.matching) {
        const Direction& d = *lower.witness;
        DecoratedBarcode bf = unit_barcode(decompose(profile(plain(f), d)), d, sc.norm);
        DecoratedBarcode bg = unit_barcode(decompose(profile(thick(f, sc.norm, a), d)), d, sc.norm);
        std::string why;
        if (!lower.matching->validate(bf, bg, &why)) r.fail(tag + ": witness matching invalid: " + why);
      }
    }
  }
  r.expected = "lower = upper = a for every suite scene and a in {1/2, 1}";
  r.computed = std::to_string(pairs - std::min(pairs, r.failure_count)) + "/" + std::to_string(pairs) + " pairs pinched";
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

namespace {

bool same_as_object(const StalkField& sf, const SheafObject& f, std::string* where) {
  const auto& cx = *sf.complex;
  for (std::size_t c = 0; c < cx.cell_count(); ++c) {
    Point p = cx.representative(c);
    if (!(sf.dims[c] == stalk(f, p))) {
      *where = to_string(p);
      return false;
    }
  }
  return true;
}

}  // namespace

CheckResult check_functor_laws(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(6, "composition, unit and kernel-composition laws");
  std::size_t checks = 0;
  std::vector<SheafObject> grids{compile(notched_square_scene(Backend::grid)), compile(square_scene(Backend::grid))};
  std::vector<SheafObject> convexes{compile(notched_square_scene(Backend::convex)),
                                    compile(square_scene(Backend::convex)), compile(disc_scene(1))};

  const std::vector<std::pair<Rational, Rational>> laws{{half(), half()}, {Rational(1), -half()}};
  for (std::size_t gi = 0; gi < grids.size(); ++gi) {
    const auto& f = grids[gi];
    for (const auto& [a, b] : laws) {
      ++checks;
      std::string why;
      auto twice = convolve_twice(f, a, b, &why);
      const std::string tag = "grid scene " + std::to_string(gi) + " (" + to_string(a) + ", " + to_string(b) + ")";
      if (!twice) {
        r.fail(tag + ": intermediate not recognized: " + why);
        continue;
      }
      StalkField once = convolve_grid(f, a + b);
      if (auto p = first_difference(*twice, once)) r.fail(tag + ": stalks differ at " + to_string(*p));
    }
    ++checks;
    std::string where;
    if (!same_as_object(convolve_grid(f, 0), f, &where)) r.fail("grid scene " + std::to_string(gi) + ": K_0 * F differs at " + where);
  }
  for (std::size_t ci = 0; ci < convexes.size(); ++ci) {
    ++checks;
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 40; ++j) {
        Point x(make_rational(-60 + 3 * i, 20), make_rational(-60 + 3 * j, 20));
        if (!(convolve_stalk(convexes[ci], BallSpec{Norm::l2, 0}, x) == stalk(convexes[ci], x))) {
          r.fail("convex scene " + std::to_string(ci) + ": K_0 * F differs at " + to_string(x));
        }
      }
    }
  }

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> radius_steps(0, 8), coord(-12, 12), pick(0, 4), norm_pick(0, 1);
  for (int k = 0; k < 200; ++k) {
    ++checks;
    const int which = pick(rng);
    const bool on_grid = which < 2;
    const SheafObject& f = on_grid ? grids[static_cast<std::size_t>(which)] : convexes[static_cast<std::size_t>(which - 2)];
    const Rational a = make_rational(radius_steps(rng), 4);
    const Point x(make_rational(coord(rng), 8), make_rational(coord(rng), 8));
    const Norm norm = on_grid || norm_pick(rng) ? Norm::linf : Norm::l2;
    GradedDims lhs = convolve_stalk(f, BallSpec{norm, a}, x);
    GradedDims rhs = compose_kernel_stalk(KernelSpec::delta(a, norm), f, x);
    if (!(lhs == rhs)) {
      r.fail("triple " + std::to_string(k) + " a=" + to_string(a) + " x=" + to_string(x) + ": " + lhs.to_string() +
             " vs " + rhs.to_string());
    }
  }
  r.expected = "all stalk fields identical";
  r.computed = std::to_string(checks) + " comparisons, " + std::to_string(r.failure_count) + " failures";
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

namespace {

ComplexPtr random_grid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(2, 4);
  auto cuts = [&](int k) {
    std::vector<Rational> v;
    for (int i = 0; i <= k; ++i) v.push_back(Rational(i));
    return v;
  };
  return std::make_shared<const PlanarComplex>(build_grid(cuts(n(rng)), cuts(n(rng))));
}

CellSet random_cells(const ComplexPtr& c, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  CellSet s(c);
  for (std::size_t i = 0; i < c->cell_count(); ++i) {
    if (coin(rng)) s.insert(i);
  }
  return s;
}

// Closed set intersected with an open one.
CellSet random_locally_closed(const ComplexPtr& c, std::mt19937_64& rng) {
  return closure(random_cells(c, rng, 0.3)).intersected(star(random_cells(c, rng, 0.3)));
}

DecoratedBarcode random_barcode(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), level(-12, 12), deg(0, 1), kind(0, 5), mult(1, 2);
  std::vector<Bar> bars;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Bar b;
    b.degree = deg(rng);
    b.mult = mult(rng);
    int lo = level(rng), hi = level(rng);
    if (lo > hi) std::swap(lo, hi);
    const int k = kind(rng);
    b.birth = {k == 0 ? BirthKind::minus_infinity : (k % 2 ? BirthKind::at_point : BirthKind::just_after),
               Surd(make_rational(lo, 4))};
    b.death = {k == 1 ? DeathKind::plus_infinity : (k % 3 ? DeathKind::at_point : DeathKind::just_before),
               Surd(make_rational(hi, 4))};
    if (b.birth.kind != BirthKind::minus_infinity && b.death.kind != DeathKind::plus_infinity) {
      // keep the interval nonempty
      if (lo == hi) {
        b.birth.kind = BirthKind::at_point;
        b.death.kind = DeathKind::at_point;
      }
    }
    bars.push_back(b);
  }
  return DecoratedBarcode(std::move(bars));
}

// Rank of every stratum pair recomputed from the bars.
bool consistent(const DirectionalProfile& p, const DecoratedBarcode& bc) {
  const std::size_t s = p.strata();
  std::set<int> degrees;
  for (const auto& [d, t] : p.ranks) degrees.insert(d);
  for (const auto& b : bc.bars()) degrees.insert(b.degree);
  std::vector<Surd> reps;
  for (std::size_t i = 0; i < s; ++i) reps.push_back(p.representative(i));
  for (int d : degrees) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i; j < s; ++j) {
        long n = 0;
        for (const auto& b : bc.bars()) {
          if (b.degree == d && b.contains(reps[i]) && b.contains(reps[j])) n += b.mult;
        }
        if (n != p.rank(d, static_cast<long>(i), static_cast<long>(j))) return false;
      }
    }
  }
  return true;
}

}  // namespace

CheckResult check_properties(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(7, "property suites");
  std::mt19937_64 rng(o.seed + 7);
  std::ostringstream summary;

  // exactness of the long exact sequence
  for (int k = 0; k < 50; ++k) {
    ComplexPtr c = random_grid(rng);
    CellSet z = random_locally_closed(c, rng);
    CellSet a = z.intersected(closure(random_cells(c, rng, 0.3)));
    ExactnessReport ex = long_exact_sequence(z, a, Field(k % 2 ? 3 : 2));
    if (!ex.exact) r.fail("LES pair " + std::to_string(k) + ": " + (ex.failures.empty() ? "" : ex.failures.front()));
  }
  summary << "LES 50 pairs; ";

  // refinement invariance
  std::uniform_int_distribution<int> small(-3, 3), level(1, 11);
  for (int k = 0; k < 50; ++k) {
    ComplexPtr c = random_grid(rng);
    CellSet z = random_locally_closed(c, rng);
    int p = small(rng), q = small(rng);
    if (p == 0 && q == 0) p = 1;
    const std::int64_t g = std::gcd(p, q);
    Direction d(p / g, q / g);
    Refinement ref = refine_by_line(*c, d, make_rational(level(rng), 3));
    if (!(hcc(z) == hcc(z.transported(ref)))) r.fail("refinement pair " + std::to_string(k) + " changes H_c");
  }
  summary << "refinement 50 pairs; ";

  // Euler characteristic conservation and decomposition consistency
  const auto dirs = default_directions(o.directions);
  std::size_t decompositions = 0;
  for (const auto& sc : suite_scenes()) {
    SheafObject f = compile(sc.scene);
    for (const auto& cs : {plain(f), thick(f, sc.norm, half())}) {
      CheckReport chi = chi_c_conservation(cs, dirs);
      for (const auto& why : chi.details) r.fail(sc.name + ": " + why);
      for (const auto& d : dirs) {
        DirectionalProfile p = profile(cs, d);
        try {
          ++decompositions;
          if (!consistent(p, decompose(p))) r.fail(sc.name + " d=" + d.to_string() + ": bars do not reproduce ranks");
        } catch (const std::logic_error& e) {
          r.fail(sc.name + " d=" + d.to_string() + ": " + e.what());
        }
      }
    }
    if (sc.scene.backend == Backend::grid) {
      for (const auto& d : default_directions(8)) {
        DirectionalProfile a = profile(plain(f), d, RankMethod::persistence);
        DirectionalProfile b = profile(plain(f), d, RankMethod::restriction);
        if (a.ranks != b.ranks) r.fail(sc.name + " d=" + d.to_string() + ": persistence and restriction ranks differ");
      }
    }
  }
  if (compile(notched_square_scene(Backend::grid)).euler_c() != -1 ||
      compile(notched_square_scene(Backend::convex)).euler_c() != -1) {
    r.fail("notched square chi_c is not -1");
  }
  summary << decompositions << " decompositions; ";

  // bottleneck axioms and certificates
  std::size_t certificates = 0, invalid = 0;
  auto dist = [&](const DecoratedBarcode& x, const DecoratedBarcode& y) {
    DistanceReport rep = bottleneck(x, y);
    ++certificates;
    if (!rep.matching || !rep.matching->validate(x, y)) ++invalid;
    return rep.value;
  };
  for (int k = 0; k < 100; ++k) {
    DecoratedBarcode a = random_barcode(rng), b = random_barcode(rng), c = random_barcode(rng);
    if (!(dist(a, a) == Cost::of(Surd(0)))) r.fail("d(A,A) != 0 for triple " + std::to_string(k));
    Cost ab = dist(a, b), ba = dist(b, a), bc = dist(b, c), ac = dist(a, c);
    if (!(ab == ba)) r.fail("asymmetric on triple " + std::to_string(k));
    if (ac > ab + bc) r.fail("triangle inequality fails on triple " + std::to_string(k));
    Cost act = dist(a, convolution_action(a, 1));
    if (act > Cost::of(Surd(1))) r.fail("thickening by 1 moves triple " + std::to_string(k) + " by " + act.to_string());
  }
  if (invalid) r.fail(std::to_string(invalid) + " matching certificates failed to validate");
  summary << certificates << " certificates";

  r.expected = "all exact / consistent / valid";
  r.computed = summary.str();
  r.seconds = timer.seconds();
  return r;
}

// --------------------------------------------------------------------------

CheckResult check_localized_inequality(const SuiteOptions& o) {
  Timer timer;
  CheckResult r = start(8, "localized distance <= distance");
  const auto dirs = default_directions(o.directions);
  std::size_t pairs = 0;
  auto compare = [&](const std::string& tag, const ConvolvedSheaf& f, const ConvolvedSheaf& g, const DistanceReport& upper) {
    ++pairs;
    DistanceReport loc = sup_direction_distance(f, g, dirs, true);
    DistanceReport lower = sup_direction_distance(f, g, dirs, false);
    if (!localized_bound_check(loc, lower)) r.fail(tag + ": localized " + loc.value.to_string() + " vs " + lower.value.to_string());
    if (!localized_bound_check(loc, upper)) r.fail(tag + ": localized " + loc.value.to_string() + " vs upper " + upper.value.to_string());
  };
  for (const auto& sc : suite_scenes()) {
    SheafObject f = compile(sc.scene);
    compare(sc.name + " self", plain(f), plain(f), shift_upper_bound(f, 0));
    for (const Rational& a : {half(), Rational(1)}) {
      compare(sc.name + " a=" + to_string(a), plain(f), thick(f, sc.norm, a), shift_upper_bound(f, a));
    }
  }
  SheafObject d1 = compile(disc_scene(1)), d2 = compile(disc_scene(2));
  auto a = thickening_radius(d1, d2, Norm::l2);
  if (!a) {
    r.fail("disc pair: no thickening relation found");
  } else {
    compare("discs r=1, r=2", plain(d1), plain(d2), shift_upper_bound(d1, *a));
  }
  r.expected = "localized <= lower bound <= upper bound on every pair";
  r.computed = std::to_string(pairs) + " pairs, " + std::to_string(r.failure_count) + " failures";
  r.seconds = timer.seconds();
  return r;
}

SuiteReport run_reference_suite(const SuiteOptions& o) {
  SuiteReport rep;
  for (auto* check : {check_disc_barcodes, check_thickening_thresholds, check_epigraph, check_halfplane_disc_lattice,
                      check_pinch, check_functor_laws, check_properties, check_localized_inequality}) {
    try {
      rep.checks.push_back(check(o));
    } catch (const std::exception& e) {
      CheckResult r = start(static_cast<int>(rep.checks.size()) + 1, "check aborted");
      r.fail(e.what());
      rep.checks.push_back(r);
    }
  }
  return rep;
}

}  // namespace sheafradon
