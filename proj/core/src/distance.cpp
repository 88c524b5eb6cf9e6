#include "sheafradon/distance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "sheafradon/parallel.hpp"

namespace sheafradon {

double Cost::to_double() const {
  return infinite ? std::numeric_limits<double>::infinity() : value.to_double();
}

std::string Cost::to_string() const { return infinite ? "inf" : value.to_string(); }

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
  return a.value <=> b.value;
}

Cost max(const Cost& a, const Cost& b) { return a < b ? b : a; }
Cost min(const Cost& a, const Cost& b) { return b < a ? b : a; }

Cost operator+(const Cost& a, const Cost& b) {
  if (a.infinite || b.infinite) return Cost::inf();
  return Cost::of(a.value + b.value);
}

Cost interval_cost(const Bar& a, const Bar& b) {
  if (a.degree != b.degree) return Cost::inf();
  const bool a_lo = a.birth.kind == BirthKind::minus_infinity, b_lo = b.birth.kind == BirthKind::minus_infinity;
  const bool a_hi = a.death.kind == DeathKind::plus_infinity, b_hi = b.death.kind == DeathKind::plus_infinity;
  if (a_lo != b_lo || a_hi != b_hi) return Cost::inf();
  Surd c(0);
  if (!a_lo) c = max(c, abs(a.birth.level - b.birth.level));
  if (!a_hi) c = max(c, abs(a.death.level - b.death.level));
  return Cost::of(c);
}

Cost deletion_cost(const Bar& b) {
  if (!b.bounded()) return Cost::inf();
  return Cost::of((b.death.level - b.birth.level) / Rational(2));
}

Cost single_interval_distance(const Bar& a, const Bar& b) {
  return min(interval_cost(a, b), max(deletion_cost(a), deletion_cost(b)));
}

DecoratedBarcode convolution_action(const DecoratedBarcode& barcode, const Rational& a) {
  if (a < 0) throw std::invalid_argument("convolution_action needs a >= 0");
  const Surd s(a);
  std::vector<Bar> out;
  for (Bar b : barcode.bars()) {
    const bool closed_lo = b.birth.kind == BirthKind::at_point;
    const bool closed_hi = b.death.kind == DeathKind::at_point;
    const bool open_lo = b.birth.kind == BirthKind::just_after;
    const bool open_hi = b.death.kind == DeathKind::just_before;
    if (open_lo && open_hi && b.death.level - b.birth.level <= Surd(2 * a)) {
      // An over-thickened open interval collapses to a closed one a degree up.
      Bar c;
      c.degree = b.degree + 1;
      c.mult = b.mult;
      c.birth = {BirthKind::at_point, b.death.level - s};
      c.death = {DeathKind::at_point, b.birth.level + s};
      out.push_back(c);
      continue;
    }
    // A closed end grows outwards by a, an open end recedes by a. An infinite
    // end stays; (-inf, e] and (-inf, e) follow the rule for their finite end.
    if (closed_lo) b.birth.level = b.birth.level - s;
    if (open_lo) b.birth.level = b.birth.level + s;
    if (closed_hi) b.death.level = b.death.level + s;
    if (open_hi) b.death.level = b.death.level - s;
    out.push_back(b);
  }
  return DecoratedBarcode(std::move(out));
}

std::vector<Bar> expand(const DecoratedBarcode& b) {
  std::vector<Bar> out;
  for (const auto& bar : b.bars()) {
    Bar one = bar;
    one.mult = 1;
    for (long i = 0; i < bar.mult; ++i) out.push_back(one);
  }
  return out;
}

bool MatchingCertificate::validate(const DecoratedBarcode& left, const DecoratedBarcode& right,
                                   std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  std::vector<Bar> l, r;
  for (const auto& [x, y] : matched) {
    if (interval_cost(x, y) > value) {
      return fail("pair " + x.to_string() + " / " + y.to_string() + " costs " + interval_cost(x, y).to_string());
    }
    l.push_back(x);
    r.push_back(y);
  }
  for (const auto& x : deleted_left) {
    if (deletion_cost(x) > value) return fail("deleting " + x.to_string() + " costs " + deletion_cost(x).to_string());
    l.push_back(x);
  }
  for (const auto& y : deleted_right) {
    if (deletion_cost(y) > value) return fail("deleting " + y.to_string() + " costs " + deletion_cost(y).to_string());
    r.push_back(y);
  }
  if (!(DecoratedBarcode(l) == left)) return fail("left bars not covered exactly once");
  if (!(DecoratedBarcode(r) == right)) return fail("right bars not covered exactly once");
  return true;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower_bound: return "lower_bound";
    case BoundKind::upper_bound: return "upper_bound";
  }
  return "?";
}

bool ShiftCertificate::validate() const {
  return a >= 0 && g.from == 2 * a && g.to == 0 && g.from >= g.to;
}

std::string ShiftCertificate::to_string() const {
  return "f = id : K_" + sheafradon::to_string(a) + " * F -> G, g = chi_{" + sheafradon::to_string(g.from) +
         ",0} * F : K_" + sheafradon::to_string(a) + " * G -> F";
}

namespace {

// Kuhn's augmenting paths on the graph left -> allowed right vertices.
bool perfect_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count,
                      std::vector<long>& match_right) {
  match_right.assign(right_count, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (auto v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < adj.size(); ++u) {
    seen.assign(right_count, 0);
    if (!augment(u)) return false;
  }
  return true;
}

}  // namespace

DistanceReport bottleneck(const DecoratedBarcode& left, const DecoratedBarcode& right) {
  const std::vector<Bar> a = expand(left), b = expand(right);
  const std::size_t n = a.size(), m = b.size();
  // Left side: a's bars then one diagonal slot per b bar. Right side: b's
  // bars then one diagonal slot per a bar.
  std::vector<std::vector<Cost>> pair(n, std::vector<Cost>(m));
  std::vector<Cost> del_a(n), del_b(m);
  std::vector<Cost> candidates{Cost::of(Surd(0))};
  for (std::size_t i = 0; i < n; ++i) {
    del_a[i] = deletion_cost(a[i]);
    candidates.push_back(del_a[i]);
    for (std::size_t j = 0; j < m; ++j) {
      pair[i][j] = interval_cost(a[i], b[j]);
      candidates.push_back(pair[i][j]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    del_b[j] = deletion_cost(b[j]);
    candidates.push_back(del_b[j]);
  }
  candidates.push_back(Cost::inf());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto graph = [&](const Cost& c) {
    std::vector<std::vector<std::size_t>> adj(n + m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (pair[i][j] <= c) adj[i].push_back(j);
      }
      if (del_a[i] <= c) adj[i].push_back(m + i);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (del_b[j] <= c) adj[n + j].push_back(j);
      for (std::size_t i = 0; i < n; ++i) adj[n + j].push_back(m + i);
    }
    return adj;
  };
  std::vector<long> match;
  auto feasible = [&](const Cost& c) { return perfect_matching(graph(c), n + m, match); };

  std::size_t lo = 0, hi = candidates.size() - 1;  // the last candidate (inf) is always feasible
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Cost value = candidates[lo];
  feasible(value);

  MatchingCertificate cert;
  cert.value = value;
  for (std::size_t v = 0; v < n + m; ++v) {
    const auto u = static_cast<std::size_t>(match[v]);
    if (u < n && v < m) {
      cert.matched.emplace_back(a[u], b[v]);
    } else if (u < n) {
      cert.deleted_left.push_back(a[u]);
    } else if (v < m) {
      cert.deleted_right.push_back(b[v]);
    }
  }
  DistanceReport rep;
  rep.value = value;
  rep.kind = BoundKind::exact;
  rep.matching = std::move(cert);
  return rep;
}

DecoratedBarcode unit_barcode(const DecoratedBarcode& b, const Direction& d, Norm norm) {
  std::vector<Bar> out = b.bars();
  for (auto& bar : out) {
    if (bar.birth.kind != BirthKind::minus_infinity) bar.birth.level = to_unit(bar.birth.level, d, norm);
    if (bar.death.kind != DeathKind::plus_infinity) bar.death.level = to_unit(bar.death.level, d, norm);
  }
  return DecoratedBarcode(std::move(out));
}

Norm natural_norm(const ConvolvedSheaf& f) {
  if (f.ball) return f.ball->norm;
  return f.base.backend() == Backend::convex ? Norm::l2 : Norm::linf;
}

DistanceReport sup_direction_distance(const ConvolvedSheaf& f, const ConvolvedSheaf& g,
                                      const std::vector<Direction>& directions, bool localized) {
  if (directions.empty()) throw std::invalid_argument("no directions");
  Norm norm = natural_norm(f);
  if (g.ball && f.ball && g.ball->norm != f.ball->norm) {
    throw std::invalid_argument("objects thickened with different norms");
  }
  if (g.ball) norm = g.ball->norm;
  std::vector<DistanceReport> per(directions.size());
  parallel_for(directions.size(), [&](std::size_t i) {
    const auto& d = directions[i];
    DecoratedBarcode bf = unit_barcode(decompose(profile(f, d)), d, norm);
    DecoratedBarcode bg = unit_barcode(decompose(profile(g, d)), d, norm);
    if (localized) {
      bf = localized_strip(bf);
      bg = localized_strip(bg);
    }
    per[i] = bottleneck(bf, bg);
  });
  DistanceReport rep;
  rep.kind = BoundKind::lower_bound;
  rep.value = Cost::of(Surd(0));
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (!rep.witness || per[i].value > rep.value) {
      rep.value = per[i].value;
      rep.witness = directions[i];
      rep.matching = per[i].matching;
    }
  }
  return rep;
}

DistanceReport shift_upper_bound(const SheafObject& f, const Rational& a) {
  if (a < 0) throw std::invalid_argument("shift bound needs a >= 0");
  f.check_margin(2 * a);
  DistanceReport rep;
  rep.kind = BoundKind::upper_bound;
  rep.value = Cost::of(Surd(a));
  rep.shift = ShiftCertificate{a, ChiArrow(2 * a, 0)};
  return rep;
}

DecoratedBarcode localized_strip(const DecoratedBarcode& b) {
  std::vector<Bar> out;
  for (const auto& bar : b.bars()) {
    if (!bar.full_line()) out.push_back(bar);
  }
  return DecoratedBarcode(std::move(out));
}

bool localized_bound_check(const DistanceReport& localized, const DistanceReport& plain) {
  const bool same = localized.kind == plain.kind;
  const bool sandwich = localized.kind != BoundKind::upper_bound && plain.kind != BoundKind::lower_bound;
  if (!same && !sandwich) return false;
  return localized.value <= plain.value;
}

namespace {

std::optional<Box> as_box(const ConvexBody& c) {
  if (c.is_disc()) return std::nullopt;
  Box b = c.bounding_box();
  std::vector<Point> corners{{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax}, {b.xmin, b.ymax}};
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  std::vector<Point> vs = c.vertices();
  std::sort(vs.begin(), vs.end());
  if (vs != corners) return std::nullopt;
  return b;
}

std::optional<Box> grid_closed_box(const CellSet& z) {
  if (z.empty() || !z.is_closed()) return std::nullopt;
  const auto& cx = *z.parent();
  std::optional<Box> b;
  for (auto c : z.cells()) {
    if (cx.dim(c) != 0) continue;
    const Point& p = cx.vertex(c);
    if (!b) {
      b = Box(p.x, p.x, p.y, p.y);
    } else {
      b = Box(std::min(b->xmin, p.x), std::max(b->xmax, p.x), std::min(b->ymin, p.y), std::max(b->ymax, p.y));
    }
  }
  for (std::size_t c = 0; c < cx.cell_count(); ++c) {
    if (z.contains(c) != b->contains(cx.representative(c))) return std::nullopt;
  }
  return b;
}

std::optional<Rational> box_dilation(const Box& inner, const Box& outer) {
  Rational a = inner.xmin - outer.xmin;
  if (a < 0 || outer.xmax - inner.xmax != a || inner.ymin - outer.ymin != a || outer.ymax - inner.ymax != a) {
    return std::nullopt;
  }
  return a;
}

}  // namespace

std::optional<Rational> thickening_radius(const SheafObject& f, const SheafObject& g, Norm norm) {
  if (f.backend() != g.backend() || f.generator_count() != 1 || g.generator_count() != 1) return std::nullopt;
  if (f.backend() == Backend::convex) {
    const auto& x = f.convex_generators().front();
    const auto& y = g.convex_generators().front();
    if (x.degree != y.degree || x.mult != y.mult || !x.region.holes().empty() || !y.region.holes().empty()) {
      return std::nullopt;
    }
    const auto& cx = x.region.outer();
    const auto& cy = y.region.outer();
    if (norm == Norm::l2 && cx.is_disc() && cy.is_disc() && cx.center() == cy.center() &&
        cy.radius() >= cx.radius()) {
      return Rational(cy.radius() - cx.radius());
    }
    if (norm == Norm::linf) {
      auto bx = as_box(cx), by = as_box(cy);
      if (bx && by) return box_dilation(*bx, *by);
    }
    return std::nullopt;
  }
  if (norm != Norm::linf) return std::nullopt;
  const auto& x = f.grid_generators().front();
  const auto& y = g.grid_generators().front();
  if (x.degree != y.degree || x.mult != y.mult) return std::nullopt;
  auto bx = grid_closed_box(x.region), by = grid_closed_box(y.region);
  if (bx && by) return box_dilation(*bx, *by);
  return std::nullopt;
}

}  // namespace sheafradon
