#pragma once

#include <functional>
#include <memory>

#include "sheafradon/planar.hpp"
#include "sheafradon/rational.hpp"

namespace sheafradon::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

inline ComplexPtr grid(std::vector<std::int64_t> xs, std::vector<std::int64_t> ys) {
  std::vector<Rational> xr, yr;
  for (auto v : xs) xr.push_back(q(v));
  for (auto v : ys) yr.push_back(q(v));
  return std::make_shared<const PlanarComplex>(build_grid(xr, yr));
}

/// Cells whose representative point satisfies `pred`.
inline CellSet cells_where(const ComplexPtr& c, const std::function<bool(const Point&)>& pred) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < c->cell_count(); ++i) {
    if (pred(c->representative(i))) ids.push_back(i);
  }
  return CellSet::from_cells(c, ids);
}

inline CellSet closed_box(const ComplexPtr& c, const Box& b) {
  return cells_where(c, [&](const Point& p) { return b.contains(p); });
}

inline CellSet open_box(const ComplexPtr& c, const Box& b) {
  return cells_where(c, [&](const Point& p) { return b.interior_contains(p); });
}

}  // namespace sheafradon::testing
