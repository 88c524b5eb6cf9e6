#include "sheafradon/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace sheafradon {

// --------------------------------------------------------------- GradedDims

GradedDims::GradedDims(std::initializer_list<std::pair<const int, long>> init) {
  for (const auto& [k, v] : init) add(k, v);
}

long GradedDims::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDims::add(int degree, long dim) {
  if (dim == 0) return;
  long v = (dims_[degree] += dim);
  if (v == 0) dims_.erase(degree);
}

long GradedDims::total() const {
  long t = 0;
  for (const auto& [k, v] : dims_) t += v;
  return t;
}

long GradedDims::euler() const {
  long e = 0;
  for (const auto& [k, v] : dims_) e += (k % 2 == 0) ? v : -v;
  return e;
}

GradedDims GradedDims::shifted(int n) const {
  GradedDims out;
  for (const auto& [k, v] : dims_) out.add(k + n, v);
  return out;
}

GradedDims GradedDims::scaled(long m) const {
  GradedDims out;
  for (const auto& [k, v] : dims_) out.add(k, v * m);
  return out;
}

GradedDims operator+(const GradedDims& a, const GradedDims& b) {
  GradedDims out = a;
  for (const auto& [k, v] : b.dims_) out.add(k, v);
  return out;
}

std::string GradedDims::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : dims_) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- CcComplex

CcComplex ccochain(const CellSet& z, Field field) {
  if (auto bad = z.violation()) {
    throw std::invalid_argument("cell-set is not locally closed: chain " +
                                std::to_string((*bad)[0]) + " < " + std::to_string((*bad)[1]) +
                                " < " + std::to_string((*bad)[2]) + " leaves the set in the middle");
  }
  const PlanarComplex& c = *z.parent();
  CcComplex out{field, {}, {}};
  for (auto cell : z.cells()) out.cells[static_cast<std::size_t>(c.dim(cell))].push_back(cell);
  for (int k = 0; k < 2; ++k) {
    const auto& lower = out.cells[static_cast<std::size_t>(k)];
    const auto& upper = out.cells[static_cast<std::size_t>(k + 1)];
    FpMatrix d(upper.size(), lower.size(), field);
    std::map<std::size_t, std::size_t> col_of;
    for (std::size_t j = 0; j < lower.size(); ++j) col_of[lower[j]] = j;
    for (std::size_t i = 0; i < upper.size(); ++i) {
      for (const auto& [b, s] : c.boundary(upper[i])) {
        auto it = col_of.find(b);
        if (it != col_of.end()) d.set(i, it->second, s);
      }
    }
    out.d[static_cast<std::size_t>(k)] = std::move(d);
  }
  return out;
}

GradedDims CcComplex::cohomology_dims() const {
  std::size_t r0 = rank(d[0]);
  std::size_t r1 = rank(d[1]);
  GradedDims g;
  g.add(0, static_cast<long>(dim(0) - r0));
  g.add(1, static_cast<long>(dim(1) - r1 - r0));
  g.add(2, static_cast<long>(dim(2) - r1));
  return g;
}

GradedDims hcc(const CellSet& z, Field field) { return ccochain(z, field).cohomology_dims(); }

long euler_c(const CellSet& z) {
  long e = 0;
  for (auto cell : z.cells()) e += (z.parent()->dim(cell) % 2 == 0) ? 1 : -1;
  return e;
}

// ---------------------------------------------------------- CohomologyBasis

CohomologyBasis::CohomologyBasis(const CcComplex& c) {
  for (int k = 0; k < 3; ++k) {
    const std::size_t n = c.dim(k);
    FpMatrix cocycles =
        k < 2 ? kernel_basis(c.d[static_cast<std::size_t>(k)]) : FpMatrix::identity(n, c.field);
    FpMatrix bounds(n, 0, c.field);
    if (k > 0) {
      const FpMatrix& prev = c.d[static_cast<std::size_t>(k - 1)];
      bounds = select_columns(prev, independent_columns(prev));
    }
    // Extend a basis of coboundaries to one of cocycles; the added columns
    // represent cohomology.
    FpMatrix stacked = hstack(bounds, cocycles);
    std::vector<std::size_t> chosen;
    for (auto col : independent_columns(stacked)) {
      if (col >= bounds.cols()) chosen.push_back(col);
    }
    reps_[static_cast<std::size_t>(k)] = select_columns(stacked, chosen);
    boundaries_[static_cast<std::size_t>(k)] = std::move(bounds);
  }
}

FpMatrix CohomologyBasis::coordinates(int k, const FpMatrix& cocycles) const {
  const FpMatrix& reps = reps_[static_cast<std::size_t>(k)];
  auto x = solve(hstack(reps, boundaries_[static_cast<std::size_t>(k)]), cocycles);
  if (!x) throw std::logic_error("coordinates requested for a non-cocycle");
  std::vector<std::size_t> rows(reps.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::size_t> cols(cocycles.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return restrict_map(*x, rows, cols);
}

// --------------------------------------------------------------- CochainMap

FpMatrix CochainMap::induced(int k) const {
  CohomologyBasis src(source);
  const int tk = k + degree;
  if (tk > 2) return FpMatrix(0, src.dim(k), source.field);
  CohomologyBasis tgt(target);
  FpMatrix image = multiply(component[static_cast<std::size_t>(k)], src.representatives(k));
  return tgt.coordinates(tk, image);
}

std::size_t CochainMap::induced_rank(int k) const { return rank(induced(k)); }

namespace {

// 0/1 matrix sending cells of `from` to the same cells of `to`.
FpMatrix identification(const std::vector<std::size_t>& to, const std::vector<std::size_t>& from,
                        Field field) {
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < to.size(); ++i) row_of[to[i]] = i;
  FpMatrix m(to.size(), from.size(), field);
  for (std::size_t j = 0; j < from.size(); ++j) {
    auto it = row_of.find(from[j]);
    if (it != row_of.end()) m.set(it->second, j, 1);
  }
  return m;
}

}  // namespace

CochainMap restriction_to_closed(const CellSet& z, const CellSet& a, Field field) {
  if (!z.has_closed_part(a)) throw std::invalid_argument("restriction_to_closed: A not closed in Z");
  CochainMap m{ccochain(z, field), ccochain(a, field), 0, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    m.component[k] = identification(m.target.cells[k], m.source.cells[k], field);
  }
  return m;
}

CochainMap extension_from_open(const CellSet& z, const CellSet& u, Field field) {
  if (!z.has_open_part(u)) throw std::invalid_argument("extension_from_open: U not open in Z");
  CochainMap m{ccochain(u, field), ccochain(z, field), 0, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    m.component[k] = identification(m.target.cells[k], m.source.cells[k], field);
  }
  return m;
}

CochainMap connecting_map(const CellSet& z, const CellSet& a, Field field) {
  if (!z.has_closed_part(a)) throw std::invalid_argument("connecting_map: A not closed in Z");
  CellSet u = z.minus(a);
  CochainMap m{ccochain(a, field), ccochain(u, field), 1, {}};
  const PlanarComplex& c = *z.parent();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& cols = m.source.cells[k];
    if (k == 2) {
      m.component[k] = FpMatrix(0, cols.size(), field);
      continue;
    }
    const auto& rows = m.target.cells[k + 1];
    FpMatrix block(rows.size(), cols.size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) block.set(i, j, c.incidence(rows[i], cols[j]));
    }
    m.component[k] = std::move(block);
  }
  return m;
}

ExactnessReport long_exact_sequence(const CellSet& z, const CellSet& a, Field field) {
  CochainMap ext = extension_from_open(z, z.minus(a), field);
  CochainMap res = restriction_to_closed(z, a, field);
  CochainMap con = connecting_map(z, a, field);
  std::array<FpMatrix, 3> ei, ri, ci;
  for (int k = 0; k < 3; ++k) {
    ei[static_cast<std::size_t>(k)] = ext.induced(k);
    ri[static_cast<std::size_t>(k)] = res.induced(k);
    ci[static_cast<std::size_t>(k)] = con.induced(k);
  }
  ExactnessReport rep;
  auto fail = [&](const std::string& what) {
    rep.exact = false;
    rep.failures.push_back(what);
  };
  auto check_node = [&](const std::string& name, const FpMatrix* in, const FpMatrix& out,
                        std::size_t node_dim) {
    std::size_t rin = in ? rank(*in) : 0;
    std::size_t rout = rank(out);
    if (rin + rout != node_dim) {
      fail(name + ": rank(in) + rank(out) = " + std::to_string(rin + rout) + " != dim " +
           std::to_string(node_dim));
    }
    if (in && in->rows() > 0 && in->cols() > 0 && out.rows() > 0 &&
        !multiply(out, *in).is_zero()) {
      fail(name + ": composite is nonzero");
    }
  };
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string deg = std::to_string(k);
    check_node("H^" + deg + "(Z\\A)", k == 0 ? nullptr : &ci[k - 1], ei[k], ei[k].cols());
    check_node("H^" + deg + "(Z)", &ei[k], ri[k], ri[k].cols());
    check_node("H^" + deg + "(A)", &ri[k], ci[k], ci[k].cols());
  }
  return rep;
}

}  // namespace sheafradon
