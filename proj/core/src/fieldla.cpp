#include "sheafradon/fieldla.hpp"

#include <sstream>
#include <stdexcept>

namespace sheafradon {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
}

std::uint32_t Field::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Field field) {
  FpMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Field field) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::vector<std::uint32_t> FpMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

namespace {

// Gauss-Jordan on bit-packed rows, for p = 2.
Echelon row_reduce_f2(const FpMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::uint32_t* src = m.row_ptr(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (src[c]) rows[r][c / 64] |= (std::uint64_t{1} << (c % 64));
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t found = next;
    while (found < m.rows() && !(rows[found][w] & bit)) ++found;
    if (found == m.rows()) continue;
    std::swap(rows[found], rows[next]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next && (rows[r][w] & bit)) {
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[next][k];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  FpMatrix out(m.rows(), m.cols(), m.field());
  for (std::size_t r = 0; r < next; ++r) {
    std::uint32_t* dst = out.row_ptr(r);
    for (std::size_t c = 0; c < m.cols(); ++c) dst[c] = (rows[r][c / 64] >> (c % 64)) & 1u;
  }
  return {std::move(out), std::move(pivots)};
}

Echelon row_reduce_fp(const FpMatrix& m) {
  const Field& f = m.field();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  const std::size_t n = a.cols();
  for (std::size_t c = 0; c < n && next < a.rows(); ++c) {
    std::size_t found = next;
    while (found < a.rows() && a.at(found, c) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != next) {
      std::uint32_t* p = a.row_ptr(found);
      std::uint32_t* q = a.row_ptr(next);
      for (std::size_t k = 0; k < n; ++k) std::swap(p[k], q[k]);
    }
    std::uint32_t* piv = a.row_ptr(next);
    const std::uint32_t s = f.inv(piv[c]);
    for (std::size_t k = c; k < n; ++k) piv[k] = f.mul(piv[k], s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next) continue;
      std::uint32_t* row = a.row_ptr(r);
      const std::uint32_t factor = row[c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) row[k] = f.sub(row[k], f.mul(factor, piv[k]));
    }
    pivots.push_back(c);
    ++next;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const FpMatrix& m) {
  return m.field().prime() == 2 ? row_reduce_f2(m) : row_reduce_fp(m);
}

std::size_t rank(const FpMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivots.size();
}

FpMatrix kernel_basis(const FpMatrix& m) {
  const Field& f = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FpMatrix basis(m.cols(), free_cols.size(), f);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    basis.set(fc, j, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis.set(e.pivots[r], j, f.neg(e.reduced.at(r, fc)));
    }
  }
  return basis;
}

std::size_t cokernel_dim(const FpMatrix& m) { return m.rows() - rank(m); }

std::vector<std::size_t> independent_columns(const FpMatrix& m) {
  if (m.rows() == 0) return {};
  return row_reduce(m).pivots;
}

FpMatrix restrict_map(const FpMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  FpMatrix out(rows.size(), cols.size(), m.field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw std::out_of_range("restrict_map: row index out of range");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= m.cols()) throw std::out_of_range("restrict_map: column index out of range");
      out.set(i, j, m.at(rows[i], cols[j]));
    }
  }
  return out;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  const Field& f = a.field();
  FpMatrix out(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint32_t* dst = out.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint32_t v = a.at(i, k);
      if (v == 0) continue;
      const std::uint32_t* src = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], f.mul(v, src[j]));
    }
  }
  return out;
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix out(m.cols(), m.rows(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.row_ptr(c)[r] = m.at(r, c);
  }
  return out;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  FpMatrix out(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint32_t* dst = out.row_ptr(r);
    for (std::size_t c = 0; c < a.cols(); ++c) dst[c] = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) dst[a.cols() + c] = b.at(r, c);
  }
  return out;
}

FpMatrix select_columns(const FpMatrix& m, const std::vector<std::size_t>& cols) {
  FpMatrix out(m.rows(), cols.size(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= m.cols()) throw std::out_of_range("select_columns: index out of range");
      out.row_ptr(r)[j] = m.at(r, cols[j]);
    }
  }
  return out;
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const Field& f = a.field();
  FpMatrix x(a.cols(), b.cols(), f);
  if (b.cols() == 0) return x;
  Echelon e = row_reduce(hstack(a, b));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t pc = e.pivots[r];
    if (pc >= a.cols()) return std::nullopt;  // pivot in the right-hand side
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, e.reduced.at(r, a.cols() + j));
  }
  return x;
}

}  // namespace sheafradon
