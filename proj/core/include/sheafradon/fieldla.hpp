#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sheafradon {

/// Arithmetic in Z/pZ. p must be a prime below 2^31.
class Field {
 public:
  explicit Field(std::uint32_t p = 2);

  std::uint32_t prime() const { return p_; }
  std::uint32_t reduce(std::int64_t v) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix over a prime field.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, Field field = Field{});

  static FpMatrix identity(std::size_t n, Field field = Field{});
  /// Entries are reduced mod p.
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                            Field field = Field{});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }
  std::uint32_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  std::vector<std::uint32_t> column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Basis of the null space, one vector per column of the returned matrix.
FpMatrix kernel_basis(const FpMatrix& m);
std::size_t cokernel_dim(const FpMatrix& m);
/// Columns of m forming a basis of its column space (greedy, left to right).
std::vector<std::size_t> independent_columns(const FpMatrix& m);
/// Submatrix on the given rows and columns; throws std::out_of_range.
FpMatrix restrict_map(const FpMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols);
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
FpMatrix transpose(const FpMatrix& m);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix select_columns(const FpMatrix& m, const std::vector<std::size_t>& cols);
/// Some X with a * X = b, or nothing when the system is inconsistent.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

}  // namespace sheafradon
