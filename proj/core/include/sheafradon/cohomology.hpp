#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sheafradon/fieldla.hpp"
#include "sheafradon/planar.hpp"

namespace sheafradon {

/// Finitely supported degree -> dimension table. Zero entries are dropped.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, long>> init);

  long at(int degree) const;
  void add(int degree, long dim);
  const std::map<int, long>& entries() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }
  long total() const;
  long euler() const;

  /// Moves degree k to degree k + n (generator (Z, n) means k_Z[-n]).
  GradedDims shifted(int n) const;
  GradedDims scaled(long m) const;

  friend GradedDims operator+(const GradedDims& a, const GradedDims& b);
  friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.dims_ == b.dims_; }
  std::string to_string() const;

 private:
  std::map<int, long> dims_;
};

/// Cochain complex of the cells of a locally closed set Z, with the ambient
/// coboundary restricted to Z. Its cohomology is H^*_c(Z).
struct CcComplex {
  Field field;
  std::array<std::vector<std::size_t>, 3> cells;  // parent cell ids by dimension
  std::array<FpMatrix, 2> d;                       // d[k]: C^k -> C^{k+1}

  std::size_t dim(int k) const { return cells[static_cast<std::size_t>(k)].size(); }
  GradedDims cohomology_dims() const;
};

/// Throws std::invalid_argument naming the violating chain when Z is not
/// locally closed.
CcComplex ccochain(const CellSet& z, Field field = Field{});
GradedDims hcc(const CellSet& z, Field field = Field{});
long euler_c(const CellSet& z);

/// Chosen bases of cohomology for one complex, used to express induced maps.
class CohomologyBasis {
 public:
  explicit CohomologyBasis(const CcComplex& c);
  const FpMatrix& representatives(int k) const { return reps_[static_cast<std::size_t>(k)]; }
  std::size_t dim(int k) const { return reps_[static_cast<std::size_t>(k)].cols(); }
  /// Coordinates of cocycles (columns) in the representative basis.
  FpMatrix coordinates(int k, const FpMatrix& cocycles) const;

 private:
  std::array<FpMatrix, 3> reps_;
  std::array<FpMatrix, 3> boundaries_;
};

/// Cochain-level map between two cell-set complexes, of degree 0 or +1.
struct CochainMap {
  CcComplex source;
  CcComplex target;
  int degree = 0;
  std::array<FpMatrix, 3> component;  // component[k]: C^k(source) -> C^{k+degree}(target)

  /// Matrix of the induced map H^k(source) -> H^{k+degree}(target).
  FpMatrix induced(int k) const;
  std::size_t induced_rank(int k) const;
};

/// Quotient map H^*_c(Z) -> H^*_c(A) for A closed in Z.
CochainMap restriction_to_closed(const CellSet& z, const CellSet& a, Field field = Field{});
/// Extension by zero H^*_c(U) -> H^*_c(Z) for U open in Z.
CochainMap extension_from_open(const CellSet& z, const CellSet& u, Field field = Field{});
/// Connecting map H^k_c(A) -> H^{k+1}_c(Z \ A) for A closed in Z.
CochainMap connecting_map(const CellSet& z, const CellSet& a, Field field = Field{});

struct ExactnessReport {
  bool exact = true;
  std::vector<std::string> failures;
};

/// Checks exactness at every node of
/// ... -> H^k_c(Z \ A) -> H^k_c(Z) -> H^k_c(A) -> H^{k+1}_c(Z \ A) -> ...
ExactnessReport long_exact_sequence(const CellSet& z, const CellSet& a, Field field = Field{});

}  // namespace sheafradon
