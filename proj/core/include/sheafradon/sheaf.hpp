#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sheafradon/cohomology.hpp"
#include "sheafradon/convex.hpp"
#include "sheafradon/planar.hpp"

namespace sheafradon {

enum class Backend { grid, convex };
std::string to_string(Backend b);

/// Thickening ball: closed of radius a for a >= 0; for a < 0 the open ball of
/// radius -a together with a shift by the plane's dimension.
struct BallSpec {
  Norm norm = Norm::linf;
  Rational radius;
};

enum class KernelKind { radon, radon_thickened, delta, zt };

/// The kernels A, A_a, Delta_a and Z_a.
struct KernelSpec {
  KernelKind kind = KernelKind::delta;
  Rational a;
  Norm norm = Norm::l2;

  static KernelSpec radon();
  static KernelSpec radon_thickened(const Rational& a);
  static KernelSpec delta(const Rational& a, Norm norm);
  static KernelSpec zt(const Rational& a, Norm norm);
};

/// The canonical morphism K_a -> K_b (a >= b >= 0) for one kernel family.
struct ChiArrow {
  Rational from;
  Rational to;
  KernelKind kernel = KernelKind::delta;

  ChiArrow(Rational a, Rational b, KernelKind k = KernelKind::delta);
};

/// Window too small for the support plus the thickening radius.
class MarginError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridGenerator {
  CellSet region;
  int degree = 0;
  long mult = 1;
};

struct ConvexGenerator {
  ConvexDiffRegion region;
  int degree = 0;
  long mult = 1;
};

/// Finite sum of shifted indicator sheaves; generator (Z, n, m) stands for
/// k_Z^m[-n], whose stalk on Z is k^m in degree n.
class SheafObject {
 public:
  static SheafObject on_grid(Field field, ComplexPtr grid, std::vector<GridGenerator> gens);
  static SheafObject on_convex(Field field, Box window, std::vector<ConvexGenerator> gens);

  Backend backend() const { return backend_; }
  const Field& field() const { return field_; }
  const Box& window() const { return window_; }
  const ComplexPtr& grid() const { return grid_; }
  const std::vector<GridGenerator>& grid_generators() const { return grid_gens_; }
  const std::vector<ConvexGenerator>& convex_generators() const { return convex_gens_; }
  std::size_t generator_count() const;
  /// The object made of generator i alone.
  SheafObject generator(std::size_t i) const;

  /// Bounding box of the union of supports; nothing for the zero object.
  std::optional<Box> support_box() const;
  /// Alternating sum over generators of m (-1)^n chi_c(region).
  long euler_c() const;
  /// Throws MarginError unless the window strictly contains support + |a|.
  void check_margin(const Rational& a) const;

 private:
  Backend backend_ = Backend::grid;
  Field field_;
  Box window_;
  ComplexPtr grid_;
  std::vector<GridGenerator> grid_gens_;
  std::vector<ConvexGenerator> convex_gens_;
};

/// Throws std::out_of_range outside the window.
GradedDims stalk(const SheafObject& f, const Point& x);

/// Generator-wise intersection with a cell-set of the same grid.
SheafObject tensor_restrict(const SheafObject& f, const CellSet& region);
/// The same object on a finer grid whose cuts contain the original ones.
SheafObject regrid(const SheafObject& f, const ComplexPtr& finer);

struct Triangle {
  SheafObject open_part;    // k_{Z \ Z'}
  SheafObject whole;        // k_Z
  SheafObject closed_part;  // k_{Z'}
  CochainMap extension;
  CochainMap restriction;
};
/// For a one-generator grid object k_Z and Z' closed in Z.
Triangle triangle_split(const SheafObject& f, const CellSet& closed_part);

/// Stalk of K_a * F at x, evaluated on a local grid clipped to the ball.
GradedDims convolve_stalk(const SheafObject& f, const BallSpec& ball, const Point& x);
/// Stalk of (Delta_a o F) at x evaluated by restricting F to the ball on the
/// whole window and taking global compactly supported cohomology.
GradedDims compose_kernel_stalk(const KernelSpec& k, const SheafObject& f, const Point& x);

/// Cohomology-sheaf data of K_a * F on a grid where every cell is a stratum.
struct StalkField {
  ComplexPtr complex;
  Field field;
  Rational radius;
  std::vector<GradedDims> dims;  // per cell
  /// (lower cell, upper cell) with lower in the closure of upper -> per-degree
  /// rank of the generization map from the lower stratum to the upper one.
  std::map<std::pair<std::size_t, std::size_t>, GradedDims> ranks;
  bool constancy_verified = false;

  GradedDims at(const Point& x) const;
  std::vector<int> degrees() const;
};

StalkField convolve_grid(const SheafObject& f, const Rational& a, Norm norm = Norm::linf);

struct IndicatorResult {
  std::optional<CellSet> support;
  std::string diagnostic;
};
IndicatorResult recognize_indicator(const StalkField& sf, int degree);

/// Rebuilds a sheaf object from a field whose cohomology sheaves are all
/// recognized indicators living in a single degree; nothing otherwise.
std::optional<SheafObject> field_as_object(const StalkField& sf, std::string* why = nullptr);

/// K_b * (K_a * F), computed generator by generator through recognized
/// intermediates. Nothing when an intermediate is not a single-degree
/// indicator.
std::optional<StalkField> convolve_twice(const SheafObject& f, const Rational& a,
                                         const Rational& b, std::string* why = nullptr);

/// Compares two fields stalk by stalk on the common refinement of their
/// grids; returns the first disagreeing point, if any.
std::optional<Point> first_difference(const StalkField& lhs, const StalkField& rhs);

}  // namespace sheafradon
