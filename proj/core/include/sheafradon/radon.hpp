#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheafradon/sheaf.hpp"

namespace sheafradon {

enum class BirthKind { minus_infinity, at_point, just_after };
enum class DeathKind { at_point, just_before, plus_infinity };

std::string to_string(BirthKind k);
std::string to_string(DeathKind k);

struct Birth {
  BirthKind kind = BirthKind::minus_infinity;
  Surd level;
  friend bool operator==(const Birth& a, const Birth& b) {
    return a.kind == b.kind && (a.kind == BirthKind::minus_infinity || a.level == b.level);
  }
};

struct Death {
  DeathKind kind = DeathKind::plus_infinity;
  Surd level;
  friend bool operator==(const Death& a, const Death& b) {
    return a.kind == b.kind && (a.kind == DeathKind::plus_infinity || a.level == b.level);
  }
};

/// One interval summand k_I in cohomological degree `degree`.
struct Bar {
  int degree = 0;
  Birth birth;
  Death death;
  long mult = 1;

  bool bounded() const {
    return birth.kind != BirthKind::minus_infinity && death.kind != DeathKind::plus_infinity;
  }
  bool full_line() const {
    return birth.kind == BirthKind::minus_infinity && death.kind == DeathKind::plus_infinity;
  }
  /// Whether the level u lies in the interval.
  bool contains(const Surd& u) const;
  std::string to_string() const;

  friend bool operator==(const Bar& a, const Bar& b) {
    return a.degree == b.degree && a.birth == b.birth && a.death == b.death && a.mult == b.mult;
  }
};

/// Multiset of bars kept in a canonical order with equal bars merged.
class DecoratedBarcode {
 public:
  DecoratedBarcode() = default;
  explicit DecoratedBarcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }
  /// Total multiplicity of bars of `degree` containing level u.
  long dim_at(int degree, const Surd& u) const;
  std::string to_string() const;

  friend bool operator==(const DecoratedBarcode& a, const DecoratedBarcode& b) { return a.bars_ == b.bars_; }

 private:
  std::vector<Bar> bars_;
};

/// Adds delta to every finite endpoint.
DecoratedBarcode translate(const DecoratedBarcode& b, const Surd& delta);

/// t -> H^*_c(support n {x.d <= t}) on the strata of the line cut at the
/// critical levels s_0 < ... < s_{m-1}. Stratum 2k+1 is {s_k}; stratum 2k is
/// the open interval below s_k (above s_{k-1}); stratum 2m is above s_{m-1}.
struct DirectionalProfile {
  Direction direction;
  std::vector<Surd> levels;
  /// degree -> table r[i][j] (i <= j) of ranks of the restriction from the
  /// stratum j sublevel set to the stratum i one; r[i][i] is the dimension.
  std::map<int, std::vector<std::vector<long>>> ranks;

  std::size_t strata() const { return 2 * levels.size() + 1; }
  Surd representative(std::size_t stratum) const;
  /// 0 outside the table; symmetric in (i, j).
  long rank(int degree, long i, long j) const;
  long dim(int degree, std::size_t stratum) const { return rank(degree, static_cast<long>(stratum), static_cast<long>(stratum)); }
  GradedDims dims_at(std::size_t stratum) const;
};

/// K_a * base (a >= 0) when `ball` is set, else base itself.
struct ConvolvedSheaf {
  SheafObject base;
  std::optional<BallSpec> ball;
};

enum class RankMethod { persistence, restriction };

/// Shift h(d) with {x.d <= t} + ball = {x.d <= t + h(d)}.
Surd ball_support(const BallSpec& ball, const Direction& d);

std::vector<Surd> critical_levels(const ConvolvedSheaf& f, const Direction& d);
DirectionalProfile profile(const ConvolvedSheaf& f, const Direction& d,
                           RankMethod method = RankMethod::persistence,
                           const std::vector<Surd>& extra_levels = {});
/// Throws std::logic_error when the ranks imply a negative multiplicity.
DecoratedBarcode decompose(const DirectionalProfile& p);

/// n primitive directions of small height spread evenly over the circle.
std::vector<Direction> default_directions(std::size_t n);

/// Scaled level x.d divided by the norm dual to the ball: |d|_2 for L2 and
/// |d|_1 for L-infinity.
Surd to_unit(const Surd& scaled, const Direction& d, Norm norm = Norm::l2);

struct RadonSummary {
  std::vector<Direction> directions;
  std::vector<DecoratedBarcode> barcodes;
  /// Scaled birth of the single degree-1 closed half-infinite bar, when the
  /// barcode has exactly that shape.
  std::vector<std::optional<Surd>> phi;
  bool has_phi() const;
};

std::optional<Surd> epigraph_level(const DecoratedBarcode& b);
RadonSummary radon_summary(const ConvolvedSheaf& f, const std::vector<Direction>& directions);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> details;
  void fail(const std::string& why) {
    ok = false;
    details.push_back(why);
  }
};

/// Barcode of K_a * F in direction d equals that of F moved down by the ball
/// support, and the maps induced by K_a -> K_b (b in {0, a/2}) have the ranks
/// the translated barcode predicts.
CheckReport shift_identity_check(const SheafObject& f, const BallSpec& ball, const Direction& d);

/// Degree-0 dimension of R Gamma_c({z : z.y <= t, |z - x| <= a}) with
/// y = d / |d|, t in unit coordinates, found by a half-plane / disc test.
long composed_kernel_stalk(const Direction& d, const Rational& t, const Point& x, const Rational& a);
/// Indicator of {x.y <= t + a}.
bool thickened_incidence(const Direction& d, const Rational& t, const Point& x, const Rational& a);

struct HalfplaneStalkReport {
  std::size_t samples = 0;
  std::size_t boundary_cases = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> first_counterexamples;
};
HalfplaneStalkReport halfplane_stalk_verify(const std::vector<Direction>& dirs, const std::vector<Rational>& ts,
                                   const std::vector<Point>& xs, const std::vector<Rational>& radii);

/// Euler characteristic of the top stratum equals chi_c of the support data
/// in every direction.
CheckReport chi_c_conservation(const ConvolvedSheaf& f, const std::vector<Direction>& directions);

}  // namespace sheafradon
