#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheafradon/radon.hpp"

namespace sheafradon {

/// Nonnegative value in a quadratic field, or +infinity.
struct Cost {
  bool infinite = false;
  Surd value;

  static Cost inf() { return {true, Surd()}; }
  static Cost of(Surd v) { return {false, std::move(v)}; }
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);
};

Cost max(const Cost& a, const Cost& b);
Cost min(const Cost& a, const Cost& b);
Cost operator+(const Cost& a, const Cost& b);

/// Cost of matching two bars: max of the endpoint displacements when both
/// have the same pattern of infinite ends and the same degree, else infinity.
Cost interval_cost(const Bar& a, const Bar& b);
/// Half the length of a bounded bar; infinity for any unbounded one.
Cost deletion_cost(const Bar& b);
/// Interleaving value of the two single-interval modules: either match them
/// or kill both.
Cost single_interval_distance(const Bar& a, const Bar& b);

/// Per-interval effect of thickening by a >= 0 on a barcode on the line.
DecoratedBarcode convolution_action(const DecoratedBarcode& b, const Rational& a);

/// Bars of unit multiplicity; one entry per copy.
std::vector<Bar> expand(const DecoratedBarcode& b);

struct MatchingCertificate {
  Cost value;
  std::vector<std::pair<Bar, Bar>> matched;  // (left, right)
  std::vector<Bar> deleted_left;
  std::vector<Bar> deleted_right;

  /// Every cost within value and every bar of both sides used exactly once.
  bool validate(const DecoratedBarcode& left, const DecoratedBarcode& right, std::string* why = nullptr) const;
};

enum class BoundKind { exact, lower_bound, upper_bound };
std::string to_string(BoundKind k);

/// The pair f = id on K_a * F, g = chi_{2a,0} * F interleaving F with K_a * F.
struct ShiftCertificate {
  Rational a;
  ChiArrow g{0, 0};
  bool validate() const;
  std::string to_string() const;
};

struct DistanceReport {
  Cost value;
  BoundKind kind = BoundKind::exact;
  std::optional<MatchingCertificate> matching;
  std::optional<ShiftCertificate> shift;
  std::optional<Direction> witness;
};

DistanceReport bottleneck(const DecoratedBarcode& left, const DecoratedBarcode& right);

/// Barcode with every finite level divided by the dual norm of d.
DecoratedBarcode unit_barcode(const DecoratedBarcode& b, const Direction& d, Norm norm);

/// Norm used for unit normalization: the ball's when there is one, else L2
/// on convex scenes and L-infinity on grid scenes.
Norm natural_norm(const ConvolvedSheaf& f);

DistanceReport sup_direction_distance(const ConvolvedSheaf& f, const ConvolvedSheaf& g,
                                      const std::vector<Direction>& directions, bool localized = false);

DistanceReport shift_upper_bound(const SheafObject& f, const Rational& a);

/// Drops full-line bars.
DecoratedBarcode localized_strip(const DecoratedBarcode& b);

/// Whether `localized` <= `plain` is a valid conclusion given the two kinds
/// and holds for the values.
bool localized_bound_check(const DistanceReport& localized, const DistanceReport& plain);

/// Radius a >= 0 with g = K_a * f when that is visible from the data:
/// concentric discs, or boxes that are L-infinity dilations of each other.
std::optional<Rational> thickening_radius(const SheafObject& f, const SheafObject& g, Norm norm);

}  // namespace sheafradon
