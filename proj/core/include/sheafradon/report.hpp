#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheafradon/distance.hpp"
#include "sheafradon/radon.hpp"

namespace sheafradon {

/// One row per bar: dir_index, dx, dy, degree, then exact / unit / decoration
/// columns for each endpoint, then mult.
std::string barcode_csv(const RadonSummary& s, Norm norm);

/// Profile picture: for each direction angle, the unit birth of every bar,
/// with the region above the epigraph level shaded when it exists. `shift`
/// draws the same region moved down by that amount as well.
std::string profile_svg(const RadonSummary& s, Norm norm, const std::optional<Rational>& shift = std::nullopt);

/// Stalk dimensions of a thickened object at sample points.
struct StalkSamples {
  Box window;
  std::vector<Point> points;
  std::vector<GradedDims> dims;
};

/// Samples on the lattice of the window with `per_side` points per axis.
StalkSamples sample_convolution(const SheafObject& f, const BallSpec& ball, int per_side);

std::string stalk_field_csv(const StalkField& sf);
std::string stalk_samples_csv(const StalkSamples& s);
/// Cells (or sample dots) colored by the degrees where the stalk is nonzero.
std::string stalk_field_svg(const StalkField& sf);
std::string stalk_samples_svg(const StalkSamples& s);

/// Fixed-format decimal used by every text output, so files do not depend on
/// locale or platform defaults.
std::string format_double(double v);

}  // namespace sheafradon
