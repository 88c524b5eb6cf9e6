#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sheafradon {

/// Unit-coordinate tolerance; everything in scaled coordinates is exact.
inline constexpr double kUnitTolerance = 1e-9;

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::string expected;
  std::string computed;
  double seconds = 0;
  std::vector<std::string> failures;  // first few only
  std::size_t failure_count = 0;

  void fail(const std::string& why);
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::size_t directions = 64;
  std::uint64_t seed = 20240601;
};

CheckResult check_disc_barcodes(const SuiteOptions& o);
CheckResult check_thickening_thresholds(const SuiteOptions& o);
CheckResult check_epigraph(const SuiteOptions& o);
CheckResult check_halfplane_disc_lattice(const SuiteOptions& o);
CheckResult check_pinch(const SuiteOptions& o);
CheckResult check_functor_laws(const SuiteOptions& o);
CheckResult check_properties(const SuiteOptions& o);
CheckResult check_localized_inequality(const SuiteOptions& o);

SuiteReport run_reference_suite(const SuiteOptions& o = {});

}  // namespace sheafradon
