#pragma once

#include <string>
#include <vector>

namespace fmm {

/// Worked reference example: four-dimensional memories a^1..a^3, a noisy
/// probe x, and the published values they should reproduce (two decimals,
/// except the trained weight matrix, which is exact).
struct ReferenceFixtures {
  std::vector<std::vector<double>> memories;
  std::vector<double> input;

  std::vector<std::vector<double>> godel_min_d_weights;
  std::vector<double> afmm_godel, afmm_goguen, afmm_lukasiewicz, afmm_gaines;

  std::vector<double> pafmm_godel_coefficients;
  std::vector<double> pafmm_godel, pafmm_goguen, pafmm_lukasiewicz;

  std::vector<double> compensatory_coefficients;
  /// Recall of each stored memory by the compensatory-and projection memory.
  std::vector<std::vector<double>> compensatory_recalls;

  /// NMSE against a^1 of: x, the four distributed recalls, the three
  /// projection recalls and the Zadeh recall, in that order.
  std::vector<double> nmse_row;

  double tolerance = 0.005;
  double exact_tolerance = 1e-12;
};

const ReferenceFixtures& default_fixtures();

struct ReferenceCheck {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ReferenceReport {
  std::vector<ReferenceCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  /// One "PASS name" / "FAIL name" line per check plus a summary line.
  std::string to_text() const;
  std::string to_json() const;
};

/// Recomputes every reference value from the fixture memories and input.
/// Malformed fixtures surface as failed checks rather than exceptions.
ReferenceReport run_reference_checks(const ReferenceFixtures& fixtures = default_fixtures());

}  // namespace fmm
