#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsums/oracle.hpp"

namespace hsums {

inline constexpr int kReportVersion = 1;

// Outcome of one closed-form vs oracle comparison.
// pass <=> abs_diff <= tolerance + oracle.error_bound.
struct VerificationReport {
  std::string spec;                      // rendered parameters
  double closed_form = 0.0;
  OracleEstimate oracle;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<std::string> exact_form;  // rendered ConstCombo, when available

  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);
};

VerificationReport make_report(std::string spec_text, double closed_form,
                               const OracleEstimate& oracle, double tolerance,
                               std::optional<std::string> exact_form = std::nullopt);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace hsums
