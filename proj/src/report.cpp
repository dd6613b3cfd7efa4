#include "hsums/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace hsums {

std::string VerificationReport::to_json() const {
  nlohmann::json j{
      {"report_version", kReportVersion},
      {"spec", spec},
      {"closed_form", closed_form},
      {"oracle_value", oracle.value},
      {"oracle_error_bound", oracle.error_bound},
      {"oracle_terms_used", oracle.terms_used},
      {"abs_diff", abs_diff},
      {"tolerance", tolerance},
      {"pass", pass},
  };
  if (exact_form) j["exact_form"] = *exact_form;
  return j.dump();
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport r;
  r.spec = j.at("spec").get<std::string>();
  r.closed_form = j.at("closed_form").get<double>();
  r.oracle.value = j.at("oracle_value").get<double>();
  r.oracle.error_bound = j.at("oracle_error_bound").get<double>();
  r.oracle.terms_used = j.at("oracle_terms_used").get<std::int64_t>();
  r.abs_diff = j.at("abs_diff").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  if (j.contains("exact_form")) r.exact_form = j.at("exact_form").get<std::string>();
  return r;
}

VerificationReport make_report(std::string spec_text, double closed_form,
                               const OracleEstimate& oracle, double tolerance,
                               std::optional<std::string> exact_form) {
  VerificationReport r;
  r.spec = std::move(spec_text);
  r.closed_form = closed_form;
  r.oracle = oracle;
  r.abs_diff = std::abs(closed_form - oracle.value);
  r.tolerance = tolerance;
  r.pass = r.abs_diff <= tolerance + oracle.error_bound;
  r.exact_form = std::move(exact_form);
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(nlohmann::json::parse(r.to_json()));
  return arr.dump(2);
}

}  // namespace hsums
