#include "sortition/report_io.hpp"

#include <charconv>

#include <json.hpp>

namespace sortition {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  const auto res = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, res.ptr);
}

std::string format_double_12(double value) {
  char buffer[64];
  const auto res =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 12);
  return std::string(buffer, res.ptr);
}

std::string outcome_to_json(const SelectionOutcome& outcome, Algorithm alg,
                            std::uint64_t seed) {
  ordered_json doc;
  doc["algorithm"] = algorithm_name(alg);
  doc["seed"] = seed;
  doc["rounds_used"] = outcome.rounds_used;
  auto members = ordered_json::array();
  for (auto m : outcome.members) members.push_back(m + 1);  // 1-based ids
  doc["members"] = std::move(members);
  doc["raw_g"] = outcome.raw_g;
  doc["voting_power"] = outcome.voting_power;
  return doc.dump();
}

std::string report_to_json(const DecentralizationReport& report) {
  ordered_json doc;
  doc["algorithm"] = algorithm_name(report.algorithm);
  doc["lambda"] = report.lambda;
  doc["lambda_kind"] = report.lambda_kind == LambdaKind::exact ? "exact" : "lower_bound";
  doc["feasible"] = report.feasible;
  doc["adversary_tolerance"] = report.adversary_tolerance;
  ordered_json details = ordered_json::object();
  if (!report.supporting_label.empty()) details[report.supporting_label] = report.supporting;
  doc["details"] = std::move(details);
  return doc.dump();
}

std::string fairness_to_json(const FairnessTestResult& result, Algorithm alg) {
  ordered_json doc;
  doc["algorithm"] = algorithm_name(alg);
  doc["trials"] = result.trials;
  doc["max_sigma_deviation"] = result.max_sigma_deviation;
  doc["worst_index"] = result.worst_index + 1;  // 1-based id
  doc["mean_power"] = result.mean_power;
  doc["std_error"] = result.std_error;
  doc["deviation"] = result.deviation;
  return doc.dump();
}

std::string mmax_csv(const std::vector<MmaxRow>& rows) {
  std::string out = "s,stitch_m_max,crs_m_max\n";
  for (const auto& row : rows) {
    out += format_double_12(row.s);
    out += ',';
    out += std::to_string(row.stitch_m_max);
    out += ',';
    out += std::to_string(row.crs_m_max);
    out += '\n';
  }
  return out;
}

std::string lambda_s_csv(const std::vector<LambdaSRow>& rows) {
  std::string out = "s,algorithm,feasible,lambda,lambda_kind,alpha\n";
  for (const auto& row : rows) {
    out += format_double_12(row.s);
    out += ',';
    out += algorithm_name(row.algorithm);
    out += ',';
    out += row.feasible ? '1' : '0';
    out += ',';
    if (row.feasible) out += format_double_12(row.lambda);
    out += ',';
    out += row.kind == LambdaKind::exact ? "exact" : "lower_bound";
    out += ',';
    if (row.algorithm == Algorithm::wrs && row.feasible) out += format_double_12(row.alpha);
    out += '\n';
  }
  return out;
}

std::string lambda_alpha_csv(const std::vector<LambdaAlphaRow>& rows) {
  std::string out = "s,alpha,feasible,lambda,is_argmax\n";
  for (const auto& row : rows) {
    out += format_double_12(row.s);
    out += ',';
    out += format_double_12(row.alpha);
    out += ',';
    out += row.feasible ? '1' : '0';
    out += ',';
    if (row.feasible) out += format_double_12(row.lambda);
    out += ',';
    out += row.is_argmax ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace sortition
