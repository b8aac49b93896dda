#pragma once

#include <string>
#include <vector>

#include "sortition/metrics.hpp"
#include "sortition/outcome.hpp"
#include "sortition/sweeps.hpp"

namespace sortition {

// Locale-independent shortest decimal for doubles (std::to_chars).
std::string format_double(double value);

// Fixed 12 significant digits, for CSV cells.
std::string format_double_12(double value);

// JSON documents, one line, stable key order. Participant ids are 1-based.
std::string outcome_to_json(const SelectionOutcome& outcome, Algorithm alg,
                            std::uint64_t seed);
std::string report_to_json(const DecentralizationReport& report);
std::string fairness_to_json(const FairnessTestResult& result, Algorithm alg);

// CSV documents with fixed headers.
std::string mmax_csv(const std::vector<MmaxRow>& rows);
std::string lambda_s_csv(const std::vector<LambdaSRow>& rows);
std::string lambda_alpha_csv(const std::vector<LambdaAlphaRow>& rows);

}  // namespace sortition
