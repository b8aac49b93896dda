#include "sortition/weights.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <limits>

namespace sortition {

double WeightVector::min_weight() const { return *std::min_element(w.begin(), w.end()); }

double WeightVector::max_weight() const { return *std::max_element(w.begin(), w.end()); }

void WeightVector::check() const {
  if (w.empty()) throw EmptyInput();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw NonPositiveWeight(i, w[i]);
    sum += w[i];
  }
  if (std::abs(sum - 1.0) > kUnitSumTolerance)
    throw SortitionError("weights sum to " + std::to_string(sum) + ", expected 1");
}

WeightVector validate_weights(const std::vector<double>& raw) {
  if (raw.empty()) throw EmptyInput();
  double sum = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0.0) || !std::isfinite(raw[i])) throw NonPositiveWeight(i, raw[i]);
    sum += raw[i];
  }
  WeightVector out;
  out.w.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out.w[i] = raw[i] / sum;
  return out;
}

IntegerWeightVector validate_integer_weights(const std::vector<std::uint64_t>& raw) {
  if (raw.empty()) throw EmptyInput();
  IntegerWeightVector out;
  out.raw = raw;
  out.total = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0) throw NonPositiveWeight(i, 0.0);
    const std::uint64_t next = out.total + raw[i];
    if (next < out.total) throw CountOverflow("integer weight total exceeds 64 bits");
    out.total = next;
  }
  return out;
}

WeightVector IntegerWeightVector::normalized() const {
  WeightVector out;
  out.w.resize(raw.size());
  const double t = static_cast<double>(total);
  for (std::size_t i = 0; i < raw.size(); ++i) out.w[i] = static_cast<double>(raw[i]) / t;
  return out;
}

namespace {

struct CsvRow {
  std::string id;
  std::string weight;
};

std::vector<CsvRow> read_weight_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open weight file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputFormatError("empty weight file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "id,weight")
    throw InputFormatError("expected header 'id,weight' in " + path + ", got '" + line + "'");
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw InputFormatError(path + ":" + std::to_string(line_no) + ": missing comma");
    rows.push_back({line.substr(0, comma), line.substr(comma + 1)});
  }
  if (rows.empty()) throw EmptyInput();
  return rows;
}

}  // namespace

WeightVector load_weight_csv(const std::string& path) {
  const auto rows = read_weight_rows(path);
  std::vector<double> raw;
  raw.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double v = 0.0;
    const char* first = rows[i].weight.data();
    const char* last = first + rows[i].weight.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
      throw InputFormatError(path + ": bad weight '" + rows[i].weight + "' at row " +
                             std::to_string(i + 1));
    raw.push_back(v);
  }
  return validate_weights(raw);
}

IntegerWeightVector load_integer_weight_csv(const std::string& path) {
  const auto rows = read_weight_rows(path);
  std::vector<std::uint64_t> raw;
  raw.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t v = 0;
    const char* first = rows[i].weight.data();
    const char* last = first + rows[i].weight.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
      throw InputFormatError(path + ": bad integer weight '" + rows[i].weight + "' at row " +
                             std::to_string(i + 1));
    raw.push_back(v);
  }
  return validate_integer_weights(raw);
}

}  // namespace sortition
