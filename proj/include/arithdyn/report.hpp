#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace arithdyn {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& name);

/// A command result: one JSON document plus a flat table view of the same
/// numbers. Formatting is deterministic; floats go through a fixed
/// 12-significant-digit rendering in every view, so table, CSV, and JSON
/// carry identical numeric content and identical runs emit identical bytes.
class Report {
 public:
  nlohmann::ordered_json json = nlohmann::ordered_json::object();

  void table_headers(std::vector<std::string> headers) { headers_ = std::move(headers); }
  void table_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  /// Free-form lines printed before the table in table mode.
  void note(std::string line) { notes_.push_back(std::move(line)); }

  std::string render(OutputFormat format) const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> notes_;
};

/// 12 significant digits, deterministic.
std::string format_real(double x);
std::string format_real(long double x);

/// The same value as a JSON number rounded to 12 significant digits.
nlohmann::ordered_json json_real(double x);

}  // namespace arithdyn
