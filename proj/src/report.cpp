#include "arithdyn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "arithdyn/error.hpp"

namespace arithdyn {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  fail(ErrorKind::Parameter, "unknown output format '" + name + "' (table, json, csv)");
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_real(long double x) { return format_real(static_cast<double>(x)); }

nlohmann::ordered_json json_real(double x) {
  return nlohmann::ordered_json::parse(format_real(x));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::render(OutputFormat format) const {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json:
      out << json.dump(2) << "\n";
      break;
    case OutputFormat::Csv: {
      if (!headers_.empty()) {
        for (std::size_t i = 0; i < headers_.size(); ++i) {
          out << (i ? "," : "") << csv_escape(headers_[i]);
        }
        out << "\n";
      }
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_escape(row[i]);
        }
        out << "\n";
      }
      break;
    }
    case OutputFormat::Table: {
      for (const auto& n : notes_) out << n << "\n";
      if (!headers_.empty() || !rows_.empty()) {
        std::vector<std::size_t> widths;
        auto widen = [&](const std::vector<std::string>& row) {
          if (widths.size() < row.size()) widths.resize(row.size(), 0);
          for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
          }
        };
        widen(headers_);
        for (const auto& r : rows_) widen(r);
        auto emit = [&](const std::vector<std::string>& row) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "  " : "");
            out << row[i];
            if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size(), ' ');
          }
          out << "\n";
        };
        if (!headers_.empty()) {
          emit(headers_);
          std::size_t total = 0;
          for (std::size_t i = 0; i < widths.size(); ++i) total += widths[i] + (i ? 2 : 0);
          out << std::string(total, '-') << "\n";
        }
        for (const auto& r : rows_) emit(r);
      }
      break;
    }
  }
  return out.str();
}

}  // namespace arithdyn
