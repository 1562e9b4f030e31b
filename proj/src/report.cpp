#include "mzsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

using json = nlohmann::json;

constexpr const char* kFields[] = {"p", "t", "t_r", "eta_a", "eta_b", "v_sim", "v_formula", "abs_err", "success_prob"};

constexpr double ReportRow::*kMembers[] = {&ReportRow::p,     &ReportRow::t,       &ReportRow::t_r,
                                           &ReportRow::eta_a, &ReportRow::eta_b,   &ReportRow::v_sim,
                                           &ReportRow::v_formula, &ReportRow::abs_err, &ReportRow::success_prob};

constexpr std::size_t kFieldCount = std::size(kFields);

double parse_number(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "' in report");
  }
  if (used != s.size()) throw DomainError("malformed number '" + s + "' in report");
  return v;
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  throw DomainError("unknown output format '" + s + "' (expected csv or json)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double printed_value(double x) { return parse_number(format_number(x)); }

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    if (r.scenario.find_first_of(",\n\"") != std::string::npos)
      throw DomainError("scenario name may not contain commas, quotes or newlines");
    out += r.scenario;
    for (std::size_t i = 0; i < kFieldCount; ++i) {
      out += ',';
      out += format_number(r.*kMembers[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(std::span<const ReportRow> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json rec;
    rec["scenario"] = r.scenario;
    for (std::size_t i = 0; i < kFieldCount; ++i) {
      const double v = r.*kMembers[i];
      rec[kFields[i]] = std::isnan(v) ? json(nullptr) : json(printed_value(v));
    }
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("report CSV header mismatch");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != kFieldCount + 1) throw DomainError("report CSV row has the wrong number of columns");
    ReportRow r;
    r.scenario = cells[0];
    for (std::size_t i = 0; i < kFieldCount; ++i) r.*kMembers[i] = parse_number(cells[i + 1]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReportRow> parse_json(std::string_view text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("report JSON is malformed: ") + e.what());
  }
  if (!arr.is_array()) throw DomainError("report JSON must be an array");
  std::vector<ReportRow> rows;
  try {
    for (const auto& rec : arr) {
      ReportRow r;
      r.scenario = rec.at("scenario").get<std::string>();
      for (std::size_t i = 0; i < kFieldCount; ++i) {
        const auto& v = rec.at(kFields[i]);
        r.*kMembers[i] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
      }
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("report JSON record is malformed: ") + e.what());
  }
  return rows;
}

void emit_report(std::span<const ReportRow> rows, ReportFormat format, const std::string& path, std::ostream& out) {
  if (rows.empty()) throw DomainError("refusing to emit an empty report");
  const std::string text = format == ReportFormat::csv ? to_csv(rows) : to_json(rows);
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoError("failed to write report");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed to write '" + path + "'");
}

}  // namespace mzsim
