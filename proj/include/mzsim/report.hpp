#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzsim {

/// One report line. Fields that do not apply to a scenario are NaN
/// ("nan" in CSV, null in JSON).
struct ReportRow {
  std::string scenario;
  double p = 0.0;
  double t = 0.0;
  double t_r = 0.0;
  double eta_a = 0.0;
  double eta_b = 0.0;
  double v_sim = 0.0;
  double v_formula = 0.0;
  double abs_err = 0.0;
  double success_prob = 0.0;
};

enum class ReportFormat { csv, json };

ReportFormat parse_format(const std::string& s);

inline constexpr std::string_view kCsvHeader =
    "scenario,p,t,t_r,eta_a,eta_b,v_sim,v_formula,abs_err,success_prob";

/// Nine significant digits, "nan" for NaN.
std::string format_number(double x);
/// `x` rounded to what format_number prints.
double printed_value(double x);

std::string to_csv(std::span<const ReportRow> rows);
std::string to_json(std::span<const ReportRow> rows);
std::vector<ReportRow> parse_csv(std::string_view text);
std::vector<ReportRow> parse_json(std::string_view text);

/// Writes the rows to `path`, or to `out` when the path is empty or "-".
/// Throws DomainError on an empty row set and IoError when the file cannot be written.
void emit_report(std::span<const ReportRow> rows, ReportFormat format, const std::string& path, std::ostream& out);

}  // namespace mzsim
