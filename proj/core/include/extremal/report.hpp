#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal {

// One verification row. status is "pass", "fail" (both gating) or an
// informational tag such as "info" or "inconsistent" that never gates.
struct ReportRow {
  std::string model;
  std::string cone;
  std::string rect_kind;
  double x = 0.0;
  double y = 0.0;
  double analytic = 0.0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::string status = "info";

  bool gating() const noexcept { return status == "pass" || status == "fail"; }
  bool failed() const noexcept { return status == "fail"; }
};

inline constexpr const char* kReportHeader = "model,cone,rect_kind,x,y,analytic,estimate,stderr,pass";

// Pass iff |estimate - analytic| <= max(abs_tol, 4 stderr).
ReportRow compare_row(std::string model, std::string cone, std::string rect_kind, double x, double y,
                      double analytic, double estimate, double stderr_, double abs_tol);

// Stable order by (model, cone, rect_kind, x, y).
void sort_rows(std::vector<ReportRow>& rows);

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void write_report_json(const std::vector<ReportRow>& rows, std::ostream& out);
// Format picked from the extension (.json, otherwise csv). ConfigError when
// the file is missing or malformed.
std::vector<ReportRow> read_report(const std::string& path);

// Prints failing rows and informational findings; returns 0 iff no gating
// row failed, 2 when a file cannot be read.
int report_summary(const std::vector<std::string>& paths, std::ostream& out);

}  // namespace extremal
