#include "extremal/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <tuple>

#include "extremal/errors.hpp"

namespace extremal {

ReportRow compare_row(std::string model, std::string cone, std::string rect_kind, double x, double y,
                      double analytic, double estimate, double stderr_, double abs_tol) {
  ReportRow r{std::move(model), std::move(cone), std::move(rect_kind), x, y, analytic, estimate, stderr_};
  bool ok = std::abs(estimate - analytic) <= std::max(abs_tol, 4.0 * stderr_);
  r.status = ok ? "pass" : "fail";
  return r;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.model, a.cone, a.rect_kind, a.x, a.y) <
           std::tie(b.model, b.cone, b.rect_kind, b.x, b.y);
  });
}

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

double parse_num(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  std::ostringstream os;
  os << kReportHeader << '\n';
  for (const ReportRow& r : rows)
    os << r.model << ',' << r.cone << ',' << r.rect_kind << ',' << num(r.x) << ',' << num(r.y) << ','
       << num(r.analytic) << ',' << num(r.estimate) << ',' << num(r.stderr_) << ',' << r.status << '\n';
  out << os.str();
}

void write_report_json(const std::vector<ReportRow>& rows, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  // JSON has no infinities; they travel as strings like in the CSV.
  auto jnum = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return num(v);
  };
  for (const ReportRow& r : rows)
    arr.push_back({{"model", r.model},
                   {"cone", r.cone},
                   {"rect_kind", r.rect_kind},
                   {"x", jnum(r.x)},
                   {"y", jnum(r.y)},
                   {"analytic", jnum(r.analytic)},
                   {"estimate", jnum(r.estimate)},
                   {"stderr", jnum(r.stderr_)},
                   {"pass", r.status}});
  out << arr.dump(2) << '\n';
}

std::vector<ReportRow> read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open report '" + path + "'");
  std::vector<ReportRow> rows;
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  try {
    if (json) {
      nlohmann::json arr = nlohmann::json::parse(in);
      auto jd = [](const nlohmann::json& v) {
        return v.is_string() ? parse_num(v.get<std::string>()) : v.get<double>();
      };
      for (const auto& o : arr)
        rows.push_back({o.at("model").get<std::string>(), o.at("cone").get<std::string>(),
                        o.at("rect_kind").get<std::string>(), jd(o.at("x")), jd(o.at("y")),
                        jd(o.at("analytic")), jd(o.at("estimate")), jd(o.at("stderr")),
                        o.at("pass").get<std::string>()});
      return rows;
    }
    std::string line;
    if (!std::getline(in, line) || split(line) != split(kReportHeader))
      throw ConfigError("report '" + path + "': unexpected header");
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto f = split(line);
      if (f.size() != 9) throw ConfigError("report '" + path + "': expected 9 columns");
      rows.push_back({f[0], f[1], f[2], parse_num(f[3]), parse_num(f[4]), parse_num(f[5]),
                      parse_num(f[6]), parse_num(f[7]), f[8]});
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("report '" + path + "' is malformed: " + e.what());
  }
  return rows;
}

int report_summary(const std::vector<std::string>& paths, std::ostream& out) {
  std::size_t gating = 0, failed = 0;
  std::vector<ReportRow> all;
  for (const std::string& p : paths) {
    try {
      auto rows = read_report(p);
      all.insert(all.end(), rows.begin(), rows.end());
    } catch (const ConfigError& e) {
      out << "error: " << e.what() << '\n';
      return 2;
    }
  }
  for (const ReportRow& r : all) {
    if (r.gating()) ++gating;
    if (r.failed()) {
      ++failed;
      out << "FAIL " << r.model << ' ' << r.cone << ' ' << r.rect_kind << " (" << num(r.x) << ", "
          << num(r.y) << "): analytic " << num(r.analytic) << ", estimate " << num(r.estimate)
          << " +- " << num(r.stderr_) << '\n';
    }
  }
  for (const ReportRow& r : all) {
    if (r.rect_kind == "atom_balance")
      out << "atom at theta = 1/2: measured " << num(r.estimate) << ", balance value " << num(r.analytic)
          << " [" << r.status << "]\n";
    if (r.rect_kind == "atom_stated")
      out << "atom at theta = 1/2: stated value 2 - sqrt(3) = " << num(r.analytic)
          << " is inconsistent with the measured " << num(r.estimate)
          << " and with the balance int (1-w) S(dw) = 1\n";
  }
  out << (gating - failed) << "/" << gating << " gating rows pass";
  if (all.size() > gating) out << ", " << (all.size() - gating) << " informational";
  out << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace extremal
