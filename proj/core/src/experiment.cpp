#include "extremal/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "extremal/angular.hpp"
#include "extremal/errors.hpp"
#include "extremal/estimate.hpp"
#include "extremal/extend.hpp"
#include "extremal/glue.hpp"
#include "extremal/limits.hpp"
#include "extremal/samplers.hpp"
#include "extremal/standardize.hpp"

namespace extremal {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("setting '" + key + "': '" + v + "' is not a number");
  }
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
    unsigned long long d = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("setting '" + key + "': '" + v + "' is not a nonnegative integer");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("setting '" + key + "': '" + v + "' is not a boolean");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "model") {
    static const char* known[] = {"ex51", "ex52", "ex53", "angular", "product", "diagonal"};
    if (std::find(std::begin(known), std::end(known), v) == std::end(known))
      throw ConfigError("unknown model '" + v + "'");
    cfg.model = v;
  } else if (key == "rho") {
    cfg.rho = to_double(key, v);
  } else if (key == "alpha") {
    cfg.alpha = to_double(key, v);
  } else if (key == "g") {
    distribution_from_name(v);
    cfg.g = v;
  } else if (key == "h" || key == "H") {
    distribution_from_name(v);
    cfg.h = v;
  } else if (key == "s" || key == "S") {
    angular_from_name(v);
    cfg.s = v;
  } else if (key == "n") {
    cfg.n = to_uint(key, v);
  } else if (key == "k") {
    cfg.k = to_uint(key, v);
  } else if (key == "seed") {
    cfg.seed = to_uint(key, v);
    cfg.seed_set = true;
  } else if (key == "cones" || key == "cone") {
    cfg.cones = split_list(v);
    for (const auto& c : cfg.cones) cone_from_string(c);
  } else if (key == "form") {
    if (v != "natural" && v != "standard") throw ConfigError("form must be natural or standard");
    cfg.form = v;
  } else if (key == "xs" || key == "ys") {
    std::vector<double> vals;
    for (const auto& item : split_list(v)) vals.push_back(to_double(key, item));
    (key == "xs" ? cfg.xs : cfg.ys) = vals;
  } else if (key == "output") {
    cfg.output = v;
  } else if (key == "format") {
    if (v != "csv" && v != "json") throw ConfigError("format must be csv or json");
    cfg.format = v;
  } else if (key == "eps") {
    cfg.eps = to_double(key, v);
  } else if (key == "eps2") {
    cfg.eps2 = to_double(key, v);
  } else if (key == "tol") {
    cfg.tol = to_double(key, v);
  } else if (key == "eta") {
    cfg.eta = to_double(key, v);
  } else if (key == "check_normalization") {
    cfg.check_normalization = to_bool(key, v);
  } else if (key == "atom") {
    cfg.atom = to_bool(key, v);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  for (const auto& [key, value] : parse_key_values(in)) apply_setting(cfg, key, value);
}

void apply_seed_fallback(ExperimentConfig& cfg) {
  if (cfg.seed_set) return;
  if (const char* env = std::getenv("EXTREMAL_SEED")) {
    cfg.seed = to_uint("EXTREMAL_SEED", env);
    cfg.seed_set = true;
  }
}

ModelSpec model_from_config(const ExperimentConfig& cfg) {
  try {
    if (cfg.model == "ex51") return make_ex51(cfg.seed, cfg.alpha);
    if (cfg.model == "ex52") return make_ex52(cfg.rho, cfg.seed);
    if (cfg.model == "ex53") return make_ex53(distribution_from_name(cfg.g), cfg.seed);
    if (cfg.model == "angular") return make_from_angular(angular_from_name(cfg.s), cfg.seed);
    if (cfg.model == "product") return make_product_limit(distribution_from_name(cfg.h), cfg.seed);
    if (cfg.model == "diagonal") return make_diagonal(cfg.seed);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  } catch (const DivergentIntegral& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown model '" + cfg.model + "'");
}

std::size_t effective_k(const ExperimentConfig& cfg) {
  std::size_t k = cfg.k ? cfg.k : default_k(cfg.n);
  try {
    check_k(cfg.n, k);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  return k;
}

SampleBatch run_simulate(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("n must be positive");
  return sample(model_from_config(cfg), cfg.n);
}

namespace {

std::vector<std::string> default_cones(const ExperimentConfig& cfg) {
  if (cfg.model == "ex51" || cfg.model == "diagonal") return {"full", "interior", "upper", "right"};
  if (cfg.model == "angular") {
    return {"upper", "full"};
  }
  return {"upper"};
}

RectKind default_kind(ConeId cone) {
  switch (cone) {
    case ConeId::Full: return RectKind::ComplRect;
    case ConeId::Interior: return RectKind::JointExceed;
    case ConeId::UpperStrip: return RectKind::UpperRect;
    case ConeId::RightStrip: return RectKind::RightRect;
  }
  return RectKind::JointExceed;
}

std::vector<double> grid_or(const std::vector<double>& v, std::vector<double> fallback) {
  return v.empty() ? fallback : v;
}

}  // namespace

std::vector<ReportRow> run_verify(const ExperimentConfig& cfg) {
  const ModelSpec model = model_from_config(cfg);
  const std::size_t k = effective_k(cfg);
  const Form form = cfg.form == "standard" ? Form::Standard : Form::Natural;
  const SampleBatch raw = sample(model, cfg.n);
  const std::string name = model.name() + (form == Form::Standard ? "/std" : "");
  std::vector<ReportRow> rows;
  for (const std::string& cname : cfg.cones.empty() ? default_cones(cfg) : cfg.cones) {
    const ConeId cone = cone_from_string(cname);
    TailMeasure m = [&] {
      try {
        return make_measure(model, cone, form);
      } catch (const CatalogMiss& e) {
        throw ConfigError(e.what());
      }
    }();
    const SampleBatch data = apply_map(prelimit_map(model, cone, form), raw);
    const RectKind kind = default_kind(cone);
    std::vector<double> xs = grid_or(cfg.xs, {1.0, 2.0, 4.0});
    std::vector<double> ys =
        grid_or(cfg.ys, cone == ConeId::RightStrip && form == Form::Natural ? std::vector<double>{1.0, 4.0, 16.0}
                                                                             : std::vector<double>{1.0, 2.0, 4.0});
    for (double x : xs)
      for (double y : ys) {
        ConeRect r = ConeRect::make(kind, x, y);
        TailEstimate e = tail_measure_estimate(data, k, m.scaling(), r);
        rows.push_back(compare_row(name, cname, to_string(kind), x, y, m.eval(r), e.value, e.stderr_, cfg.tol));
      }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> atom_finding(std::size_t n, std::size_t k, std::uint64_t seed) {
  const ModelSpec model = make_ex51(seed);
  SampleBatch b = apply_map(prelimit_map(model, ConeId::UpperStrip, Form::Standard), sample(model, n));
  AngularEstimate est = angular_window_estimate(b, k, 0.49, 0.51);
  const double window_density = ex51iii_angular().continuous_part().mass(0.49, 0.51);
  const double measured = est.value - window_density;
  ReportRow balance = compare_row("ex51/std", "upper", "atom_balance", 0.49, 0.51, 1.0, measured, est.stderr_, 0.05);
  ReportRow stated{"ex51/std", "upper", "atom_stated", 0.49, 0.51, 2.0 - std::sqrt(3.0), measured, est.stderr_,
                   "info"};
  if (std::abs(measured - stated.analytic) > std::max(0.05, 4.0 * est.stderr_)) stated.status = "inconsistent";
  return {balance, stated};
}

std::vector<ReportRow> run_angular(const ExperimentConfig& cfg) {
  const AngularMeasure s = angular_from_name(cfg.s);
  std::vector<ReportRow> rows;
  const std::string name = "S:" + s.label();
  double defect = kInf;
  try {
    defect = normalization_defect(s);
  } catch (const DivergentIntegral&) {
  }
  if (cfg.check_normalization)
    rows.push_back({name, "upper", "normalization_defect", 0.0, 0.0, 0.0, defect, 0.0,
                    defect < 1e-8 ? "pass" : "fail"});
  else
    rows.push_back({name, "upper", "normalization_defect", 0.0, 0.0, 0.0, defect, 0.0, "info"});

  // The two routes to the limit measure must agree.
  TailMeasure m = measure_from_angular(s, ConeId::UpperStrip);
  for (double x : grid_or(cfg.xs, {0.5, 1.0, 2.0}))
    for (double y : grid_or(cfg.ys, {0.5, 1.0, 2.0})) {
      double a = mu_from_S(s, x, y), b = m.eval(ConeRect::upper(x, y));
      rows.push_back({name, "upper", "alt_form", x, y, a, b, 0.0, std::abs(a - b) <= 1e-8 ? "pass" : "fail"});
    }
  if (defect < 1e-8)
    for (double x : {0.5, 1.0, 2.0, 10.0}) {
      double a = h_star(s, x), b = conditional_H(m).cdf(x);
      rows.push_back({name, "upper", "h_star", x, 1.0, a, b, 0.0, std::abs(a - b) <= 1e-8 ? "pass" : "fail"});
    }
  if (cfg.atom) {
    auto atom = atom_finding(cfg.n, effective_k(cfg), cfg.seed);
    rows.insert(rows.end(), atom.begin(), atom.end());
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_standardize(const ExperimentConfig& cfg) {
  const ModelSpec model = [&] {
    try {
      return make_ex52(cfg.rho, cfg.seed);
    } catch (const PreconditionError& e) {
      throw ConfigError(e.what());
    }
  }();
  const double rho = cfg.rho;
  const std::size_t k = effective_k(cfg);
  NormFns ab{[rho](double t) { return std::pow(t, rho); }, [](double) { return 0.0; }, rho, std::nullopt};
  PsiFit fit = psi_classify(ab);
  LambdaTransform lam = build_lambda(ab, fit.klass);
  const TailMeasure standard = make_measure(model, ConeId::UpperStrip, Form::Standard);
  const TailMeasure cevm = make_measure(model, ConeId::UpperStrip, Form::Natural);
  const SampleBatch b = sample(model, cfg.n);
  Normalization norm = [&](double x, double y, double t) {
    return Point{(lam(x) - ab.center(t)) / ab.scale(t), y / t};
  };
  std::vector<ReportRow> rows;
  const std::string name = model.name() + "/lambda";
  rows.push_back({name, "upper", "psi_rho", 0.0, 0.0, rho, fit.klass.rho, fit.residual,
                  std::abs(fit.klass.rho - rho) < 1e-3 && fit.klass.k == 0.0 ? "pass" : "fail"});
  for (double x : grid_or(cfg.xs, {1.0, 2.0, 4.0}))
    for (double y : grid_or(cfg.ys, {1.0, 2.0, 4.0})) {
      double predicted = lam.predicted(standard, x, y);
      TailEstimate e = tail_measure_estimate(b, k, norm, ConeRect::upper(x, y));
      rows.push_back(compare_row(name, "upper", "upper_rect", x, y, predicted, e.value, e.stderr_, cfg.tol));
      double formula = cevm.eval(ConeRect::upper(x, y));
      rows.push_back({name, "upper", "cevm_formula", x, y, formula, predicted, 0.0,
                      std::abs(formula - predicted) <= 1e-10 ? "pass" : "fail"});
    }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_glue(const ExperimentConfig& cfg) {
  const ModelSpec model = model_from_config(cfg);
  const std::size_t k = effective_k(cfg);
  TailMeasure mu = make_measure(model, ConeId::UpperStrip);
  TailMeasure nu = make_measure(model, ConeId::RightStrip);
  const SampleBatch b = sample(model, cfg.n);
  std::vector<ReportRow> rows;
  const std::string name = model.name();
  for (double x : grid_or(cfg.xs, {1.0, 2.0, 4.0}))
    for (double y : grid_or(cfg.ys, {1.0, 2.0, 3.0})) {
      ConeRect r = ConeRect::compl_rect(x, y);
      double g1 = glue(mu, nu, r, cfg.eps), g2 = glue(mu, nu, r, cfg.eps2);
      rows.push_back({name, "full", "glue_eps", x, y, g1, g2, 0.0, std::abs(g1 - g2) <= 1e-12 ? "pass" : "fail"});
      TailEstimate e = tail_measure_estimate(b, k, Scaling{1.0, 1.0}, r);
      rows.push_back(compare_row(name, "full", "compl_rect", x, y, g1, e.value, e.stderr_, cfg.tol));
    }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_extend(const ExperimentConfig& cfg) {
  const AngularMeasure s = angular_from_name(cfg.s);
  const std::size_t k = effective_k(cfg);
  Extension ext = mevt_extension(s, cfg.seed);
  const SampleBatch b = sample(ext.model, cfg.n);
  std::vector<ReportRow> rows;
  const std::string name = ext.model.name();
  AngularEstimate tot = S_from_mu_empirical(b, k, 1.0);
  rows.push_back(compare_row(name, "upper", "angular_total", 0.0, 1.0, s.total(), tot.value, tot.stderr_, 0.05));
  for (auto [lo, hi] : {std::pair{0.0, 0.25}, {0.25, 0.5}, {0.5, 0.75}}) {
    AngularEstimate w = angular_window_estimate(b, k, lo, hi);
    rows.push_back(compare_row(name, "upper", "angular_window", lo, hi, s.mass(lo, hi), w.value, w.stderr_, 0.05));
  }
  for (double x : {0.5, 1.0, 2.0}) {
    ConeRect r = ConeRect::upper(x, 1.0);
    double a = mu_from_S(s, x, 1.0), v = ext.measure.eval(r);
    rows.push_back({name, "full", "restriction", x, 1.0, a, v, 0.0, std::abs(a - v) <= 1e-8 ? "pass" : "fail"});
  }
  if (cfg.s.rfind("ex53:", 0) == 0) {
    ModelSpec src = make_ex53(distribution_from_name(cfg.s.substr(5)), cfg.seed + 1);
    std::vector<ConeRect> rects;
    for (double x : {0.5, 1.0, 2.0})
      for (double y : {1.0, 2.0}) rects.push_back(ConeRect::upper(x, y));
    EquivalenceResult eq = tail_equivalence_check(sample(src, cfg.n), b, rects, k);
    rows.push_back({name, "upper", "tail_equivalence", 0.0, 0.0, 1.0, eq.c_hat, eq.cv, eq.pass ? "pass" : "fail"});
  }
  if (cfg.model == "ex51") {
    NormFns chi{[](double t) { return t; }, [](double) { return 0.0; }, 1.0, std::nullopt};
    NormFns alpha{[](double t) { return std::sqrt(t); }, [](double) { return 0.0; }, 0.5, std::nullopt};
    ExtensionClass cls = extension_condition(chi, alpha);
    rows.push_back({"ex51", "full", "extension_class", 0.0, 0.0, kInf, cls.limit, cls.slope,
                    cls.kind == RatioClass::Infinite ? "pass" : "fail"});
    const ModelSpec ex51 = make_ex51(cfg.seed);
    const TailMeasure full = make_measure(ex51, ConeId::Full);
    const SampleBatch eb = sample(ex51, cfg.n);
    for (double x : {1.0, 2.0, 4.0})
      for (double y : {1.0, 2.0, 4.0}) {
        ConeRect r = ConeRect::compl_rect(x, y);
        TailEstimate e = tail_measure_estimate(eb, k, Scaling{1.0, 1.0}, r);
        rows.push_back(compare_row("ex51", "full", "compl_rect", x, y, full.eval(r), e.value, e.stderr_, cfg.tol));
      }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "angular") return run_angular(cfg);
  if (cfg.command == "standardize") return run_standardize(cfg);
  if (cfg.command == "glue") return run_glue(cfg);
  if (cfg.command == "extend") return run_extend(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

void write_rows(const ExperimentConfig& cfg, const std::vector<ReportRow>& rows, std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (cfg.format == "json")
      write_report_json(rows, os);
    else
      write_report_csv(rows, os);
  };
  if (cfg.output.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot write '" + cfg.output + "'");
  emit(out);
}

}  // namespace extremal
