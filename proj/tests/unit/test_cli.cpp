#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/estimate.hpp"
#include "extremal/experiment.hpp"
#include "extremal/limits.hpp"
#include "extremal/report.hpp"
#include "extremal/samplers.hpp"

using namespace extremal;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("extremal_test_" + name); }

std::string csv_of(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  write_report_csv(rows, os);
  return os.str();
}

}  // namespace

TEST(Config, KeyValues) {
  std::istringstream in("# comment\nmodel = ex52\nrho=0.3   # trailing\n\nxs = 1, 2,4\n");
  ExperimentConfig cfg;
  for (const auto& [k, v] : parse_key_values(in)) apply_setting(cfg, k, v);
  EXPECT_EQ(cfg.model, "ex52");
  EXPECT_DOUBLE_EQ(cfg.rho, 0.3);
  EXPECT_EQ(cfg.xs, (std::vector<double>{1, 2, 4}));
}

TEST(Config, Rejections) {
  ExperimentConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "modle", "ex51"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "model", "ex99"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "n", "ten"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "cones", "upper,left"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "g", "weibull"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "s", "nope"), ConfigError);
  std::istringstream bad("model ex51\n");
  EXPECT_THROW(parse_key_values(bad), ConfigError);
  EXPECT_THROW(load_config_file(cfg, "/nonexistent/cfg.ini"), ConfigError);
}

TEST(Config, KRange) {
  ExperimentConfig cfg;
  cfg.n = 1000;
  cfg.k = 5;
  EXPECT_THROW(effective_k(cfg), ConfigError);
  cfg.k = 0;
  EXPECT_EQ(effective_k(cfg), default_k(1000));
}

TEST(Config, SeedFromEnvironment) {
  ::setenv("EXTREMAL_SEED", "77", 1);
  ExperimentConfig a;
  apply_seed_fallback(a);
  EXPECT_EQ(a.seed, 77u);
  ExperimentConfig b;
  apply_setting(b, "seed", "5");
  apply_seed_fallback(b);
  EXPECT_EQ(b.seed, 5u);
  ::unsetenv("EXTREMAL_SEED");
}

TEST(Config, ModelParameterErrorsAreConfigErrors) {
  ExperimentConfig cfg;
  cfg.model = "ex52";
  cfg.rho = 1.5;
  EXPECT_THROW(model_from_config(cfg), ConfigError);
  cfg.model = "angular";
  cfg.s = "inv1mw";
  EXPECT_THROW(model_from_config(cfg), ConfigError);
}

TEST(Report, CompareRowGate) {
  EXPECT_EQ(compare_row("m", "upper", "upper_rect", 1, 1, 0.5, 0.52, 0.001, 0.03).status, "pass");
  EXPECT_EQ(compare_row("m", "upper", "upper_rect", 1, 1, 0.5, 0.6, 0.001, 0.03).status, "fail");
  EXPECT_EQ(compare_row("m", "upper", "upper_rect", 1, 1, 0.5, 0.6, 0.03, 0.03).status, "pass");
}

TEST(Report, SortIsStableAndOrdered) {
  std::vector<ReportRow> rows = {{"b", "upper", "k", 1, 1}, {"a", "upper", "k", 2, 1}, {"a", "upper", "k", 1, 2},
                                 {"a", "full", "k", 9, 9}};
  sort_rows(rows);
  EXPECT_EQ(rows[0].cone, "full");
  EXPECT_EQ(rows[1].x, 1.0);
  EXPECT_EQ(rows[2].x, 2.0);
  EXPECT_EQ(rows[3].model, "b");
}

TEST(Report, CsvAndJsonRoundTrip) {
  std::vector<ReportRow> rows = {{"m", "full", "compl_rect", 1, 2, 1.5, 1.49, 0.03, "pass"},
                                 {"m", "full", "extension_class", 0, 0, kInf, kInf, 12.5, "info"}};
  for (const char* ext : {".csv", ".json"}) {
    fs::path p = temp_file(std::string("roundtrip") + ext);
    {
      std::ofstream out(p);
      if (std::string(ext) == ".json")
        write_report_json(rows, out);
      else
        write_report_csv(rows, out);
    }
    std::vector<ReportRow> back = read_report(p.string());
    ASSERT_EQ(back.size(), rows.size());
    EXPECT_EQ(back[1].analytic, kInf);
    EXPECT_EQ(back[0].status, "pass");
    EXPECT_DOUBLE_EQ(back[0].estimate, 1.49);
    fs::remove(p);
  }
}

TEST(Report, SummaryFlagsForcedFailure) {
  // Scaling Ex51 by (1, 1) on the upper strip instead of (1/2, 1) squeezes
  // the x-coordinate towards 0, so the estimate tends to 1 instead of 1/2.
  ModelSpec m = make_ex51(3);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip);
  SampleBatch b = sample(m, 200000);
  ConeRect r = ConeRect::upper(2, 1);
  TailEstimate wrong = tail_measure_estimate(b, 1000, Scaling{1, 1}, r);
  TailEstimate right = tail_measure_estimate(b, 1000, mu.scaling(), r);
  std::vector<ReportRow> rows = {compare_row("ex51", "upper", "upper_rect", 2, 1, mu.eval(r), right.value,
                                             right.stderr_, 0.03),
                                 compare_row("ex51/wrong_exponent", "upper", "upper_rect", 2, 1, mu.eval(r),
                                             wrong.value, wrong.stderr_, 0.03)};
  fs::path p = temp_file("forced.csv");
  {
    std::ofstream out(p);
    write_report_csv(rows, out);
  }
  std::ostringstream os;
  EXPECT_NE(report_summary({p.string()}, os), 0);
  EXPECT_NE(os.str().find("ex51/wrong_exponent"), std::string::npos);
  rows.pop_back();
  {
    std::ofstream out(p);
    write_report_csv(rows, out);
  }
  std::ostringstream ok;
  EXPECT_EQ(report_summary({p.string()}, ok), 0);
  fs::remove(p);
}

TEST(Report, SummaryMissingFile) {
  std::ostringstream os;
  EXPECT_EQ(report_summary({"/nonexistent/report.csv"}, os), 2);
}

TEST(Report, InformationalRowsNeverGate) {
  std::vector<ReportRow> rows = {{"ex51/std", "upper", "atom_stated", 0.49, 0.51, 0.268, 1.0, 0.01, "inconsistent"}};
  fs::path p = temp_file("info.csv");
  {
    std::ofstream out(p);
    write_report_csv(rows, out);
  }
  std::ostringstream os;
  EXPECT_EQ(report_summary({p.string()}, os), 0);
  EXPECT_NE(os.str().find("inconsistent"), std::string::npos);
  fs::remove(p);
}

TEST(Experiment, ByteIdenticalReruns) {
  ExperimentConfig cfg;
  cfg.command = "verify";
  cfg.model = "ex52";
  cfg.n = 100000;
  cfg.k = 300;
  cfg.seed = 9;
  EXPECT_EQ(csv_of(run_experiment(cfg)), csv_of(run_experiment(cfg)));
}

TEST(Experiment, VerifyEx51UpperPasses) {
  ExperimentConfig cfg;
  cfg.model = "ex51";
  cfg.cones = {"upper", "interior", "full"};
  cfg.n = 1000000;
  cfg.k = 1000;
  cfg.seed = 7;
  for (const ReportRow& r : run_verify(cfg)) EXPECT_EQ(r.status, "pass") << r.cone << " " << r.x << "," << r.y;
}

TEST(Experiment, UnknownCatalogEntryIsConfigError) {
  ExperimentConfig cfg;
  cfg.model = "ex52";
  cfg.cones = {"full"};
  cfg.n = 10000;
  EXPECT_THROW(run_verify(cfg), ConfigError);
}

TEST(Experiment, SimulateWritesRequestedSize) {
  ExperimentConfig cfg;
  cfg.model = "ex53";
  cfg.n = 1234;
  SampleBatch b = run_simulate(cfg);
  EXPECT_EQ(b.n(), 1234u);
  EXPECT_EQ(b.model, "ex53(uniform)");
}
