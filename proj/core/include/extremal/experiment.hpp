#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "extremal/batch.hpp"
#include "extremal/model.hpp"
#include "extremal/report.hpp"

namespace extremal {

// Settings shared by every subcommand; unknown keys are rejected.
//   model    ex51|ex52|ex53|angular|product|diagonal
//   rho, alpha, g, h, s     model parameters (s names an angular measure)
//   n, k, seed              k = 0 picks floor(n^0.6)
//   cones    comma list of full|interior|upper|right
//   form     natural|standard
//   xs, ys   comma lists for the rect grid
//   output, format          path ("" = stdout) and csv|json
//   eps, eps2, tol, eta     glue bands, gate tolerance, angular window
//   check_normalization, atom   booleans for the angular subcommand
struct ExperimentConfig {
  std::string command = "verify";
  std::string model = "ex51";
  double rho = 0.5;
  double alpha = 0.75;
  std::string g = "uniform";
  std::string h = "uniform";
  std::string s = "uniform2";
  std::size_t n = 1000000;
  std::size_t k = 0;
  std::uint64_t seed = 1;
  bool seed_set = false;
  std::vector<std::string> cones;
  std::string form = "natural";
  std::vector<double> xs;
  std::vector<double> ys;
  std::string output;
  std::string format = "csv";
  double eps = 0.1;
  double eps2 = 0.05;
  double tol = 0.03;
  double eta = 1.0;
  bool check_normalization = false;
  bool atom = false;
};

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// key = value lines; '#' starts a comment.
std::map<std::string, std::string> parse_key_values(std::istream& in);
void load_config_file(ExperimentConfig& cfg, const std::string& path);
// Uses EXTREMAL_SEED when no seed was configured.
void apply_seed_fallback(ExperimentConfig& cfg);

ModelSpec model_from_config(const ExperimentConfig& cfg);
std::size_t effective_k(const ExperimentConfig& cfg);

SampleBatch run_simulate(const ExperimentConfig& cfg);
std::vector<ReportRow> run_verify(const ExperimentConfig& cfg);
std::vector<ReportRow> run_angular(const ExperimentConfig& cfg);
std::vector<ReportRow> run_standardize(const ExperimentConfig& cfg);
std::vector<ReportRow> run_glue(const ExperimentConfig& cfg);
std::vector<ReportRow> run_extend(const ExperimentConfig& cfg);
// Dispatch on cfg.command; rows come back sorted.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg);

// Atom finding for the standardised upper-strip pair of the Ex51 model:
// Theta-mass in [0.49, 0.51] above radius n/k, minus the density mass of the
// window. Returns the atom_balance and atom_stated rows.
std::vector<ReportRow> atom_finding(std::size_t n, std::size_t k, std::uint64_t seed);

void write_rows(const ExperimentConfig& cfg, const std::vector<ReportRow>& rows, std::ostream& fallback);

}  // namespace extremal
