#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wl1/bounds.hpp"
#include "wl1/model.hpp"
#include "wl1/rip.hpp"
#include "wl1/solvers.hpp"
#include "wl1/types.hpp"

namespace wl1 {

struct MatrixSource {
  enum class Kind { kFile, kGaussian } kind = Kind::kGaussian;
  std::string path;      // kFile
  Index rows = 0;        // kGaussian
  Index cols = 0;
  std::uint64_t seed = 0;
};

struct SignalSpec {
  Index k = 1;
  enum class Dist { kGaussianAmp, kRademacher, kOnes } dist = Dist::kGaussianAmp;
  std::uint64_t seed = 0;
};

struct EstimateSpec {
  Rational rho{1, 1};
  Rational alpha{1, 1};
  std::uint64_t seed = 0;
};

struct GuaranteeSpec {
  bool sweep = true;   // search (a, b) minimizing delta_a + C * theta_ab
  Index a = 1;         // fixed pair when !sweep
  Index b = 1;
  Index a_max = 2;     // sweep ranges
  Index b_max = 3;
};

struct ExperimentConfig {
  MatrixSource matrix_source;
  SignalSpec signal;
  EstimateSpec estimate;
  std::vector<double> omega_grid{1.0};
  NoiseSpec noise;
  GuaranteeSpec guarantee;
  int trials = 1;
  std::string output_path;
  std::uint64_t rip_budget = kDefaultSubsetBudget;
  SolveConfig solver;
};

/// One experiment row. Everything except wall_time_ms is a deterministic
/// function of (config, trial index); wall_time_ms is therefore kept out of
/// the CSV, which is compared byte-for-byte across reruns.
struct TrialRecord {
  int trial = 0;
  double omega = 1.0;
  Rational rho{1, 1};
  Rational alpha{1, 1};
  double epsilon = 0.0;
  double eta = 0.0;
  SolveStatus status = SolveStatus::kMaxIterations;
  int iterations = 0;
  double objective = 0.0;
  double error_l2 = 0.0;
  bool certified = false;
  Index cert_a = 0;
  Index cert_b = 0;
  double delta_a = 0.0;
  double theta_ab = 0.0;
  Index s = 0;
  Index d = 0;
  double c_weighted = 0.0;
  std::optional<double> bound_rhs;
  std::optional<bool> bound_ok;
  bool cone_ok = false;
  bool noise_within_radius = true;
  double wall_time_ms = 0.0;
};

/// l2 radius sigma * sqrt(n + 2 sqrt(n ln n)) that an n-dimensional
/// N(0, sigma^2 I) draw respects with probability at least 1 - 1/n.
/// Natural logarithm throughout.
double gaussian_radius_l2(double sigma, Index n);

/// Dantzig radius sigma * sqrt(2 ln N) for unit-column matrices, respected
/// with probability at least 1 - 1/sqrt(pi ln N).
double gaussian_radius_ds(double sigma, Index N);

/// Outcome of trying to certify delta_a + C^{alpha,omega} theta_ab < 1 on a
/// concrete matrix by exact enumeration.
struct Certification {
  bool attempted = false;  // false when every candidate pair blew the budget
  bool certified = false;
  Index a = 0;
  Index b = 0;
  double delta_a = 0.0;
  double theta_ab = 0.0;
  double condition_sum = 0.0;
  GuaranteeReport report;
};

/// Enumerates delta/theta for the configured (a, b) pair(s) and returns the
/// pair minimizing delta_a + C theta_ab. Pairs beyond `budget` are skipped;
/// lower bounds never certify anything.
Certification certify_instance(const Matrix& A, Index k, double omega, const Rational& rho,
                               const Rational& alpha, const GuaranteeSpec& spec,
                               std::uint64_t budget);

/// Materialize the measurement matrix of a config (Gaussian ensembles get
/// unit-normalized columns).
Matrix load_experiment_matrix(const ExperimentConfig& cfg);

/// Run one trial: synthesize (x, T~, z) from the per-trial seeds, solve with
/// the matching program, audit the error bound when certified, run the cone
/// check, and return the record. Deterministic given (cfg, omega, trial).
TrialRecord run_trial(const ExperimentConfig& cfg, double omega, int trial_index,
                      const Matrix& A, const Certification& cert);

/// Convenience overload matching the config's omega grid head; loads the
/// matrix and certifies internally.
TrialRecord run_trial(const ExperimentConfig& cfg, int trial_index);

/// Full sweep: omega_grid x trials rows, written to cfg.output_path as
/// versioned CSV plus a <output>.summary.json with per-omega statistics.
/// Identical configs produce byte-identical CSV files.
void run_sweep(const ExperimentConfig& cfg);

/// Parse an ExperimentConfig from its JSON file representation.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace wl1
