#include "wl1/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wl1/io.hpp"
#include "wl1/random.hpp"

namespace wl1 {

namespace {

// Stream tags for deriving independent per-trial seeds from the config seeds.
constexpr std::uint64_t kStreamMatrix = 0xA1;
constexpr std::uint64_t kStreamSignal = 0xB2;
constexpr std::uint64_t kStreamEstimate = 0xC3;
constexpr std::uint64_t kStreamNoise = 0xD4;

Vector synthesize_signal(const SignalSpec& spec, Index N, int trial_index) {
  Rng rng(mix_seed(mix_seed(spec.seed, kStreamSignal), static_cast<std::uint64_t>(trial_index)));
  const IndexSet support = rng.sample_indices(N, spec.k);
  Vector x = Vector::Zero(N);
  for (const Index i : support) {
    switch (spec.dist) {
      case SignalSpec::Dist::kGaussianAmp:
        x[i] = rng.normal();
        break;
      case SignalSpec::Dist::kRademacher:
        x[i] = rng.below(2) == 0 ? 1.0 : -1.0;
        break;
      case SignalSpec::Dist::kOnes:
        x[i] = 1.0;
        break;
    }
  }
  return x;
}

}  // namespace

double gaussian_radius_l2(double sigma, Index n) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("gaussian_radius_l2: sigma must be >= 0");
  if (n < 2) throw std::invalid_argument("gaussian_radius_l2: n must be >= 2");
  const double nd = static_cast<double>(n);
  return sigma * std::sqrt(nd + 2.0 * std::sqrt(nd * std::log(nd)));
}

double gaussian_radius_ds(double sigma, Index N) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("gaussian_radius_ds: sigma must be >= 0");
  if (N < 2) throw std::invalid_argument("gaussian_radius_ds: N must be >= 2");
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(N)));
}

Certification certify_instance(const Matrix& A, Index k, double omega, const Rational& rho,
                               const Rational& alpha, const GuaranteeSpec& spec,
                               std::uint64_t budget) {
  const Index N = A.cols();
  std::vector<std::pair<Index, Index>> pairs;
  if (spec.sweep) {
    for (Index a = 1; a <= std::min(spec.a_max, k); ++a)
      for (Index b = 1; b <= spec.b_max; ++b)
        if (a + b <= N) pairs.emplace_back(a, b);
  } else {
    pairs.emplace_back(spec.a, spec.b);
  }

  Certification best;
  std::vector<std::pair<Index, double>> delta_cache;
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > k || b < 1 || a + b > N) continue;
    if (binomial_clamped(N, a, budget) > budget) continue;
    const std::uint64_t outer = binomial_clamped(N, a, budget);
    const std::uint64_t inner = binomial_clamped(N - a, b, budget);
    if (inner == 0 || outer > budget / inner) continue;

    double delta = -1.0;
    for (const auto& [ca, cd] : delta_cache)
      if (ca == a) delta = cd;
    if (delta < 0.0) {
      delta = compute_delta(A, a, budget).value;
      delta_cache.emplace_back(a, delta);
    }
    const double theta = compute_theta(A, a, b, budget).value;
    // delta can marginally exceed 1 on poorly conditioned ensembles, which
    // simply means no guarantee; clamp for the report's input validation.
    const GuaranteeInputs in =
        make_guarantee_inputs(k, a, b, omega, rho, alpha, std::min(delta, 1.0), theta);
    const GuaranteeReport rep = evaluate_guarantee(in);
    const double sum = delta + rep.c_weighted * theta;
    if (!best.attempted || sum < best.condition_sum) {
      best.attempted = true;
      best.a = a;
      best.b = b;
      best.delta_a = delta;
      best.theta_ab = theta;
      best.condition_sum = sum;
      best.report = rep;
      best.certified = rep.condition_met && delta <= 1.0;
    }
  }
  return best;
}

Matrix load_experiment_matrix(const ExperimentConfig& cfg) {
  if (cfg.matrix_source.kind == MatrixSource::Kind::kFile) return io::read_matrix_csv(cfg.matrix_source.path);
  if (cfg.matrix_source.rows < 1 || cfg.matrix_source.cols < 1)
    throw std::invalid_argument("gaussian matrix source needs positive rows/cols");
  Rng rng(mix_seed(cfg.matrix_source.seed, kStreamMatrix));
  Matrix A = rng.gaussian_matrix(cfg.matrix_source.rows, cfg.matrix_source.cols);
  for (Index j = 0; j < A.cols(); ++j) {
    const double nrm = A.col(j).norm();
    if (nrm > 0.0) A.col(j) /= nrm;
  }
  return A;
}

TrialRecord run_trial(const ExperimentConfig& cfg, double omega, int trial_index, const Matrix& A,
                      const Certification& cert) {
  const Index n = A.rows(), N = A.cols();
  const Index k = cfg.signal.k;
  if (k < 1 || k > N) throw std::invalid_argument("run_trial: k out of range for the matrix");

  TrialRecord rec;
  rec.trial = trial_index;
  rec.omega = omega;
  rec.rho = cfg.estimate.rho;
  rec.alpha = cfg.estimate.alpha;

  const Vector x = synthesize_signal(cfg.signal, N, trial_index);
  const IndexSet T0 = best_k_support(x, k);
  const SupportEstimate est =
      make_estimate(T0, cfg.estimate.rho, cfg.estimate.alpha, k, N,
                    mix_seed(mix_seed(cfg.estimate.seed, kStreamEstimate),
                             static_cast<std::uint64_t>(trial_index)));
  const WeightVector weights = make_weights(est, omega);

  // Noise shares the signal seed under a distinct stream tag; the spec's
  // config carries no separate noise seed.
  Rng noise_rng(mix_seed(mix_seed(cfg.signal.seed, kStreamNoise),
                         static_cast<std::uint64_t>(trial_index)));
  Vector z = Vector::Zero(n);
  NoiseKind bound_kind = NoiseKind::kL2Ball;
  switch (cfg.noise.kind) {
    case NoiseKind::kExact:
      rec.epsilon = 0.0;
      rec.eta = 0.0;
      break;
    case NoiseKind::kL2Ball: {
      rec.epsilon = cfg.noise.epsilon;
      rec.eta = cfg.noise.eta;
      if (rec.epsilon > 0.0) {
        z = noise_rng.normal_vector(n);
        z *= rec.epsilon / z.norm();
      }
      break;
    }
    case NoiseKind::kDantzigBall: {
      rec.epsilon = cfg.noise.epsilon;
      rec.eta = cfg.noise.eta;
      bound_kind = NoiseKind::kDantzigBall;
      if (rec.epsilon > 0.0) {
        z = noise_rng.normal_vector(n);
        const double nrm = (A.transpose() * z).lpNorm<Eigen::Infinity>();
        if (nrm > 0.0) z *= rec.epsilon / nrm;
      }
      break;
    }
    case NoiseKind::kGaussian: {
      z = cfg.noise.sigma * noise_rng.normal_vector(n);
      rec.eta = gaussian_radius_l2(cfg.noise.sigma, n);
      rec.epsilon = z.norm();
      rec.noise_within_radius = rec.epsilon <= rec.eta;
      break;
    }
  }

  const Vector y = A * x + z;
  const auto t0 = std::chrono::steady_clock::now();
  SolverResult sol;
  switch (cfg.noise.kind) {
    case NoiseKind::kExact:
      sol = solve_weighted_bp(A, y, weights.w, cfg.solver);
      break;
    case NoiseKind::kL2Ball:
    case NoiseKind::kGaussian:
      sol = solve_weighted_bpdn(A, y, weights.w, rec.eta, cfg.solver);
      break;
    case NoiseKind::kDantzigBall:
      sol = solve_weighted_ds(A, y, weights.w, rec.eta, cfg.solver);
      break;
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  rec.status = sol.status;
  rec.iterations = sol.iterations;
  rec.objective = sol.objective;
  rec.error_l2 = (sol.x_hat - x).norm();

  rec.certified = cert.certified;
  if (cert.attempted) {
    rec.cert_a = cert.a;
    rec.cert_b = cert.b;
    rec.delta_a = cert.delta_a;
    rec.theta_ab = cert.theta_ab;
    rec.s = cert.report.s;
    rec.d = cert.report.d;
    rec.c_weighted = cert.report.c_weighted;
  }
  // The bound is instantiated at the solver radius: ||z|| <= eta and the
  // program ran with radius eta, so the theorem applies with eps := eta.
  if (cert.certified && rec.noise_within_radius && sol.status != SolveStatus::kInfeasible) {
    rec.bound_rhs = error_bound_rhs(cert.report, rec.eta, x, T0, est, omega, bound_kind);
    // 1e-6 slack: the guarantee speaks about exact minimizers, the solver
    // stops at its convergence tolerance (a zero rhs is otherwise unmeetable).
    rec.bound_ok = rec.error_l2 <= *rec.bound_rhs + 1e-6;
  }

  rec.cone_ok = cone_check(sol.x_hat - x, x, T0, est, omega).holds;
  return rec;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int trial_index) {
  if (cfg.omega_grid.empty()) throw std::invalid_argument("run_trial: empty omega grid");
  const Matrix A = load_experiment_matrix(cfg);
  const double omega = cfg.omega_grid.front();
  const Certification cert = certify_instance(A, cfg.signal.k, omega, cfg.estimate.rho,
                                              cfg.estimate.alpha, cfg.guarantee, cfg.rip_budget);
  return run_trial(cfg, omega, trial_index, A, cert);
}

namespace {

std::string csv_bool(bool b) { return b ? "1" : "0"; }

std::string record_row(const TrialRecord& r) {
  std::ostringstream os;
  os << r.trial << ',' << io::format_double(r.omega) << ',' << r.rho.str() << ','
     << r.alpha.str() << ',' << io::format_double(r.epsilon) << ',' << io::format_double(r.eta)
     << ',' << solve_status_name(r.status) << ',' << r.iterations << ','
     << io::format_double(r.objective) << ',' << io::format_double(r.error_l2) << ','
     << csv_bool(r.certified) << ',' << r.cert_a << ',' << r.cert_b << ','
     << io::format_double(r.delta_a) << ',' << io::format_double(r.theta_ab) << ',' << r.s << ','
     << r.d << ',' << io::format_double(r.c_weighted) << ','
     << (r.bound_rhs ? io::format_double(*r.bound_rhs) : "") << ','
     << (r.bound_ok ? csv_bool(*r.bound_ok) : "") << ',' << csv_bool(r.cone_ok) << ','
     << csv_bool(r.noise_within_radius);
  return os.str();
}

constexpr const char* kCsvHeader =
    "trial,omega,rho,alpha,epsilon,eta,status,iterations,objective,error_l2,certified,a,b,"
    "delta_a,theta_ab,s,d,c_weighted,bound_rhs,bound_ok,cone_ok,noise_within_radius";

}  // namespace

void run_sweep(const ExperimentConfig& cfg) {
  if (cfg.omega_grid.empty()) throw std::invalid_argument("run_sweep: empty omega grid");
  if (cfg.trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
  if (cfg.output_path.empty()) throw std::invalid_argument("run_sweep: missing output path");

  const Matrix A = load_experiment_matrix(cfg);

  std::ofstream out(cfg.output_path);
  if (!out) throw std::runtime_error("run_sweep: cannot open output " + cfg.output_path);
  out << "# wl1-sweep-csv v1\n" << kCsvHeader << '\n';

  nlohmann::ordered_json summary;
  summary["schema"] = "wl1-sweep-summary v1";
  summary["rows"] = cfg.omega_grid.size() * static_cast<std::size_t>(cfg.trials);
  summary["matrix"] = {{"rows", A.rows()}, {"cols", A.cols()}};
  auto& per_omega = summary["omega_stats"];
  per_omega = nlohmann::ordered_json::array();

  for (const double omega : cfg.omega_grid) {
    const Certification cert = certify_instance(A, cfg.signal.k, omega, cfg.estimate.rho,
                                                cfg.estimate.alpha, cfg.guarantee, cfg.rip_budget);
    std::vector<double> errors;
    int violations = 0;
    int certified_rows = 0;
    int non_optimal = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord rec = run_trial(cfg, omega, t, A, cert);
      out << record_row(rec) << '\n';
      errors.push_back(rec.error_l2);
      if (rec.bound_rhs) {
        ++certified_rows;
        if (!*rec.bound_ok) ++violations;
      }
      if (rec.status != SolveStatus::kOptimal) ++non_optimal;
    }
    std::vector<double> sorted = errors;
    std::sort(sorted.begin(), sorted.end());
    const double mean =
        errors.empty() ? 0.0
                       : std::accumulate(errors.begin(), errors.end(), 0.0) /
                             static_cast<double>(errors.size());
    const double median = sorted.empty() ? 0.0
                          : (sorted.size() % 2 == 1
                                 ? sorted[sorted.size() / 2]
                                 : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]));
    nlohmann::ordered_json stat;
    stat["omega"] = omega;
    stat["certified"] = cert.certified;
    if (cert.attempted) {
      stat["a"] = cert.a;
      stat["b"] = cert.b;
      stat["condition_sum"] = cert.condition_sum;
    }
    stat["mean_error"] = mean;
    stat["median_error"] = median;
    stat["bound_violations"] = violations;
    stat["audited_rows"] = certified_rows;
    stat["non_optimal_rows"] = non_optimal;
    per_omega.push_back(stat);
  }
  out.close();

  std::ofstream sum_out(cfg.output_path + ".summary.json");
  if (!sum_out)
    throw std::runtime_error("run_sweep: cannot open output " + cfg.output_path + ".summary.json");
  sum_out << summary.dump(2) << '\n';
}

namespace {

Rational parse_rational(const nlohmann::json& j, const char* what) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
      throw std::invalid_argument(std::string("config: ") + what + " must be [num, den]");
    return Rational(j[0].get<long long>(), j[1].get<long long>());
  }
  if (j.is_number_integer()) return Rational(j.get<long long>(), 1);
  throw std::invalid_argument(std::string("config: ") + what +
                              " must be an integer or a [num, den] pair");
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  ExperimentConfig cfg;

  if (!j.contains("matrix_source"))
    throw std::invalid_argument("config: missing 'matrix_source'");
  const auto& m = j.at("matrix_source");
  const std::string mkind = m.at("kind").get<std::string>();
  if (mkind == "file") {
    cfg.matrix_source.kind = MatrixSource::Kind::kFile;
    cfg.matrix_source.path = m.at("path").get<std::string>();
  } else if (mkind == "gaussian") {
    cfg.matrix_source.kind = MatrixSource::Kind::kGaussian;
    cfg.matrix_source.rows = m.at("rows").get<Index>();
    cfg.matrix_source.cols = m.at("cols").get<Index>();
    cfg.matrix_source.seed = m.at("seed").get<std::uint64_t>();
  } else {
    throw std::invalid_argument("config: matrix_source.kind must be 'file' or 'gaussian'");
  }

  const auto& s = j.at("signal");
  cfg.signal.k = s.at("k").get<Index>();
  const std::string dist = s.value("distribution", "gaussian");
  if (dist == "gaussian")
    cfg.signal.dist = SignalSpec::Dist::kGaussianAmp;
  else if (dist == "rademacher")
    cfg.signal.dist = SignalSpec::Dist::kRademacher;
  else if (dist == "ones")
    cfg.signal.dist = SignalSpec::Dist::kOnes;
  else
    throw std::invalid_argument("config: unknown signal distribution '" + dist + "'");
  cfg.signal.seed = s.at("seed").get<std::uint64_t>();

  const auto& e = j.at("estimate");
  cfg.estimate.rho = parse_rational(e.at("rho"), "estimate.rho");
  cfg.estimate.alpha = parse_rational(e.at("alpha"), "estimate.alpha");
  cfg.estimate.seed = e.at("seed").get<std::uint64_t>();

  cfg.omega_grid = j.at("omega_grid").get<std::vector<double>>();
  if (cfg.omega_grid.empty()) throw std::invalid_argument("config: omega_grid must be non-empty");
  for (const double w : cfg.omega_grid)
    if (!(w >= 0.0 && w <= 1.0))
      throw std::invalid_argument("config: omega values must lie in [0, 1]");

  const auto& nz = j.at("noise");
  const std::string nkind = nz.at("kind").get<std::string>();
  if (nkind == "exact")
    cfg.noise = make_noise_spec(NoiseKind::kExact, 0.0, 0.0, 0.0);
  else if (nkind == "l2")
    cfg.noise = make_noise_spec(NoiseKind::kL2Ball, nz.at("epsilon").get<double>(),
                                nz.value("eta", nz.at("epsilon").get<double>()), 0.0);
  else if (nkind == "ds")
    cfg.noise = make_noise_spec(NoiseKind::kDantzigBall, nz.at("epsilon").get<double>(),
                                nz.value("eta", nz.at("epsilon").get<double>()), 0.0);
  else if (nkind == "gaussian")
    cfg.noise = make_noise_spec(NoiseKind::kGaussian, 0.0, 0.0, nz.at("sigma").get<double>());
  else
    throw std::invalid_argument("config: unknown noise kind '" + nkind + "'");

  if (j.contains("guarantee")) {
    const auto& g = j.at("guarantee");
    if (g.is_string() && g.get<std::string>() == "sweep") {
      cfg.guarantee.sweep = true;
    } else if (g.is_object() && g.contains("a") && g.contains("b")) {
      cfg.guarantee.sweep = false;
      cfg.guarantee.a = g.at("a").get<Index>();
      cfg.guarantee.b = g.at("b").get<Index>();
    } else if (g.is_object()) {
      cfg.guarantee.sweep = true;
      cfg.guarantee.a_max = g.value("a_max", cfg.guarantee.a_max);
      cfg.guarantee.b_max = g.value("b_max", cfg.guarantee.b_max);
    } else {
      throw std::invalid_argument("config: guarantee must be 'sweep' or {a, b}");
    }
  }

  cfg.trials = j.at("trials").get<int>();
  cfg.output_path = j.at("output_path").get<std::string>();
  cfg.rip_budget = j.value("budget", cfg.rip_budget);
  if (j.contains("solver")) {
    const auto& sv = j.at("solver");
    cfg.solver.max_iterations = sv.value("max_iterations", cfg.solver.max_iterations);
    cfg.solver.primal_tolerance = sv.value("primal_tolerance", cfg.solver.primal_tolerance);
    cfg.solver.dual_tolerance = sv.value("dual_tolerance", cfg.solver.dual_tolerance);
    cfg.solver.feasibility_tolerance =
        sv.value("feasibility_tolerance", cfg.solver.feasibility_tolerance);
    cfg.solver.step_scale = sv.value("step_scale", cfg.solver.step_scale);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace wl1
