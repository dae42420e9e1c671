#include "wl1/sharpness.hpp"

#include <cmath>

#include "wl1/linalg.hpp"

namespace wl1 {

namespace {

void require(bool ok, const std::string& inequality) {
  if (!ok)
    throw std::invalid_argument("build_counterexample: hypothesis violated: " + inequality);
}

}  // namespace

CounterexampleInstance build_counterexample(Index N, Index k, Index a, Index b, Rational rho,
                                            Rational alpha, double omega) {
  const Index s = compute_s(k, a, omega, rho, alpha);
  const Index m = static_cast<Index>(rational_times_int_exact(rho, k, "rho*k"));
  const Index j =
      static_cast<Index>(rational_times_int_exact(alpha * rho, k, "alpha*rho*k"));
  require(a >= 1, "1 <= a");
  require(a <= s, "a <= s (s = " + std::to_string(s) + ")");
  require(s <= k, "s <= k (s = " + std::to_string(s) + ")");
  require(b >= 1, "b >= 1");
  require(a + b <= N, "a + b <= N (theta order must be admissible)");
  const Index L = a + s;
  require(L <= N, "a + s <= N");
  require(k + m <= N, "k + rho*k <= N (block layout must fit)");
  require(j <= k, "alpha*rho*k <= k");

  const Index lead = k - j;        // ones of eta before the estimate block
  const Index block = lead + m;    // end of the estimate block
  const bool wide = (L - k) > m;   // branch: does xi1 spill past the blocks?

  Vector xi1 = Vector::Zero(N);
  if (wide) {
    for (Index i = 0; i < L; ++i) xi1[i] = 1.0;
  } else {
    for (Index i = 0; i < lead; ++i) xi1[i] = 1.0;
    for (Index i = 0; i < L - k; ++i) xi1[lead + i] = 1.0;
    for (Index i = 0; i < j; ++i) xi1[block + i] = 1.0;
  }
  xi1 /= std::sqrt(static_cast<double>(L));

  Vector eta = Vector::Zero(N);
  for (Index i = 0; i < lead; ++i) eta[i] = 1.0;
  for (Index i = 0; i < j; ++i) eta[block + i] = 1.0;

  Vector gamma = Vector::Zero(N);
  if (wide) {
    for (Index i = 0; i < m; ++i) gamma[lead + i] = -1.0;
    for (Index i = 0; i < L - k - m; ++i) gamma[block + j + i] = -1.0;
  } else {
    for (Index i = 0; i < L - k; ++i) gamma[lead + i] = -1.0;
  }

  const double ratio = static_cast<double>(L - s) / static_cast<double>(L + s);
  const double scale = std::sqrt(1.0 + ratio);
  Matrix A = Matrix::Identity(N, N);
  A.noalias() -= xi1 * xi1.transpose();
  A *= scale;

  IndexSet est_indices;
  for (Index i = 0; i < m; ++i) est_indices.push_back(lead + i);

  CounterexampleInstance inst;
  inst.A = std::move(A);
  inst.xi1 = std::move(xi1);
  inst.eta_vec = std::move(eta);
  inst.gamma_vec = std::move(gamma);
  inst.estimate = make_support_estimate(std::move(est_indices), N);
  inst.T0 = best_k_support(inst.eta_vec, k);
  inst.params = CounterexampleParams{N, k, a, b, rho, alpha, omega, s, L};

  // Construction identities; failure here is a programming error, not bad input.
  if (std::abs(inst.xi1.norm() - 1.0) > 1e-12)
    throw std::logic_error("build_counterexample: xi1 is not unit norm");
  if ((inst.A * inst.xi1).norm() > 1e-10)
    throw std::logic_error("build_counterexample: A xi1 != 0");
  const Vector diff = inst.eta_vec - inst.gamma_vec -
                      std::sqrt(static_cast<double>(L)) * inst.xi1;
  if (diff.lpNorm<Eigen::Infinity>() > 1e-12)
    throw std::logic_error("build_counterexample: eta - gamma != sqrt(L) xi1");
  return inst;
}

SharpnessReport verify_counterexample(const CounterexampleInstance& inst, std::uint64_t budget) {
  const auto& p = inst.params;
  SharpnessReport rep;

  const std::uint64_t delta_cost = binomial_clamped(p.N, p.a, budget);
  const std::uint64_t theta_outer = binomial_clamped(p.N, p.a, budget);
  const std::uint64_t theta_inner = binomial_clamped(p.N - p.a, p.b, budget);
  const bool delta_ok = delta_cost <= budget;
  const bool theta_ok =
      theta_outer <= budget && theta_inner <= budget && theta_outer <= budget / theta_inner;
  rep.exact_enumeration = delta_ok && theta_ok;
  if (delta_ok)
    rep.delta_a = compute_delta(inst.A, p.a, budget).value;
  else
    rep.delta_a = randomized_lower_bound_delta(inst.A, p.a, 20000, 1);
  if (theta_ok)
    rep.theta_ab = compute_theta(inst.A, p.a, p.b, budget).value;
  else
    rep.theta_ab = randomized_lower_bound_theta(inst.A, p.a, p.b, 20000, 2);

  rep.c_weighted = compute_C_weighted(p.k, p.a, p.b, p.omega, p.rho, p.alpha);
  rep.condition_sum = rep.delta_a + rep.c_weighted * rep.theta_ab;

  const double ratio = static_cast<double>(p.L - p.s) / static_cast<double>(p.L + p.s);
  rep.delta_analytic = ratio;
  const double Ld = static_cast<double>(p.L);
  if (p.b <= p.s)
    rep.theta_analytic =
        (1.0 + ratio) * std::sqrt(static_cast<double>(p.a) * static_cast<double>(p.b)) / Ld;
  else
    rep.theta_analytic =
        (1.0 + ratio) * std::sqrt(static_cast<double>(p.a) * static_cast<double>(p.s)) / Ld;

  const WeightVector weights = make_weights(inst.estimate, p.omega);
  rep.eta_weighted_norm = weighted_norm(inst.eta_vec, weights);
  rep.gamma_weighted_norm = weighted_norm(inst.gamma_vec, weights);
  rep.separation = (inst.eta_vec - inst.gamma_vec).norm();

  const Vector y = inst.A * inst.eta_vec;
  rep.bp = solve_weighted_bp(inst.A, y, weights.w);
  rep.bp_distance_from_eta = (rep.bp.x_hat - inst.eta_vec).norm();
  rep.bp_objective_at_most_eta = rep.bp.objective <= rep.eta_weighted_norm + 1e-8;
  rep.recovery_failed =
      rep.bp_objective_at_most_eta && (rep.bp_distance_from_eta > 0.5 * rep.separation ||
                                       rep.bp.objective < rep.eta_weighted_norm - 1e-8);

  // Shrinking-radius path: the relaxed solutions must not converge to eta.
  rep.noise_path_stays_away = true;
  for (const double frac : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double radius = frac * (1.0 + y.norm());
    const SolverResult sol = solve_weighted_bpdn(inst.A, y, weights.w, radius);
    const double dist = (sol.x_hat - inst.eta_vec).norm();
    rep.noise_path.emplace_back(radius, dist);
    if (dist < 0.1 * rep.separation) rep.noise_path_stays_away = false;
  }
  return rep;
}

}  // namespace wl1
