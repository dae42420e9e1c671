#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wl1/bounds.hpp"
#include "wl1/model.hpp"
#include "wl1/rip.hpp"
#include "wl1/solvers.hpp"
#include "wl1/types.hpp"

namespace wl1 {

struct CounterexampleParams {
  Index N = 0, k = 0, a = 0, b = 0;
  Rational rho{0, 1};
  Rational alpha{1, 1};
  double omega = 0.0;
  Index s = 0;  // compute_s(k, a, omega, rho, alpha)
  Index L = 0;  // a + s
};

/// The tight instance: an N x N map A = c (I - xi1 xi1^T) with
/// c = sqrt(1 + (L-s)/(L+s)), a unit vector xi1 in its kernel, and two
/// k-sparse vectors eta_vec, gamma_vec with A eta_vec = A gamma_vec and
/// ||gamma_vec||_{1,w} <= ||eta_vec||_{1,w}. On this matrix
/// delta_a + C^{alpha,omega}_{a,b,k} theta_{a,b} = 1 and the weighted
/// program cannot distinguish eta_vec from gamma_vec.
struct CounterexampleInstance {
  Matrix A;
  Vector xi1;
  Vector eta_vec;
  Vector gamma_vec;
  SupportEstimate estimate;  // the contiguous rho*k block carrying weight omega
  IndexSet T0;               // support of eta_vec
  CounterexampleParams params;
};

/// Lays the instance out in contiguous blocks:
///   [0, k-j)               ones of eta_vec (j = alpha*rho*k)
///   [k-j, k-j+m)           the estimate block (m = rho*k)
///   [k-j+m, k-j+m+j)       remaining ones of eta_vec
/// with xi1 and gamma_vec branching on whether L - k exceeds m.
/// Requires 1 <= a <= s <= k and max(L, k + m) <= N; violations are
/// reported by naming the failed inequality.
CounterexampleInstance build_counterexample(Index N, Index k, Index a, Index b, Rational rho,
                                            Rational alpha, double omega);

struct SharpnessReport {
  bool exact_enumeration = true;  // false when only sampled lower bounds fit the budget
  double delta_a = 0.0;
  double theta_ab = 0.0;
  double c_weighted = 0.0;
  double condition_sum = 0.0;      // delta_a + C * theta_ab; = 1 for the construction
  double delta_analytic = 0.0;     // (L-s)/(L+s)
  double theta_analytic = 0.0;     // branch bound from the construction
  double eta_weighted_norm = 0.0;
  double gamma_weighted_norm = 0.0;
  double separation = 0.0;         // ||eta_vec - gamma_vec||_2
  SolverResult bp;
  double bp_distance_from_eta = 0.0;
  bool bp_objective_at_most_eta = false;  // objective <= ||eta||_{1,w} + 1e-8
  bool recovery_failed = false;           // far from eta, or strictly cheaper point found
  std::vector<std::pair<double, double>> noise_path;  // (radius, distance from eta)
  bool noise_path_stays_away = false;  // all distances >= 0.1 * separation
};

SharpnessReport verify_counterexample(const CounterexampleInstance& inst,
                                      std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace wl1
