#pragma once

#include <cstdint>

#include "wl1/types.hpp"

namespace wl1 {

// ---------------------------------------------------------------------------
// Index-set utilities. All sets are sorted, duplicate-free, 0-based.
// ---------------------------------------------------------------------------

IndexSet set_complement(const IndexSet& s, Index n);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool is_sorted_unique_in_range(const IndexSet& s, Index n);

/// x restricted to S: equal to x on S, zero elsewhere.
Vector restrict_to(const Vector& x, const IndexSet& s);

/// l1 norm of the entries of x indexed by S.
double l1_norm_on(const Vector& x, const IndexSet& s);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// A signal together with the sparsity level of interest.
struct SignalInstance {
  Vector x;
  Index k = 1;
};
SignalInstance make_signal_instance(Vector x, Index k);

/// Prior guess of a signal's support inside an ambient dimension.
struct SupportEstimate {
  IndexSet indices;  // sorted, unique, in [0, ambient)
  Index ambient = 0;

  Index size() const { return static_cast<Index>(indices.size()); }
  bool contains(Index i) const;
};
SupportEstimate make_support_estimate(IndexSet indices, Index ambient);

/// (rho, alpha, beta) of a support estimate relative to a true support,
/// kept as exact rationals so alpha + beta = 1 holds identically.
struct EstimateProfile {
  Rational rho;
  Rational alpha;
  Rational beta;
};

/// Two-level weights: omega on the estimated support, 1 elsewhere.
struct WeightVector {
  Vector w;
  double omega = 1.0;
  SupportEstimate estimate;
};
WeightVector make_weights(const SupportEstimate& estimate, double omega);

enum class NoiseKind { kExact, kL2Ball, kDantzigBall, kGaussian };

/// Noise model for one experiment: epsilon is the radius the noise actually
/// satisfies, eta (>= epsilon) the radius handed to the solver, sigma the
/// standard deviation in the Gaussian case.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::kExact;
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma = 0.0;
};
NoiseSpec make_noise_spec(NoiseKind kind, double epsilon, double eta, double sigma);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Indices of the k largest-magnitude entries of x. Ties break toward the
/// lower index; if x has fewer than k nonzeros the set is padded with the
/// lowest-index zero entries so the result always has cardinality k.
IndexSet best_k_support(const Vector& x, Index k);

/// Synthesize an estimate with |T~| = rho*k and |T~ ∩ T0| = alpha*rho*k,
/// drawing the overlap uniformly from T0 and the rest uniformly from its
/// complement. Fully determined by `seed`.
SupportEstimate make_estimate(const IndexSet& T0, const Rational& rho, const Rational& alpha,
                              Index k, Index N, std::uint64_t seed);

/// Measure (rho, alpha, beta) of an estimate against a true support. An
/// empty estimate gets alpha = 1 (vacuously accurate) by convention.
EstimateProfile profile_of(const IndexSet& T0, const SupportEstimate& estimate, Index k);

/// The bracket operator: the unique integer in [zeta, zeta + 1).
long long double_bracket(double zeta);

/// Weighted l1 norm sum_i w_i |x_i|.
double weighted_norm(const Vector& x, const WeightVector& w);

template <typename DerivedX, typename DerivedW>
double weighted_norm(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedW>& w) {
  if (x.size() != w.size()) throw std::invalid_argument("weighted_norm: length mismatch");
  return w.cwiseAbs().cwiseProduct(x.cwiseAbs()).sum();
}

}  // namespace wl1
