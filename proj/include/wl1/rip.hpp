#pragma once

#include <cstdint>

#include "wl1/model.hpp"
#include "wl1/types.hpp"

namespace wl1 {

/// Default cap on the number of index subsets (or subset pairs) an exact
/// enumeration may visit. Enumeration cost is combinatorial, so exceeding
/// the cap raises budget_error instead of silently running for hours.
inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Restricted isometry constant of one order, with the support achieving it.
struct RicValue {
  Index order = 0;
  double value = 0.0;
  IndexSet argmax_support;
};

/// Restricted orthogonality constant of one order pair, with the disjoint
/// support pair achieving it.
struct RocValue {
  Index order1 = 0;
  Index order2 = 0;
  double value = 0.0;
  IndexSet argmax_left;
  IndexSet argmax_right;
};

/// delta_k by exhaustive enumeration of all k-column submatrices:
/// max over |S| = k of max(|lambda_min(A_S^T A_S) - 1|, |lambda_max - 1|).
/// Subsets are visited in lexicographic order and the first maximizer is
/// kept, so the witness is reproducible.
RicValue compute_delta(const Matrix& A, Index k, std::uint64_t budget = kDefaultSubsetBudget);

/// theta_{k1,k2} by exhaustive enumeration of disjoint support pairs:
/// max over |S| = k1, |T| = k2, S ∩ T = ∅ of sigma_max(A_S^T A_T).
RocValue compute_theta(const Matrix& A, Index k1, Index k2,
                       std::uint64_t budget = kDefaultSubsetBudget);

/// Sampled lower bounds for matrices beyond the enumeration budget. Always
/// <= the exact constant; deterministic given the seed.
double randomized_lower_bound_delta(const Matrix& A, Index k, int trials, std::uint64_t seed);
double randomized_lower_bound_theta(const Matrix& A, Index k1, Index k2, int trials,
                                    std::uint64_t seed);

/// Slack used when asserting the lemma inequalities; absorbs eigenvalue
/// tolerance from the enumerated constants.
inline constexpr double kLemmaSlack = 1e-9;

/// Record of one sparse inner-product bound check:
/// |<Au, Av>| <= theta_{k1,k2} * ||u||_2 * lambda * sqrt(k2)
/// for u k1-sparse, supp(u) ∩ supp(v) = ∅, ||v||_1 <= lambda*k2,
/// ||v||_inf <= lambda. Precondition violations throw (they indicate a bad
/// caller, not a failed inequality).
struct Lemma1Witness {
  double inner_abs = 0.0;
  double theta = 0.0;
  double u_norm2 = 0.0;
  double lambda = 0.0;
  double bound = 0.0;
  bool holds = false;
};
Lemma1Witness check_lemma1(const Matrix& A, const Vector& u, const Vector& v, Index k1, Index k2,
                           double lambda, std::uint64_t budget = kDefaultSubsetBudget);

/// Record of one order-scaling check: theta_{k, tau*kp} <= sqrt(tau) * theta_{k, kp}.
struct Lemma3Witness {
  double theta_scaled = 0.0;  // theta_{k, tau*kp}
  double theta_base = 0.0;    // theta_{k, kp}
  double tau = 1.0;
  double bound = 0.0;
  bool holds = false;
};
Lemma3Witness check_lemma3(const Matrix& A, Index k, Index kp, double tau,
                           std::uint64_t budget = kDefaultSubsetBudget);

/// C(n, k) clamped to `clamp` (returns clamp+1 on overflow past it).
std::uint64_t binomial_clamped(Index n, Index k, std::uint64_t clamp);

/// Lexicographic enumeration of k-subsets of [0, n).
class CombinationEnumerator {
 public:
  CombinationEnumerator(Index n, Index k);
  /// Writes the next subset into `out`; returns false when exhausted.
  bool next(IndexSet& out);

 private:
  Index n_;
  Index k_;
  IndexSet current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace wl1
