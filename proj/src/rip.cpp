#include "wl1/rip.hpp"

#include <algorithm>
#include <cmath>

#include "wl1/linalg.hpp"
#include "wl1/random.hpp"

namespace wl1 {

namespace {

void require_matrix(const Matrix& A) {
  if (A.rows() == 0 || A.cols() == 0) throw std::invalid_argument("rip: empty matrix");
  if (!all_finite(A)) throw std::invalid_argument("rip: non-finite matrix entries");
}

Matrix gram(const Matrix& A) { return A.transpose() * A; }

Matrix submatrix(const Matrix& G, const IndexSet& rows, const IndexSet& cols) {
  Matrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = G(rows[i], cols[j]);
  return out;
}

double delta_of_support(const Matrix& G, const IndexSet& s) {
  const auto [lmin, lmax] = detail::sym_eig_extremes(submatrix(G, s, s));
  return std::max(std::abs(lmin - 1.0), std::abs(lmax - 1.0));
}

double theta_of_supports(const Matrix& G, const IndexSet& s, const IndexSet& t) {
  const Matrix B = submatrix(G, s, t);
  Matrix W;
  if (B.rows() <= B.cols())
    W.noalias() = B * B.transpose();
  else
    W.noalias() = B.transpose() * B;
  return std::sqrt(std::max(0.0, detail::sym_eig_max(W)));
}

}  // namespace

std::uint64_t binomial_clamped(Index n, Index k, std::uint64_t clamp) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  clamp = std::min<std::uint64_t>(clamp, std::uint64_t{1} << 62);  // keep clamp+1 sane
  std::uint64_t value = 1;
  for (Index i = 1; i <= k; ++i) {
    // value * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (value > (clamp + 1) / factor * static_cast<std::uint64_t>(i)) return clamp + 1;
    value = value * factor / static_cast<std::uint64_t>(i);
    if (value > clamp) return clamp + 1;
  }
  return value;
}

CombinationEnumerator::CombinationEnumerator(Index n, Index k) : n_(n), k_(k) {
  if (k < 0 || k > n) throw std::invalid_argument("CombinationEnumerator: k out of range");
  current_.resize(static_cast<std::size_t>(k));
}

bool CombinationEnumerator::next(IndexSet& out) {
  if (done_) return false;
  if (!started_) {
    for (Index i = 0; i < k_; ++i) current_[static_cast<std::size_t>(i)] = i;
    started_ = true;
    out = current_;
    return true;
  }
  if (k_ == 0) {
    done_ = true;
    return false;
  }
  Index i = k_ - 1;
  while (i >= 0 && current_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++current_[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k_; ++j)
    current_[static_cast<std::size_t>(j)] = current_[static_cast<std::size_t>(j - 1)] + 1;
  out = current_;
  return true;
}

RicValue compute_delta(const Matrix& A, Index k, std::uint64_t budget) {
  require_matrix(A);
  const Index N = A.cols();
  if (k < 1 || k > N) throw std::invalid_argument("compute_delta: order k out of range");
  if (binomial_clamped(N, k, budget) > budget)
    throw budget_error("compute_delta: C(" + std::to_string(N) + ", " + std::to_string(k) +
                       ") exceeds the enumeration budget; use randomized_lower_bound_delta");
  const Matrix G = gram(A);
  RicValue best{k, -1.0, {}};
  CombinationEnumerator combos(N, k);
  IndexSet s;
  while (combos.next(s)) {
    const double v = delta_of_support(G, s);
    if (v > best.value) {
      best.value = v;
      best.argmax_support = s;
    }
  }
  return best;
}

RocValue compute_theta(const Matrix& A, Index k1, Index k2, std::uint64_t budget) {
  require_matrix(A);
  const Index N = A.cols();
  if (k1 < 1 || k2 < 1 || k1 + k2 > N)
    throw std::invalid_argument("compute_theta: need k1, k2 >= 1 and k1 + k2 <= N");
  const std::uint64_t outer = binomial_clamped(N, k1, budget);
  const std::uint64_t inner = binomial_clamped(N - k1, k2, budget);
  if (outer > budget || inner > budget || outer > budget / inner)
    throw budget_error("compute_theta: subset-pair count exceeds the enumeration budget; use "
                       "randomized_lower_bound_theta");
  const Matrix G = gram(A);
  RocValue best{k1, k2, -1.0, {}, {}};
  CombinationEnumerator outer_combos(N, k1);
  IndexSet s, t_local, t;
  while (outer_combos.next(s)) {
    const IndexSet rest = set_complement(s, N);
    CombinationEnumerator inner_combos(static_cast<Index>(rest.size()), k2);
    while (inner_combos.next(t_local)) {
      t.clear();
      for (const Index p : t_local) t.push_back(rest[static_cast<std::size_t>(p)]);
      const double v = theta_of_supports(G, s, t);
      if (v > best.value) {
        best.value = v;
        best.argmax_left = s;
        best.argmax_right = t;
      }
    }
  }
  return best;
}

double randomized_lower_bound_delta(const Matrix& A, Index k, int trials, std::uint64_t seed) {
  require_matrix(A);
  const Index N = A.cols();
  if (k < 1 || k > N) throw std::invalid_argument("randomized_lower_bound_delta: k out of range");
  if (trials < 1) throw std::invalid_argument("randomized_lower_bound_delta: trials must be >= 1");
  const Matrix G = gram(A);
  Rng rng(seed);
  double best = 0.0;
  for (int t = 0; t < trials; ++t)
    best = std::max(best, delta_of_support(G, rng.sample_indices(N, k)));
  return best;
}

double randomized_lower_bound_theta(const Matrix& A, Index k1, Index k2, int trials,
                                    std::uint64_t seed) {
  require_matrix(A);
  const Index N = A.cols();
  if (k1 < 1 || k2 < 1 || k1 + k2 > N)
    throw std::invalid_argument("randomized_lower_bound_theta: orders out of range");
  if (trials < 1) throw std::invalid_argument("randomized_lower_bound_theta: trials must be >= 1");
  const Matrix G = gram(A);
  Rng rng(seed);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const IndexSet s = rng.sample_indices(N, k1);
    const IndexSet pool = set_complement(s, N);
    const IndexSet tt = rng.sample_from(pool, k2);
    best = std::max(best, theta_of_supports(G, s, tt));
  }
  return best;
}

Lemma1Witness check_lemma1(const Matrix& A, const Vector& u, const Vector& v, Index k1, Index k2,
                           double lambda, std::uint64_t budget) {
  require_matrix(A);
  if (u.size() != A.cols() || v.size() != A.cols())
    throw std::invalid_argument("check_lemma1: vector length must match A columns");
  if (!(lambda >= 0.0)) throw std::invalid_argument("check_lemma1: lambda must be nonnegative");
  Index u_nonzeros = 0;
  for (Index i = 0; i < u.size(); ++i) {
    if (u[i] != 0.0) {
      ++u_nonzeros;
      if (v[i] != 0.0)
        throw std::invalid_argument("check_lemma1: supports of u and v are not disjoint");
    }
  }
  if (u_nonzeros > k1) throw std::invalid_argument("check_lemma1: u is not k1-sparse");
  const double slack = 1e-12 * std::max(1.0, lambda);
  if (v.lpNorm<1>() > lambda * static_cast<double>(k2) + slack)
    throw std::invalid_argument("check_lemma1: ||v||_1 exceeds lambda * k2");
  if (v.lpNorm<Eigen::Infinity>() > lambda + slack)
    throw std::invalid_argument("check_lemma1: ||v||_inf exceeds lambda");

  Lemma1Witness wit;
  wit.theta = compute_theta(A, k1, k2, budget).value;
  wit.u_norm2 = u.norm();
  wit.lambda = lambda;
  wit.inner_abs = std::abs((A * u).dot(A * v));
  wit.bound = wit.theta * wit.u_norm2 * lambda * std::sqrt(static_cast<double>(k2));
  wit.holds = wit.inner_abs <= wit.bound + kLemmaSlack;
  return wit;
}

Lemma3Witness check_lemma3(const Matrix& A, Index k, Index kp, double tau, std::uint64_t budget) {
  require_matrix(A);
  if (!(tau >= 1.0)) throw std::invalid_argument("check_lemma3: tau must be >= 1");
  const double scaled = tau * static_cast<double>(kp);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9)
    throw std::invalid_argument("check_lemma3: tau * k' must be an integer");
  Lemma3Witness wit;
  wit.tau = tau;
  wit.theta_scaled = compute_theta(A, k, static_cast<Index>(rounded), budget).value;
  wit.theta_base = compute_theta(A, k, kp, budget).value;
  wit.bound = std::sqrt(tau) * wit.theta_base;
  wit.holds = wit.theta_scaled <= wit.bound + kLemmaSlack;
  return wit;
}

}  // namespace wl1
