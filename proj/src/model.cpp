#include "wl1/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wl1/random.hpp"

namespace wl1 {

bool is_sorted_unique_in_range(const IndexSet& s, Index n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

IndexSet set_complement(const IndexSet& s, Index n) {
  IndexSet out;
  out.reserve(static_cast<std::size_t>(n) - s.size());
  std::size_t p = 0;
  for (Index i = 0; i < n; ++i) {
    if (p < s.size() && s[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Vector restrict_to(const Vector& x, const IndexSet& s) {
  Vector out = Vector::Zero(x.size());
  for (const Index i : s) out[i] = x[i];
  return out;
}

double l1_norm_on(const Vector& x, const IndexSet& s) {
  double acc = 0.0;
  for (const Index i : s) acc += std::abs(x[i]);
  return acc;
}

SignalInstance make_signal_instance(Vector x, Index k) {
  if (x.size() == 0) throw std::invalid_argument("SignalInstance: empty signal");
  if (!x.allFinite()) throw std::invalid_argument("SignalInstance: non-finite entries");
  if (k < 1 || k > x.size())
    throw std::invalid_argument("SignalInstance: k = " + std::to_string(k) +
                                " out of range [1, " + std::to_string(x.size()) + "]");
  return SignalInstance{std::move(x), k};
}

bool SupportEstimate::contains(Index i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

SupportEstimate make_support_estimate(IndexSet indices, Index ambient) {
  if (ambient <= 0) throw std::invalid_argument("SupportEstimate: ambient dimension must be positive");
  std::sort(indices.begin(), indices.end());
  if (!is_sorted_unique_in_range(indices, ambient))
    throw std::invalid_argument("SupportEstimate: indices must be distinct and in [0, N)");
  return SupportEstimate{std::move(indices), ambient};
}

WeightVector make_weights(const SupportEstimate& estimate, double omega) {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("make_weights: omega must lie in [0, 1]");
  Vector w = Vector::Ones(estimate.ambient);
  for (const Index i : estimate.indices) w[i] = omega;
  return WeightVector{std::move(w), omega, estimate};
}

NoiseSpec make_noise_spec(NoiseKind kind, double epsilon, double eta, double sigma) {
  if (!(epsilon >= 0.0) || !(eta >= 0.0) || !(sigma >= 0.0))
    throw std::invalid_argument("NoiseSpec: radii and sigma must be nonnegative");
  if (kind == NoiseKind::kExact && (epsilon != 0.0 || eta != 0.0))
    throw std::invalid_argument("NoiseSpec: exact noise requires epsilon = eta = 0");
  if ((kind == NoiseKind::kL2Ball || kind == NoiseKind::kDantzigBall) && eta < epsilon)
    throw std::invalid_argument("NoiseSpec: solver radius eta must be >= epsilon");
  return NoiseSpec{kind, epsilon, eta, sigma};
}

IndexSet best_k_support(const Vector& x, Index k) {
  const Index n = x.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("best_k_support: k = " + std::to_string(k) +
                                " out of range [1, " + std::to_string(n) + "]");
  IndexSet order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&x](Index a, Index b) {
    const double ma = std::abs(x[a]), mb = std::abs(x[b]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  IndexSet out(order.begin(), order.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

SupportEstimate make_estimate(const IndexSet& T0, const Rational& rho, const Rational& alpha,
                              Index k, Index N, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("make_estimate: k must be positive");
  if (!is_sorted_unique_in_range(T0, N))
    throw std::invalid_argument("make_estimate: T0 must be sorted, unique, in [0, N)");
  const long long m = rational_times_int_exact(rho, k, "make_estimate: rho*k");
  const long long j = rational_times_int_exact(alpha * rho, k, "make_estimate: alpha*rho*k");
  if (m < 0 || j < 0 || j > m)
    throw std::invalid_argument("make_estimate: need 0 <= alpha*rho*k <= rho*k");
  if (j > static_cast<long long>(T0.size()))
    throw std::invalid_argument("make_estimate: overlap alpha*rho*k = " + std::to_string(j) +
                                " exceeds |T0| = " + std::to_string(T0.size()));
  const long long outside = m - j;
  const long long room = static_cast<long long>(N) - static_cast<long long>(T0.size());
  if (outside > room)
    throw std::invalid_argument("make_estimate: (1-alpha)*rho*k = " + std::to_string(outside) +
                                " exceeds |T0^c| = " + std::to_string(room));
  Rng rng(seed);
  const IndexSet inside = rng.sample_from(T0, static_cast<Index>(j));
  const IndexSet pool = set_complement(T0, N);
  const IndexSet extra = rng.sample_from(pool, static_cast<Index>(outside));
  return make_support_estimate(set_union(inside, extra), N);
}

EstimateProfile profile_of(const IndexSet& T0, const SupportEstimate& estimate, Index k) {
  if (k < 1) throw std::invalid_argument("profile_of: k must be positive");
  if (!is_sorted_unique_in_range(T0, estimate.ambient))
    throw std::invalid_argument("profile_of: T0 must be sorted, unique, in [0, N)");
  const long long sz = static_cast<long long>(estimate.indices.size());
  const Rational rho(sz, k);
  if (sz == 0) {
    // alpha is undefined for an empty estimate; call it fully accurate.
    return EstimateProfile{rho, Rational(1, 1), Rational(0, 1)};
  }
  const long long overlap =
      static_cast<long long>(set_intersection(T0, estimate.indices).size());
  const Rational alpha(overlap, sz);
  return EstimateProfile{rho, alpha, Rational(1, 1) - alpha};
}

long long double_bracket(double zeta) {
  if (!(zeta >= 0.0))
    throw std::invalid_argument("double_bracket: input must be nonnegative and finite");
  return static_cast<long long>(std::ceil(zeta));
}

double weighted_norm(const Vector& x, const WeightVector& w) {
  return weighted_norm(x, w.w);
}

}  // namespace wl1
