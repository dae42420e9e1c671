#include <doctest.h>

#include "wl1/model.hpp"
#include "wl1/random.hpp"

using namespace wl1;

TEST_CASE("best_k_support picks largest magnitudes with low-index ties") {
  Vector x(4);
  x << 0, 5, 0, -7;
  CHECK(best_k_support(x, 1) == IndexSet{3});

  Vector y(4);
  y << 1, 2, 3, 4;
  CHECK(best_k_support(y, 2) == IndexSet{2, 3});

  Vector t(3);
  t << 2, -2, 0;
  CHECK(best_k_support(t, 1) == IndexSet{0});

  // Fewer nonzeros than k: padded with the lowest-index zeros.
  Vector sparse(5);
  sparse << 0, 0, 9, 0, 0;
  CHECK(best_k_support(sparse, 3) == IndexSet{0, 1, 2});

  CHECK_THROWS_AS(best_k_support(x, 0), std::invalid_argument);
  CHECK_THROWS_AS(best_k_support(x, 5), std::invalid_argument);
}

TEST_CASE("x_max(k) decomposition is exact") {
  Rng rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.below(12));
    const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    Vector x = rng.normal_vector(n);
    const IndexSet T0 = best_k_support(x, k);
    const Vector head = restrict_to(x, T0);
    const Vector tail = x - head;
    CHECK(head.lpNorm<1>() + tail.lpNorm<1>() == doctest::Approx(x.lpNorm<1>()).epsilon(1e-15));
    // head really carries the k largest magnitudes
    double min_head = 1e300, max_tail = 0.0;
    for (const Index i : T0) min_head = std::min(min_head, std::abs(x[i]));
    for (Index i = 0; i < n; ++i)
      if (std::find(T0.begin(), T0.end(), i) == T0.end())
        max_tail = std::max(max_tail, std::abs(x[i]));
    CHECK(min_head >= max_tail);
  }
}

TEST_CASE("make_estimate hits the requested cardinalities") {
  const IndexSet T0{0, 1};
  const auto full = make_estimate(T0, Rational(1, 1), Rational(1, 1), 2, 10, 3);
  CHECK(full.indices == T0);

  const auto wrong = make_estimate(T0, Rational(1, 1), Rational(0, 1), 2, 10, 3);
  CHECK(wrong.size() == 2);
  CHECK(set_intersection(wrong.indices, T0).empty());

  const IndexSet T0b{0, 1, 2, 3};
  const auto half = make_estimate(T0b, Rational(1, 2), Rational(1, 2), 4, 10, 7);
  CHECK(half.size() == 2);
  CHECK(set_intersection(half.indices, T0b).size() == 1);

  CHECK_THROWS_WITH_AS(make_estimate(T0, Rational(2, 1), Rational(1, 1), 2, 10, 0),
                       doctest::Contains("exceeds |T0|"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_estimate(T0, Rational(1, 3), Rational(1, 1), 2, 10, 0),
                       doctest::Contains("not an integer"), std::invalid_argument);
}

TEST_CASE("make_estimate then profile_of round-trips (rho, alpha)") {
  Rng rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    const Index N = 12;
    const Index k = 2 + static_cast<Index>(rng.below(4));
    Vector x = Vector::Zero(N);
    for (const Index i : rng.sample_indices(N, k)) x[i] = rng.normal();
    const IndexSet T0 = best_k_support(x, k);
    const Index m = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(k)));
    const Index j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(m) + 1));
    const Rational rho(m, k), alpha(j, m);
    const auto est = make_estimate(T0, rho, alpha, k, N, rng.next_u64());
    const auto prof = profile_of(T0, est, k);
    CHECK(prof.rho == rho);
    CHECK(prof.alpha == alpha);
    CHECK(prof.alpha + prof.beta == Rational(1, 1));
  }
}

TEST_CASE("profile_of conventions") {
  const IndexSet T0{0, 1};
  const auto p1 = profile_of(T0, make_support_estimate({0, 1}, 10), 2);
  CHECK(p1.rho == Rational(1, 1));
  CHECK(p1.alpha == Rational(1, 1));
  CHECK(p1.beta == Rational(0, 1));

  const auto p2 = profile_of(T0, make_support_estimate({1, 2}, 10), 2);
  CHECK(p2.alpha == Rational(1, 2));
  CHECK(p2.beta == Rational(1, 2));

  const auto p3 = profile_of(T0, make_support_estimate({}, 10), 2);
  CHECK(p3.rho == Rational(0, 1));
  CHECK(p3.alpha == Rational(1, 1));
  CHECK(p3.beta == Rational(0, 1));
}

TEST_CASE("double_bracket") {
  CHECK(double_bracket(3.0) == 3);
  CHECK(double_bracket(3.2) == 4);
  CHECK(double_bracket(0.0) == 0);
  CHECK_THROWS_AS(double_bracket(-0.5), std::invalid_argument);

  Rng rng(5);
  for (int rep = 0; rep < 10000; ++rep) {
    const double z = rng.uniform() * 50.0;
    const double b = static_cast<double>(double_bracket(z));
    CHECK(b - z >= 0.0);
    CHECK(b - z < 1.0);
  }
}

TEST_CASE("weighted norm") {
  Vector x(2);
  x << 1, 1;
  Vector w(2);
  w << 0, 1;
  CHECK(weighted_norm(x, w) == 1.0);

  Vector x2(2);
  x2 << 2, -3;
  Vector w2(2);
  w2 << 0.5, 0.5;
  CHECK(weighted_norm(x2, w2) == doctest::Approx(2.5).epsilon(1e-15));

  Rng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    Vector v = rng.normal_vector(8);
    const auto est = make_support_estimate({1, 4}, 8);
    CHECK(weighted_norm(v, make_weights(est, 1.0)) ==
          doctest::Approx(v.lpNorm<1>()).epsilon(1e-15));
  }
  Vector short_w(1);
  CHECK_THROWS_AS(weighted_norm(x, short_w), std::invalid_argument);
}

TEST_CASE("weights are omega on the estimate and 1 elsewhere") {
  const auto est = make_support_estimate({2, 5, 6}, 9);
  const auto wv = make_weights(est, 0.25);
  for (Index i = 0; i < 9; ++i)
    CHECK(wv.w[i] == (est.contains(i) ? 0.25 : 1.0));
  CHECK_THROWS_AS(make_weights(est, 1.5), std::invalid_argument);
}

TEST_CASE("noise spec validation") {
  CHECK_NOTHROW(make_noise_spec(NoiseKind::kExact, 0, 0, 0));
  CHECK_THROWS_AS(make_noise_spec(NoiseKind::kExact, 0.1, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_noise_spec(NoiseKind::kL2Ball, 0.2, 0.1, 0), std::invalid_argument);
  CHECK_NOTHROW(make_noise_spec(NoiseKind::kL2Ball, 0.1, 0.2, 0));
}
