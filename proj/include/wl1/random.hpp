#pragma once

#include <cstdint>
#include <random>

#include "wl1/types.hpp"

namespace wl1 {

/// Deterministic random source. Every distribution here is implemented
/// explicitly on top of the mt19937_64 word stream, because the standard
/// library's distribution classes (and std::sample) are allowed to differ
/// between implementations. Identical seeds must yield identical draws on
/// every platform; the sweep CSVs are compared byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, n) via masked rejection.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [0, 1) from the top 53 bits of one word.
  double uniform();

  /// Standard normal via Box-Muller (the spare is cached).
  double normal();

  Vector normal_vector(Index n);
  Matrix gaussian_matrix(Index rows, Index cols);

  /// `count` distinct values from [0, n), sorted. Selection sampling, so the
  /// draw sequence is fixed by the seed alone.
  IndexSet sample_indices(Index n, Index count);

  /// `count` distinct elements of `pool` (which must be sorted), sorted.
  IndexSet sample_from(const IndexSet& pool, Index count);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Splitmix64-style mix for deriving per-trial / per-stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace wl1
