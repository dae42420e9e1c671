#include "wl1/random.hpp"

#include <cmath>

namespace wl1 {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  if (n == 1) return 0;
  // Smallest all-ones mask covering n-1, then rejection.
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t r = engine_() & mask;
    if (r < n) return r;
  }
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Vector Rng::normal_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  // Column-major fill so a column ensemble is a contiguous draw.
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

IndexSet Rng::sample_indices(Index n, Index count) {
  if (count < 0 || count > n)
    throw std::invalid_argument("Rng::sample_indices: count out of range");
  IndexSet out;
  out.reserve(static_cast<std::size_t>(count));
  Index need = count;
  for (Index i = 0; i < n && need > 0; ++i) {
    const Index remaining = n - i;
    if (below(static_cast<std::uint64_t>(remaining)) < static_cast<std::uint64_t>(need)) {
      out.push_back(i);
      --need;
    }
  }
  return out;
}

IndexSet Rng::sample_from(const IndexSet& pool, Index count) {
  const IndexSet positions = sample_indices(static_cast<Index>(pool.size()), count);
  IndexSet out;
  out.reserve(positions.size());
  for (const Index p : positions) out.push_back(pool[static_cast<std::size_t>(p)]);
  return out;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace wl1
