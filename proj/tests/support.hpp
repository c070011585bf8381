// Shared helpers for the test binaries: seeded generators and tiny oracles.
#pragma once

#include "mirrorkit/exact.hpp"
#include "mirrorkit/lattice.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testing {

using namespace mirrorkit;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  IntMatrix int_matrix(Index rows, Index cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = integer(lo, hi);
    return m;
  }

  RatMatrix rat_matrix(Index rows, Index cols, long lo, long hi) {
    RatMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) {
        m(r, c) = Rational(integer(lo, hi), integer(1, 3));
        m(r, c).canonicalize();
      }
    return m;
  }

  template <class Tag>
  LatticeVector<Tag> lattice_vector(Index dim, long lo, long hi) {
    IntVector v(dim);
    for (Index i = 0; i < dim; ++i) v[i] = integer(lo, hi);
    return LatticeVector<Tag>(v);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Leibniz expansion; exponential but independent of Bareiss.
inline Integer leibniz_determinant(const IntMatrix& m) {
  const Index n = m.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Integer total = 0;
  do {
    Integer term = 1;
    int inversions = 0;
    for (Index i = 0; i < n; ++i) {
      term *= m(i, perm[static_cast<std::size_t>(i)]);
      for (Index j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Integer binomial(long top, long bottom) {
  if (bottom < 0 || bottom > top) return 0;
  Integer out = 1;
  for (long j = 1; j <= bottom; ++j) out = out * (top - bottom + j) / j;
  return out;
}

}  // namespace testing
