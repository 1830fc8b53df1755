#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "isoed/abvar.hpp"

namespace isoed::sampling {

/// Seeded generator; the integer mapping avoids std distributions so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry);

/// Product of random elementary row operations; determinant 1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 8);

/// Nonsingular matrix with entries in [-max_entry, max_entry].
IntMatrix random_nonsingular(Rng& rng, std::size_t n, long max_entry);

/// U * diag(diagonal) * V with random unimodular U, V.
IntMatrix with_smith_form(Rng& rng, std::span<const Integer> diagonal);

IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

/// Random composition of g into factor dimensions, labelled E1, E2, ...
std::vector<ProductFactor> random_factors(Rng& rng, std::size_t g);

/// Primes in (lower, upper].
std::vector<long> primes_between(long lower, long upper);

}  // namespace isoed::sampling
