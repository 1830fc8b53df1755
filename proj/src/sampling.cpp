#include "isoed/sampling.hpp"

#include "isoed/error.hpp"
#include "isoed/fingroup.hpp"

namespace isoed::sampling {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& x : m.row(r)) x = rng.uniform(-max_entry, max_entry);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_row_multiple(i, j, rng.uniform(-2, 2));
  }
  return u;
}

IntMatrix random_nonsingular(Rng& rng, std::size_t n, long max_entry) {
  while (true) {
    IntMatrix m = random_matrix(rng, n, n, max_entry);
    if (m.determinant() != 0) return m;
  }
}

IntMatrix with_smith_form(Rng& rng, std::span<const Integer> diagonal) {
  const std::size_t n = diagonal.size();
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = diagonal[i];
  return random_unimodular(rng, n) * d * random_unimodular(rng, n);
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(offset + r, offset + c) = b(r, c);
    offset += b.rows();
  }
  return m;
}

std::vector<ProductFactor> random_factors(Rng& rng, std::size_t g) {
  std::vector<ProductFactor> factors;
  std::size_t left = g;
  while (left > 0) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(left)));
    factors.push_back({"E" + std::to_string(factors.size() + 1), d});
    left -= d;
  }
  return factors;
}

std::vector<long> primes_between(long lower, long upper) {
  std::vector<long> out;
  for (long q = std::max(2L, lower + 1); q <= upper; ++q)
    if (is_prime(Integer(q))) out.push_back(q);
  return out;
}

}  // namespace isoed::sampling
