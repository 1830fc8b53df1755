#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isoed/integer.hpp"

namespace isoed {

/// Finite abelian group Z/s_1 + ... + Z/s_r in invariant-factor form:
/// every s_i >= 2 and s_1 | s_2 | ... | s_r. The trivial group has no factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Canonicalizes an arbitrary list of cyclic orders (see normalize()).
  static FiniteAbelianGroup from_factors(std::span<const Integer> factors);
  static FiniteAbelianGroup from_factors(std::initializer_list<long> factors);

  [[nodiscard]] const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  [[nodiscard]] Integer order() const;
  [[nodiscard]] bool is_trivial() const noexcept { return factors_.empty(); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// Regroups cyclic orders into the divisibility chain. Units are dropped.
/// Throws InvalidFactor for any factor <= 0.
FiniteAbelianGroup normalize(std::span<const Integer> factors);

/// Minimum number of generators; 0 for the trivial group.
std::size_t rank(const FiniteAbelianGroup& group);

/// rank(G / pG). Throws NotPrime.
std::size_t rank_p(const FiniteAbelianGroup& group, const Integer& p);

/// Exponent of the largest power of p dividing m. Throws ZeroValuation for m = 0
/// and NotPrime for composite p.
std::size_t nu_p(const Integer& m, const Integer& p);

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& lhs, const FiniteAbelianGroup& rhs);

bool is_prime(const Integer& p);

/// Distinct prime divisors of |n| in increasing order (empty for |n| <= 1).
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace isoed
