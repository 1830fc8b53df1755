#include "isoed/fingroup.hpp"

#include <algorithm>

#include "isoed/error.hpp"

namespace isoed {

namespace {

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t block = 128;
    auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd_of(q, n);
        k += block;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_of(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> primes;
  if (m <= 1) return primes;
  for (unsigned long small = 2; small < 1000 && m > 1; ++small) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), small) != 0) {
      primes.emplace_back(small);
      while (mpz_divisible_ui_p(m.get_mpz_t(), small) != 0) m /= small;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

FiniteAbelianGroup normalize(std::span<const Integer> factors) {
  std::vector<Integer> work(factors.begin(), factors.end());
  for (const auto& f : work) {
    if (f <= 0) throw Error(ErrorCode::InvalidFactor, "cyclic order " + to_string(f) + " is not positive");
  }
  // Z/a + Z/b ~ Z/gcd + Z/lcm; one sweep per slot leaves work[i] | work[j] for i < j.
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = i + 1; j < work.size(); ++j) {
      Integer g = gcd_of(work[i], work[j]);
      Integer l = lcm_of(work[i], work[j]);
      work[i] = std::move(g);
      work[j] = std::move(l);
    }
  }
  std::erase_if(work, [](const Integer& f) { return f == 1; });
  return FiniteAbelianGroup::from_factors(work);
}

FiniteAbelianGroup FiniteAbelianGroup::from_factors(std::span<const Integer> factors) {
  bool canonical = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2 || (i > 0 && factors[i] % factors[i - 1] != 0)) {
      canonical = false;
      break;
    }
  }
  if (!canonical) return normalize(factors);
  FiniteAbelianGroup g;
  g.factors_.assign(factors.begin(), factors.end());
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_factors(std::initializer_list<long> factors) {
  std::vector<Integer> v;
  v.reserve(factors.size());
  for (long f : factors) v.emplace_back(f);
  return from_factors(v);
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) s += " + ";
    s += "Z/" + isoed::to_string(factors_[i]);
  }
  return s;
}

std::size_t rank(const FiniteAbelianGroup& group) { return group.invariant_factors().size(); }

std::size_t rank_p(const FiniteAbelianGroup& group, const Integer& p) {
  require_prime(p);
  return static_cast<std::size_t>(std::count_if(group.invariant_factors().begin(), group.invariant_factors().end(),
                                                 [&](const Integer& f) { return f % p == 0; }));
}

std::size_t nu_p(const Integer& m, const Integer& p) {
  if (m == 0) throw Error(ErrorCode::ZeroValuation, "valuation of 0 is infinite");
  require_prime(p);
  Integer rest = abs(m);
  std::size_t a = 0;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  return a;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& lhs, const FiniteAbelianGroup& rhs) {
  std::vector<Integer> all = lhs.invariant_factors();
  all.insert(all.end(), rhs.invariant_factors().begin(), rhs.invariant_factors().end());
  return normalize(all);
}

}  // namespace isoed
