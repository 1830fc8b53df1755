#pragma once

#include <gmpxx.h>

#include <string>

namespace isoed {

/// Arbitrary-precision integer used for every lattice entry and group order.
using Integer = mpz_class;
/// Exact rational; bound witnesses are reported in this type.
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Canonical "p/q" (or "p" when q == 1).
inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

inline Integer abs_value(const Integer& x) { return abs(x); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Smallest integer not below x.
inline Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

/// Largest integer not above x.
inline Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

}  // namespace isoed
