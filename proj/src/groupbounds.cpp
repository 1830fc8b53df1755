#include "isoed/groupbounds.hpp"

#include "isoed/error.hpp"
#include "isoed/fingroup.hpp"

namespace isoed {

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(Integer(p))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

std::size_t chi_valuation(const Integer& chi, unsigned long p) {
  if (chi == 0) throw Error(ErrorCode::ZeroChi, "chi(X, O_X) = 0: no bound is available");
  return nu_p(chi, Integer(p));
}

}  // namespace

unsigned long todd_denominator_exponent(unsigned long n, unsigned long p) {
  require_prime(p);
  return n / (p - 1);
}

IndexBound orbit_index_bound(const ActionQuery& query) {
  require_prime(query.p);
  const auto a = chi_valuation(query.chi, query.p);
  Rational raw = Rational(static_cast<long>(a)) + Rational(Integer(query.n), Integer(query.p - 1));
  raw.canonicalize();
  return {raw, floor_of(raw)};
}

RankBoundResult abelian_rank_bound(const ActionQuery& query) {
  require_prime(query.p);
  const auto a = chi_valuation(query.chi, query.p);
  Rational raw = Rational(static_cast<long>(a)) + Rational(Integer(query.p) * query.n, Integer(query.p - 1));
  raw.canonicalize();
  Integer g2_cap;
  mpz_ui_pow_ui(g2_cap.get_mpz_t(), query.p, query.n / (query.p - 1));
  return {raw, floor_of(raw), RankDecomposition{Integer(query.n) + a, g2_cap}};
}

unsigned long rc_rank_bound(unsigned long n, unsigned long p) {
  require_prime(p);
  return (p * n) / (p - 1);
}

DegreeBounds sym_alt_degree_bounds(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  return {4 * n + 1, 4 * n + 3};
}

unsigned long elementary_two_witness(unsigned long m, bool alternating) {
  if (!alternating && m < 2) throw Error(ErrorCode::DegreeTooSmall, "S_m needs m >= 2");
  if (alternating && m < 4) throw Error(ErrorCode::DegreeTooSmall, "A_m needs m >= 4");
  return alternating ? m / 2 - 1 : m / 2;
}

LocalRingBounds local_ring_bounds(unsigned long n, unsigned long p) {
  require_prime(p);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  const unsigned long index = (n - 1) / (p - 1);
  return {index, n + index};
}

unsigned long cy_rank_bound(unsigned long n, unsigned long p, const Integer& chi) {
  require_prime(p);
  if (chi == 0) throw Error(ErrorCode::ZeroChi, "chi(X, O_X) = 0: no bound is available");
  if (abs(chi) > 2) throw Error(ErrorCode::ChiOutOfRange, "chi must be one of -2, -1, 1, 2");
  return p == 2 ? 2 * n + 1 : (p * n) / (p - 1);
}

SurfaceChern blowup_chern(const SurfaceChern& base, unsigned long r) {
  return {base.c1_sq - r, base.c2 + r};
}

bool chern_divisibility_test(const Integer& chern_number, unsigned long p, unsigned long c) {
  require_prime(p);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, c);
  return chern_number % power == 0;
}

}  // namespace isoed
