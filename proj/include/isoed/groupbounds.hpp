#pragma once

#include <cstddef>
#include <optional>

#include "isoed/integer.hpp"

namespace isoed {

/// An abelian p-group acting on a smooth projective variety of dimension n
/// with holomorphic Euler characteristic chi.
struct ActionQuery {
  unsigned long n = 0;
  unsigned long p = 2;
  Integer chi = 1;
};

struct IndexBound {
  Rational raw;
  Integer integral;
};

/// G ~ G1 x G2 with rank(G1) <= rank_g1_cap and |G2| <= order_g2_cap.
struct RankDecomposition {
  Integer rank_g1_cap;
  Integer order_g2_cap;
};

struct RankBoundResult {
  Rational raw;
  Integer integral;  // floor(raw)
  std::optional<RankDecomposition> decomposition;
};

struct SurfaceChern {
  Integer c1_sq;
  Integer c2;
  friend bool operator==(const SurfaceChern&, const SurfaceChern&) = default;
};

struct DegreeBounds {
  unsigned long symmetric = 0;
  unsigned long alternating = 0;
};

struct LocalRingBounds {
  unsigned long index_exponent_cap = 0;
  unsigned long rank_cap = 0;
};

/// floor(n / (p-1)): p-adic exponent of the denominator of the n-th Todd class.
unsigned long todd_denominator_exponent(unsigned long n, unsigned long p);

/// Orbit bound log_p[G:H] <= nu_p(chi) + n/(p-1). Throws ZeroChi, NotPrime.
IndexBound orbit_index_bound(const ActionQuery& query);

/// rank(G) <= nu_p(chi) + p n/(p-1), with the G1 x G2 split. Throws ZeroChi, NotPrime.
RankBoundResult abelian_rank_bound(const ActionQuery& query);

/// Rationally connected case (chi = 1): floor(p n/(p-1)) <= 2n.
unsigned long rc_rank_bound(unsigned long n, unsigned long p);

/// Largest m with S_m (resp. A_m) acting faithfully on a rationally connected n-fold.
DegreeBounds sym_alt_degree_bounds(unsigned long n);

/// Rank of the elementary abelian 2-subgroup of S_m generated by disjoint
/// transpositions, or its even part in A_m. Throws DegreeTooSmall.
unsigned long elementary_two_witness(unsigned long m, bool alternating);

/// Bounds for abelian p-groups acting on a rational singularity of dimension n.
LocalRingBounds local_ring_bounds(unsigned long n, unsigned long p);

/// Bound for chi in {-2,-1,1,2}. Throws ZeroChi or ChiOutOfRange.
unsigned long cy_rank_bound(unsigned long n, unsigned long p, const Integer& chi);

/// Blow-up of r points: c1^2 drops by r, the Euler number grows by r.
SurfaceChern blowup_chern(const SurfaceChern& base, unsigned long r);

/// p^c divides the Chern number.
bool chern_divisibility_test(const Integer& chern_number, unsigned long p, unsigned long c);

}  // namespace isoed
