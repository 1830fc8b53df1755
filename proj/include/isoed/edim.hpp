#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoed/abvar.hpp"

namespace isoed {

/// Contribution of one prime p to the lower-bound quantity for a fixed B.
struct PrimeTerm {
  Integer prime;
  std::size_t rank_p = 0;
  Rational value;  // dim A - dim B + (p-1)/p * rank_p(ker n B)
};

/// Everything the bound engine knows about one candidate subvariety B.
struct SubvarietyBound {
  Subvariety sub;
  FiniteAbelianGroup intersection;  // ker(alpha) n B
  std::vector<PrimeTerm> terms;     // one per prime dividing deg(alpha)
  Rational lower_value;             // max over terms; dim A - dim B when there are none
  std::size_t upper_value = 0;      // dim A - dim B + rank(ker n B)
};

struct LowerBound {
  std::size_t value = 0;  // ceiling of raw_min
  Rational raw_min;       // min over B of lower_value
  std::vector<SubvarietyBound> table;
};

struct UpperBound {
  std::size_t value = 0;
  Subvariety minimizer;
};

struct ExactValue {
  std::size_t value = 0;
  Subvariety minimizer;
  LowerBound certificate;
};

struct Incompressibility {
  bool incompressible = false;
  LowerBound certificate;
};

struct EdBoundReport {
  std::size_t dim = 0;
  Integer degree;
  FiniteAbelianGroup kernel;
  std::optional<std::size_t> lower;  // empty when uncertified
  Rational lower_raw;                // meaningful only when lower is set
  std::size_t upper = 0;
  Subvariety upper_witness;
  std::optional<std::size_t> exact;
  std::vector<SubvarietyBound> table;
  bool coprimality = false;
  bool enumeration_complete = false;
  std::vector<std::string> assumptions;
};

/// Per-B table over the given family, in family order.
std::vector<SubvarietyBound> bound_table(const Isogeny& isogeny, std::span<const Subvariety> family);

/// Certified lower bound over the full subvariety family. Throws Uncertified
/// when the family is not known to be complete.
LowerBound lower_bound(const Isogeny& isogeny);

/// min(dim A, min_B dim A - dim B + rank(ker n B)); valid over any family.
/// Ties go to the smallest dim B, then the smallest label.
UpperBound upper_bound(const Isogeny& isogeny);
UpperBound upper_bound(const Isogeny& isogeny, std::span<const Subvariety> family);

/// Exact essential dimension when deg(alpha) is coprime to (dim A)!.
/// Throws CoprimalityFails, Uncertified, or InternalInconsistency if the two
/// bounds disagree.
ExactValue exact_ed(const Isogeny& isogeny);

/// Throws Uncertified.
Incompressibility is_incompressible(const Isogeny& isogeny);

/// gcd(degree, k) == 1 for every 2 <= k <= g.
bool coprimality_check(const Integer& degree, std::size_t g);

/// Subadditivity of essential dimension under fiber products.
std::size_t ed_upper_fiber_product(std::size_t e1, std::size_t e2);

/// A finite abelian cover with group G has essential dimension at most rank(G).
std::size_t ed_upper_abelian_cover(const FiniteAbelianGroup& group);

/// Full report: kernel, both bounds, the exact value when certified.
EdBoundReport bound_report(const Isogeny& isogeny);

}  // namespace isoed
