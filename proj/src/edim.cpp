#include "isoed/edim.hpp"

#include <algorithm>

#include "isoed/error.hpp"

namespace isoed {

namespace {

bool better_minimizer(std::size_t value, const Subvariety& cand, std::size_t best_value, const Subvariety& best) {
  if (value != best_value) return value < best_value;
  if (cand.dim() != best.dim()) return cand.dim() < best.dim();
  return cand.label < best.label;
}

UpperBound upper_from_table(std::span<const SubvarietyBound> table, std::size_t dim_a, std::size_t ambient_rank) {
  // B = 0 realizes the trivial cap dim A; start from it so the cap holds for any family.
  UpperBound best{dim_a, Subvariety{"0", Lattice::zero(ambient_rank)}};
  for (const auto& row : table)
    if (better_minimizer(row.upper_value, row.sub, best.value, best.minimizer))
      best = {row.upper_value, row.sub};
  return best;
}

}  // namespace

std::vector<SubvarietyBound> bound_table(const Isogeny& isogeny, std::span<const Subvariety> family) {
  const std::size_t dim_a = isogeny.source().dim();
  const auto primes = prime_divisors(isogeny.degree());
  std::vector<SubvarietyBound> table;
  table.reserve(family.size());
  for (const auto& sub : family) {
    SubvarietyBound row{sub, kernel_intersect(isogeny, sub), {}, {}, 0};
    const Rational base(static_cast<long>(dim_a - sub.dim()));
    row.lower_value = base;
    for (const auto& p : primes) {
      const std::size_t rp = rank_p(row.intersection, p);
      Rational value = base + Rational(Integer(p - 1), p) * static_cast<long>(rp);
      value.canonicalize();
      row.lower_value = std::max(row.lower_value, value);
      row.terms.push_back({p, rp, std::move(value)});
    }
    row.upper_value = dim_a - sub.dim() + rank(row.intersection);
    table.push_back(std::move(row));
  }
  return table;
}

LowerBound lower_bound(const Isogeny& isogeny) {
  const auto family = enumerate_subvarieties(isogeny.source());
  if (!family.complete)
    throw Error(ErrorCode::Uncertified, "subvariety enumeration of '" + isogeny.source().label() +
                                            "' is not complete; a minimum over part of the family is no lower bound");
  LowerBound result;
  result.table = bound_table(isogeny, family.members);
  result.raw_min = result.table.front().lower_value;
  for (const auto& row : result.table) result.raw_min = std::min(result.raw_min, row.lower_value);
  // The ceiling is taken once, after the minimum: ed is an integer >= raw_min.
  result.value = ceil_of(result.raw_min).get_ui();
  return result;
}

UpperBound upper_bound(const Isogeny& isogeny) {
  const auto family = enumerate_subvarieties(isogeny.source());
  return upper_bound(isogeny, family.members);
}

UpperBound upper_bound(const Isogeny& isogeny, std::span<const Subvariety> family) {
  const auto table = bound_table(isogeny, family);
  return upper_from_table(table, isogeny.source().dim(), isogeny.source().ambient_rank());
}

ExactValue exact_ed(const Isogeny& isogeny) {
  const std::size_t dim_a = isogeny.source().dim();
  if (!coprimality_check(isogeny.degree(), dim_a))
    throw Error(ErrorCode::CoprimalityFails,
                "degree " + to_string(isogeny.degree()) + " is not coprime to " + std::to_string(dim_a) + "!");
  LowerBound lower = lower_bound(isogeny);
  UpperBound upper = upper_from_table(lower.table, dim_a, isogeny.source().ambient_rank());
  if (lower.value != upper.value)
    throw Error(ErrorCode::InternalInconsistency, "lower bound " + std::to_string(lower.value) +
                                                      " differs from upper bound " + std::to_string(upper.value) +
                                                      " under the coprimality hypothesis");
  return {upper.value, std::move(upper.minimizer), std::move(lower)};
}

Incompressibility is_incompressible(const Isogeny& isogeny) {
  LowerBound lower = lower_bound(isogeny);
  const bool flag = lower.value == isogeny.source().dim();
  return {flag, std::move(lower)};
}

bool coprimality_check(const Integer& degree, std::size_t g) {
  for (unsigned long k = 2; k <= g; ++k)
    if (gcd_of(degree, Integer(k)) != 1) return false;
  return true;
}

std::size_t ed_upper_fiber_product(std::size_t e1, std::size_t e2) { return e1 + e2; }

std::size_t ed_upper_abelian_cover(const FiniteAbelianGroup& group) { return rank(group); }

EdBoundReport bound_report(const Isogeny& isogeny) {
  const auto& source = isogeny.source();
  const auto family = enumerate_subvarieties(source);
  EdBoundReport report;
  report.dim = source.dim();
  report.degree = isogeny.degree();
  report.kernel = kernel(isogeny);
  report.table = bound_table(isogeny, family.members);
  report.enumeration_complete = family.complete;
  report.coprimality = coprimality_check(isogeny.degree(), source.dim());
  report.assumptions = source.assumptions();

  auto upper = upper_from_table(report.table, source.dim(), source.ambient_rank());
  report.upper = upper.value;
  report.upper_witness = std::move(upper.minimizer);

  if (family.complete) {
    Rational raw = report.table.front().lower_value;
    for (const auto& row : report.table) raw = std::min(raw, row.lower_value);
    report.lower_raw = raw;
    report.lower = ceil_of(raw).get_ui();
    if (*report.lower > report.upper)
      throw Error(ErrorCode::InternalInconsistency, "certified lower bound exceeds upper bound");
    if (report.coprimality) {
      if (*report.lower != report.upper)
        throw Error(ErrorCode::InternalInconsistency, "bounds disagree under the coprimality hypothesis");
      report.exact = report.upper;
    }
  }
  return report;
}

}  // namespace isoed
