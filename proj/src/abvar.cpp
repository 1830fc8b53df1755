#include "isoed/abvar.hpp"

#include <algorithm>
#include <numeric>

#include "isoed/error.hpp"

namespace isoed {

namespace {

constexpr std::size_t kMaxProductFactors = 20;

std::string join_labels(const std::vector<ProductFactor>& factors, std::uint64_t mask) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((mask >> i & 1U) == 0) continue;
    if (!s.empty()) s += '*';
    s += factors[i].label;
  }
  return s;
}

}  // namespace

AbelianVariety AbelianVariety::product(std::string label, std::vector<ProductFactor> factors) {
  if (factors.empty()) throw Error(ErrorCode::MalformedSpec, "product variety needs at least one factor");
  if (factors.size() > kMaxProductFactors)
    throw Error(ErrorCode::MalformedSpec, "at most " + std::to_string(kMaxProductFactors) + " product factors supported");
  std::size_t g = 0;
  for (const auto& f : factors) {
    if (f.dim == 0) throw Error(ErrorCode::MalformedSpec, "factor '" + f.label + "' has dimension 0");
    g += f.dim;
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].label == factors[j].label)
        throw Error(ErrorCode::MalformedSpec, "duplicate factor label '" + factors[i].label + "'");
  AbelianVariety v;
  v.label_ = std::move(label);
  v.kind_ = VarietyKind::Product;
  v.ambient_rank_ = 2 * g;
  v.factors_ = std::move(factors);
  v.complete_ = true;
  return v;
}

AbelianVariety AbelianVariety::custom(std::string label, std::size_t ambient_rank, std::vector<Subvariety> subvarieties,
                                      bool completeness_asserted) {
  if (ambient_rank < 2 || ambient_rank % 2 != 0)
    throw Error(ErrorCode::MalformedSpec, "ambient rank must be even and at least 2");
  for (const auto& s : subvarieties) {
    if (s.lattice.ambient_rank() != ambient_rank)
      throw Error(ErrorCode::MalformedSpec, "subvariety '" + s.label + "' has wrong ambient rank");
    if (s.lattice.rank() % 2 != 0)
      throw Error(ErrorCode::OddRankSubvariety, "subvariety '" + s.label + "' has odd rank " + std::to_string(s.lattice.rank()));
    if (!s.lattice.is_saturated())
      throw Error(ErrorCode::UnsaturatedSubvariety, "subvariety '" + s.label + "' is not a saturated sublattice");
    const bool trivial = s.lattice.rank() == 0 || s.lattice.rank() == ambient_rank;
    if ((s.label == "0" || s.label == "A") && !trivial)
      throw Error(ErrorCode::MalformedSpec, "labels '0' and 'A' are reserved for the trivial subvarieties");
  }
  for (std::size_t i = 0; i < subvarieties.size(); ++i)
    for (std::size_t j = i + 1; j < subvarieties.size(); ++j) {
      if (subvarieties[i].lattice == subvarieties[j].lattice)
        throw Error(ErrorCode::MalformedSpec, "subvarieties '" + subvarieties[i].label + "' and '" + subvarieties[j].label +
                                                  "' coincide");
      if (subvarieties[i].label == subvarieties[j].label)
        throw Error(ErrorCode::MalformedSpec, "duplicate subvariety label '" + subvarieties[i].label + "'");
    }
  AbelianVariety v;
  v.label_ = std::move(label);
  v.kind_ = VarietyKind::Custom;
  v.ambient_rank_ = ambient_rank;
  v.declared_ = std::move(subvarieties);
  v.complete_ = completeness_asserted;
  return v;
}

std::size_t AbelianVariety::factor_offset(std::size_t i) const {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < i; ++k) offset += 2 * factors_.at(k).dim;
  return offset;
}

std::vector<std::string> AbelianVariety::assumptions() const {
  if (kind_ == VarietyKind::Product) {
    std::vector<std::string> out;
    out.emplace_back("product factors are simple, pairwise non-isogenous, with endomorphism ring Z (declared, not verified)");
    out.emplace_back("abelian subvarieties are exactly the coordinate sub-products");
    return out;
  }
  if (complete_) return {"declared subvariety list together with 0 and A is asserted to be all abelian subvarieties"};
  return {"declared subvariety list is not asserted complete; lower bounds are refused"};
}

Isogeny::Isogeny(std::shared_ptr<const AbelianVariety> source, std::shared_ptr<const AbelianVariety> target,
                 IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_->ambient_rank() != target_->ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "source and target have different dimensions");
  if (matrix_.rows() != source_->ambient_rank() || matrix_.cols() != source_->ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "isogeny matrix must be " + std::to_string(source_->ambient_rank()) + "x" +
                                                  std::to_string(source_->ambient_rank()));
  degree_ = abs(matrix_.determinant());
  if (degree_ == 0) throw Error(ErrorCode::SingularMatrix, "isogeny matrix has determinant 0");
}

Isogeny mult_by_m(std::shared_ptr<const AbelianVariety> variety, const Integer& m) {
  if (m <= 0) throw Error(ErrorCode::InvalidMultiplier, "multiplier must be at least 1, got " + to_string(m));
  auto n = variety->ambient_rank();
  return Isogeny(variety, variety, IntMatrix::scalar(n, m));
}

FiniteAbelianGroup kernel(const Isogeny& isogeny) {
  // ker = m^{-1} Z^{2g} / Z^{2g}, isomorphic to Z^{2g} / m Z^{2g}.
  return normalize(smith_normal_form(isogeny.matrix()).invariant_factors);
}

Subvariety sub_product(const AbelianVariety& variety, std::uint64_t mask) {
  const auto& factors = variety.factors();
  const std::size_t n = variety.ambient_rank();
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((mask >> i & 1U) == 0) continue;
    const std::size_t offset = variety.factor_offset(i);
    for (std::size_t c = 0; c < 2 * factors[i].dim; ++c) coords.push_back(offset + c);
  }
  IntMatrix gens(coords.size(), n);
  for (std::size_t r = 0; r < coords.size(); ++r) gens(r, coords[r]) = 1;
  const std::uint64_t full = factors.size() == 64 ? ~0ULL : (1ULL << factors.size()) - 1;
  std::string label = mask == 0 ? "0" : (mask == full ? "A" : join_labels(factors, mask));
  return {std::move(label), Lattice::from_generators(n, gens)};
}

SubvarietyFamily enumerate_subvarieties(const AbelianVariety& variety) {
  SubvarietyFamily family;
  const std::size_t n = variety.ambient_rank();
  if (variety.kind() == VarietyKind::Product) {
    const std::uint64_t count = 1ULL << variety.factors().size();
    family.members.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) family.members.push_back(sub_product(variety, mask));
    family.complete = true;
    return family;
  }
  family.members.push_back({"0", Lattice::zero(n)});
  for (const auto& s : variety.declared_subvarieties()) {
    if (s.lattice.rank() == 0 || s.lattice.rank() == n) continue;
    family.members.push_back(s);
  }
  family.members.push_back({"A", Lattice::standard(n)});
  family.complete = variety.completeness_asserted();
  return family;
}

FiniteAbelianGroup kernel_intersect(const Isogeny& isogeny, const Subvariety& sub) {
  const std::size_t n = isogeny.source().ambient_rank();
  if (sub.lattice.ambient_rank() != n)
    throw Error(ErrorCode::ForeignSubvariety, "subvariety '" + sub.label + "' does not live in the source variety");
  if (sub.lattice.rank() == 0) return {};
  // f^{-1}(Z^{2g}) lies in (1/deg) Z^{2g}, and Q B meets (1/deg) Z^{2g} in (1/deg) L_B because L_B is saturated.
  const Lattice preimage = preimage_lattice(isogeny.matrix(), Lattice::standard(n));
  const Lattice scaled_b = Lattice::from_generators(n, sub.lattice.basis(), isogeny.degree());
  return lattice_quotient(lattice_intersect(preimage, scaled_b), sub.lattice);
}

Isogeny compose(const Isogeny& beta, const Isogeny& alpha) {
  if (!(alpha.target() == beta.source()))
    throw Error(ErrorCode::IncompatibleComposition, "target of the first isogeny is not the source of the second");
  return Isogeny(alpha.source_ptr(), beta.target_ptr(), beta.matrix() * alpha.matrix());
}

}  // namespace isoed
