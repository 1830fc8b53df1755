#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isoed/fingroup.hpp"
#include "isoed/intlinalg.hpp"

namespace isoed {

/// Abelian subvariety B, modeled by its saturated even-rank period sublattice.
struct Subvariety {
  std::string label;
  Lattice lattice;

  [[nodiscard]] std::size_t dim() const noexcept { return lattice.rank() / 2; }
  friend bool operator==(const Subvariety&, const Subvariety&) = default;
};

struct ProductFactor {
  std::string label;
  std::size_t dim = 0;
  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

enum class VarietyKind { Product, Custom };

/// An abelian variety of dimension g seen through its period lattice Z^{2g}.
///
/// Product instances are products of simple factors that are assumed to be
/// pairwise non-isogenous with endomorphism ring Z; their abelian subvarieties
/// are exactly the coordinate sub-products. Custom instances carry an explicit
/// list of candidate subvarieties whose completeness is asserted by the user.
class AbelianVariety {
 public:
  static AbelianVariety product(std::string label, std::vector<ProductFactor> factors);
  /// Throws OddRankSubvariety, UnsaturatedSubvariety or MalformedSpec.
  static AbelianVariety custom(std::string label, std::size_t ambient_rank, std::vector<Subvariety> subvarieties,
                               bool completeness_asserted);

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] VarietyKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  [[nodiscard]] std::size_t dim() const noexcept { return ambient_rank_ / 2; }
  [[nodiscard]] const std::vector<ProductFactor>& factors() const noexcept { return factors_; }
  [[nodiscard]] const std::vector<Subvariety>& declared_subvarieties() const noexcept { return declared_; }
  [[nodiscard]] bool completeness_asserted() const noexcept { return complete_; }

  /// First coordinate of the i-th product factor's block.
  [[nodiscard]] std::size_t factor_offset(std::size_t i) const;
  /// Unverifiable hypotheses a certificate about this variety depends on.
  [[nodiscard]] std::vector<std::string> assumptions() const;

  friend bool operator==(const AbelianVariety&, const AbelianVariety&) = default;

 private:
  AbelianVariety() = default;

  std::string label_;
  VarietyKind kind_ = VarietyKind::Product;
  std::size_t ambient_rank_ = 0;
  std::vector<ProductFactor> factors_;
  std::vector<Subvariety> declared_;
  bool complete_ = true;
};

/// Isogeny A -> A' given by an integer matrix acting on column vectors that
/// maps the period lattice of A into that of A'.
class Isogeny {
 public:
  /// Throws SingularMatrix or DimensionMismatch.
  Isogeny(std::shared_ptr<const AbelianVariety> source, std::shared_ptr<const AbelianVariety> target, IntMatrix matrix);

  [[nodiscard]] const AbelianVariety& source() const noexcept { return *source_; }
  [[nodiscard]] const AbelianVariety& target() const noexcept { return *target_; }
  [[nodiscard]] const std::shared_ptr<const AbelianVariety>& source_ptr() const noexcept { return source_; }
  [[nodiscard]] const std::shared_ptr<const AbelianVariety>& target_ptr() const noexcept { return target_; }
  [[nodiscard]] const IntMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const Integer& degree() const noexcept { return degree_; }

 private:
  std::shared_ptr<const AbelianVariety> source_;
  std::shared_ptr<const AbelianVariety> target_;
  IntMatrix matrix_;
  Integer degree_;
};

struct SubvarietyFamily {
  std::vector<Subvariety> members;
  bool complete = false;
};

/// Multiplication by m on A. Throws InvalidMultiplier for m <= 0.
Isogeny mult_by_m(std::shared_ptr<const AbelianVariety> variety, const Integer& m);

FiniteAbelianGroup kernel(const Isogeny& isogeny);

/// All coordinate sub-products for Product kind (complete); declared list plus 0 and A for Custom kind.
SubvarietyFamily enumerate_subvarieties(const AbelianVariety& variety);

/// Sub-product spanned by the factors whose bits are set in `mask`.
Subvariety sub_product(const AbelianVariety& variety, std::uint64_t mask);

/// ker(alpha) intersected with B. Throws ForeignSubvariety.
FiniteAbelianGroup kernel_intersect(const Isogeny& isogeny, const Subvariety& sub);

/// beta o alpha. Throws IncompatibleComposition.
Isogeny compose(const Isogeny& beta, const Isogeny& alpha);

}  // namespace isoed
