#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoed/fingroup.hpp"
#include "isoed/integer.hpp"

namespace isoed {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix with zero rows is allowed so that the zero lattice can carry an
/// empty basis; every other operation expects at least one row and column.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& value);
  /// Builds a matrix from nested rows; throws DimensionMismatch on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] IntMatrix transposed() const;
  [[nodiscard]] bool is_zero() const;
  /// Fraction-free (Bareiss) determinant. Requires a square matrix.
  [[nodiscard]] Integer determinant() const;
  /// Classical adjugate: adj(M) * M = det(M) * I.
  [[nodiscard]] IntMatrix adjugate() const;
  [[nodiscard]] IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  [[nodiscard]] std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SnfResult {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // S = U * M * V
  IntMatrix right;     // V, unimodular
  /// Nonzero diagonal entries of S, positive, each dividing the next.
  std::vector<Integer> invariant_factors;
};

/// Smith normal form by repeated minimal-pivot row and column reduction.
SnfResult smith_normal_form(const IntMatrix& m);

/// d_k = gcd of all k x k minors for k = 1..min(rows, cols); 0 when they all vanish.
/// Exponential in the matrix size; meant as an independent check on SNF.
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

/// Row Hermite normal form with the zero rows removed. When `transform` is
/// non-null it receives a unimodular T with T * m = [H; 0].
IntMatrix hermite_normal_form(const IntMatrix& m, IntMatrix* transform = nullptr);

/// Z-lattice (1/denominator) * rowspan(basis) inside Q^ambient_rank.
///
/// The basis is kept in row Hermite normal form and the content of the
/// basis is cancelled against the denominator, so equal lattices have equal
/// representations. The zero lattice has rank 0 and an empty basis.
class Lattice {
 public:
  /// Placeholder with ambient rank 0; use the factories for real lattices.
  Lattice() = default;

  /// Lattice generated by the rows of `generators` (which may be dependent), scaled by 1/denominator.
  static Lattice from_generators(std::size_t ambient_rank, const IntMatrix& generators, const Integer& denominator = 1);
  static Lattice standard(std::size_t ambient_rank);
  static Lattice zero(std::size_t ambient_rank);

  [[nodiscard]] std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.rows(); }
  [[nodiscard]] const IntMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const Integer& denominator() const noexcept { return denominator_; }

  /// Is numerator / denominator an element of this lattice?
  [[nodiscard]] bool contains(std::span<const Integer> numerator, const Integer& denominator = 1) const;
  [[nodiscard]] bool contains(const Lattice& sub) const;
  /// Coordinates of numerator / denominator in the stored basis, if it is a lattice vector.
  [[nodiscard]] std::optional<std::vector<Integer>> coordinates(std::span<const Integer> numerator,
                                                                const Integer& denominator = 1) const;
  [[nodiscard]] bool is_saturated() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(std::size_t ambient_rank, IntMatrix basis, Integer denominator)
      : ambient_rank_(ambient_rank), basis_(std::move(basis)), denominator_(std::move(denominator)) {}

  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
  Integer denominator_ = 1;
};

/// Q-span(L) intersected with Z^n.
Lattice saturate(const Lattice& lattice);

Lattice lattice_intersect(const Lattice& lhs, const Lattice& rhs);

Lattice lattice_sum(const Lattice& lhs, const Lattice& rhs);

/// sup / sub as a finite abelian group. Throws NotASublattice or InfiniteQuotient.
FiniteAbelianGroup lattice_quotient(const Lattice& sup, const Lattice& sub);

/// { x : m * x in target } for column vectors x. Throws SingularMatrix.
Lattice preimage_lattice(const IntMatrix& m, const Lattice& target);

}  // namespace isoed
