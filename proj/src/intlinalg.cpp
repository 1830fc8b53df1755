#include "isoed/intlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "isoed/error.hpp"

namespace isoed {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& value) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has wrong length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::adjugate() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of a non-square matrix");
  const std::size_t n = rows_;
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> ri(n - 1), ci(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0, w = 0; k < n; ++k)
        if (k != i) ri[w++] = k;
      for (std::size_t k = 0, w = 0; k < n; ++k)
        if (k != j) ci[w++] = k;
      Integer minor = submatrix(ri, ci).determinant();
      // adj(M)(j, i) is the (i, j) cofactor.
      adj(j, i) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
    }
  }
  return adj;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) s(r, c) = (*this)(row_idx[r], col_idx[c]);
  return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (auto& x : row(r)) x = -x;
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Quotient rounded toward zero; keeps |a - q*b| < |b|.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct SnfState {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inv;
  bool track_inverse = false;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    if (track_inverse) v_inv.swap_rows(i, j);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
  }
  // col[dst] += k * col[src]; V <- V E, V^{-1} <- E^{-1} V^{-1}
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    if (track_inverse) v_inv.add_row_multiple(src, dst, Integer(-k));
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    u.negate_row(r);
  }
};

SnfState run_snf(const IntMatrix& m, bool track_inverse) {
  SnfState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
              track_inverse ? IntMatrix::identity(m.cols()) : IntMatrix{}, track_inverse};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  auto& a = st.a;

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Pivot: nonzero entry of minimal absolute value in the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!pivot || abs(a(i, j)) < abs(a(pivot->first, pivot->second))) pivot = {i, j};
        }
      if (!pivot) return st;
      st.swap_rows(t, pivot->first);
      st.swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        st.add_row(i, t, Integer(-tdiv(a(i, t), a(t, t))));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        st.add_col(j, t, Integer(-tdiv(a(t, j), a(t, t))));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility on the trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      st.add_row(t, *offending, 1);
    }
    if (a(t, t) < 0) st.negate_row(t);
  }
  return st;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfState st = run_snf(m, false);
  SnfResult result{std::move(st.u), std::move(st.a), std::move(st.v), {}};
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
    if (result.diagonal(t, t) != 0) result.invariant_factors.push_back(result.diagonal(t, t));
  return result;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<Integer> divisors;
  divisors.reserve(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    std::vector<bool> row_mask(m.rows(), false), col_mask(m.cols(), false);
    std::fill(row_mask.begin(), row_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<std::size_t> ri(k), ci(k);
    do {
      for (std::size_t i = 0, w = 0; i < m.rows(); ++i)
        if (row_mask[i]) ri[w++] = i;
      std::fill(col_mask.begin(), col_mask.end(), false);
      std::fill(col_mask.begin(), col_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        for (std::size_t j = 0, w = 0; j < m.cols(); ++j)
          if (col_mask[j]) ci[w++] = j;
        g = gcd_of(g, m.submatrix(ri, ci).determinant());
      } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
    } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
    divisors.push_back(g);
  }
  return divisors;
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntMatrix hermite_normal_form(const IntMatrix& m, IntMatrix* transform) {
  IntMatrix a = m;
  IntMatrix t = transform ? IntMatrix::identity(m.rows()) : IntMatrix{};
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (transform) t.swap_rows(i, j);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    if (transform) t.add_row_multiple(dst, src, k);
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = row; i < m.rows(); ++i) {
        if (a(i, col) == 0) continue;
        if (!pivot || abs(a(i, col)) < abs(a(*pivot, col))) pivot = i;
      }
      if (!pivot) break;
      swap_rows(row, *pivot);
      bool done = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        if (a(i, col) == 0) continue;
        add_row(i, row, Integer(-tdiv(a(i, col), a(row, col))));
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      a.negate_row(row);
      if (transform) t.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) add_row(i, row, Integer(-fdiv(a(i, col), a(row, col))));
    ++row;
  }

  if (transform) *transform = std::move(t);
  IntMatrix h(row, m.cols());
  for (std::size_t i = 0; i < row; ++i) std::copy(a.row(i).begin(), a.row(i).end(), h.row(i).begin());
  return h;
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

void require_same_ambient(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "lattices live in different ambient spaces");
}

IntMatrix scaled(const IntMatrix& m, const Integer& k) {
  IntMatrix s = m;
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (auto& x : s.row(r)) x *= k;
  return s;
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  IntMatrix s(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::copy(top.row(r).begin(), top.row(r).end(), s.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), s.row(top.rows() + r).begin());
  return s;
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient_rank, const IntMatrix& generators, const Integer& denominator) {
  if (ambient_rank == 0) throw Error(ErrorCode::DimensionMismatch, "ambient rank must be positive");
  if (generators.rows() > 0 && generators.cols() != ambient_rank)
    throw Error(ErrorCode::DimensionMismatch, "generator length differs from ambient rank");
  if (denominator <= 0) throw Error(ErrorCode::DimensionMismatch, "lattice denominator must be positive");
  IntMatrix h = generators.rows() == 0 ? IntMatrix(0, ambient_rank) : hermite_normal_form(generators);
  if (h.rows() == 0) return Lattice(ambient_rank, IntMatrix(0, ambient_rank), 1);

  Integer content = denominator;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (const auto& x : h.row(r)) content = gcd_of(content, x);
  if (content != 1) {
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (auto& x : h.row(r)) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return Lattice(ambient_rank, std::move(h), denominator / content);
}

Lattice Lattice::standard(std::size_t ambient_rank) {
  return from_generators(ambient_rank, IntMatrix::identity(ambient_rank));
}

Lattice Lattice::zero(std::size_t ambient_rank) { return from_generators(ambient_rank, IntMatrix(0, ambient_rank)); }

std::optional<std::vector<Integer>> Lattice::coordinates(std::span<const Integer> numerator,
                                                         const Integer& denominator) const {
  if (numerator.size() != ambient_rank_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient rank");
  // numerator/denominator = c * basis / denominator_  <=>  numerator * denominator_ / denominator = c * basis
  std::vector<Integer> v(numerator.begin(), numerator.end());
  for (auto& x : v) {
    x *= denominator_;
    if (x % denominator != 0) return std::nullopt;
    x /= denominator;
  }
  std::vector<Integer> coeffs(rank());
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank(); ++r) {
    while (basis_(r, col) == 0) {
      if (v[col] != 0) return std::nullopt;
      ++col;
    }
    const Integer& piv = basis_(r, col);
    if (v[col] % piv != 0) return std::nullopt;
    Integer q = v[col] / piv;
    for (std::size_t c = col; c < ambient_rank_; ++c) v[c] -= q * basis_(r, c);
    coeffs[r] = std::move(q);
  }
  if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(std::span<const Integer> numerator, const Integer& denominator) const {
  return coordinates(numerator, denominator).has_value();
}

bool Lattice::contains(const Lattice& sub) const {
  require_same_ambient(*this, sub);
  for (std::size_t r = 0; r < sub.rank(); ++r)
    if (!contains(sub.basis().row(r), sub.denominator())) return false;
  return true;
}

bool Lattice::is_saturated() const {
  if (denominator_ != 1) return false;
  if (rank() == 0) return true;
  const auto snf = smith_normal_form(basis_);
  return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(), [](const Integer& s) { return s == 1; });
}

std::string Lattice::to_string() const {
  std::string s = "Lattice(ambient=" + std::to_string(ambient_rank_) + ", rank=" + std::to_string(rank());
  if (denominator_ != 1) s += ", denominator=" + denominator_.get_str();
  s += ", basis=" + basis_.to_string() + ")";
  return s;
}

Lattice saturate(const Lattice& lattice) {
  if (lattice.rank() == 0) return Lattice::zero(lattice.ambient_rank());
  // B = U^{-1} S V^{-1}: the first r rows of V^{-1} span Q B and extend to a unimodular basis.
  const SnfState st = run_snf(lattice.basis(), true);
  const std::size_t r = lattice.rank();
  IntMatrix gens(r, lattice.ambient_rank());
  for (std::size_t i = 0; i < r; ++i) std::copy(st.v_inv.row(i).begin(), st.v_inv.row(i).end(), gens.row(i).begin());
  return Lattice::from_generators(lattice.ambient_rank(), gens);
}

Lattice lattice_intersect(const Lattice& lhs, const Lattice& rhs) {
  require_same_ambient(lhs, rhs);
  const std::size_t n = lhs.ambient_rank();
  if (lhs.rank() == 0 || rhs.rank() == 0) return Lattice::zero(n);
  const Integer common = lcm_of(lhs.denominator(), rhs.denominator());
  const IntMatrix b1 = scaled(lhs.basis(), common / lhs.denominator());
  const IntMatrix b2 = scaled(rhs.basis(), common / rhs.denominator());

  // x*B1 + y*B2 = 0 gives x*B1 in both lattices; the left kernel of [B1; B2] is read off the HNF transform.
  IntMatrix transform;
  const IntMatrix h = hermite_normal_form(stack(b1, b2), &transform);
  const std::size_t total = b1.rows() + b2.rows();
  IntMatrix gens(total - h.rows(), n);
  for (std::size_t k = h.rows(); k < total; ++k)
    for (std::size_t i = 0; i < b1.rows(); ++i) {
      const Integer& coeff = transform(k, i);
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < n; ++c) gens(k - h.rows(), c) += coeff * b1(i, c);
    }
  return Lattice::from_generators(n, gens, common);
}

Lattice lattice_sum(const Lattice& lhs, const Lattice& rhs) {
  require_same_ambient(lhs, rhs);
  const Integer common = lcm_of(lhs.denominator(), rhs.denominator());
  return Lattice::from_generators(lhs.ambient_rank(),
                                  stack(scaled(lhs.basis(), common / lhs.denominator()),
                                        scaled(rhs.basis(), common / rhs.denominator())),
                                  common);
}

FiniteAbelianGroup lattice_quotient(const Lattice& sup, const Lattice& sub) {
  require_same_ambient(sup, sub);
  if (!sup.contains(sub)) throw Error(ErrorCode::NotASublattice, "sublattice is not contained in the lattice");
  if (sup.rank() != sub.rank())
    throw Error(ErrorCode::InfiniteQuotient, "quotient of rank " + std::to_string(sup.rank()) + " by rank " +
                                                 std::to_string(sub.rank()) + " is infinite");
  const std::size_t r = sub.rank();
  if (r == 0) return {};
  IntMatrix change(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    auto coords = sup.coordinates(sub.basis().row(i), sub.denominator());
    std::copy(coords->begin(), coords->end(), change.row(i).begin());
  }
  return normalize(smith_normal_form(change).invariant_factors);
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& target) {
  if (!m.is_square() || m.rows() != target.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "matrix shape incompatible with target lattice");
  const Integer det = m.determinant();
  if (det == 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  // m^{-1} = adj(m) / det, so x = m^{-1} t has row form t^T adj(m)^T / det.
  const IntMatrix adj_t = m.adjugate().transposed();
  IntMatrix gens = target.rank() == 0 ? IntMatrix(0, m.cols()) : target.basis() * adj_t;
  if (det < 0) gens = scaled(gens, -1);
  return Lattice::from_generators(target.ambient_rank(), gens, target.denominator() * abs(det));
}

}  // namespace isoed
