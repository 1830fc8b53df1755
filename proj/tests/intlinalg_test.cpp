#include "doctest.h"

#include "isoed/error.hpp"
#include "isoed/intlinalg.hpp"
#include "isoed/sampling.hpp"
#include "test_util.hpp"

using namespace isoed;

namespace {

void check_snf_certificate(const IntMatrix& m, const SnfResult& snf) {
  CHECK(snf.left * m * snf.right == snf.diagonal);
  CHECK(abs(snf.left.determinant()) == 1);
  CHECK(abs(snf.right.determinant()) == 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(snf.diagonal(i, j) == 0);
  for (std::size_t k = 1; k < snf.invariant_factors.size(); ++k)
    CHECK(snf.invariant_factors[k] % snf.invariant_factors[k - 1] == 0);
}

}  // namespace

TEST_SUITE("intlinalg") {
  TEST_CASE("smith normal form of small matrices") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}).invariant_factors == ints({2, 2}));
    CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 6}}).invariant_factors == ints({1, 6}));
    // Hand oracle: d1 = gcd(2,4,6,8) = 2, d2 = |16 - 24| = 8, so factors 2 and 8/2.
    const IntMatrix m{{2, 4}, {6, 8}};
    const auto snf = smith_normal_form(m);
    CHECK(snf.invariant_factors == ints({2, 4}));
    check_snf_certificate(m, snf);
  }

  TEST_CASE("smith normal form regroups a non-chain diagonal") {
    const IntMatrix m{{4, 0}, {0, 6}};
    const auto snf = smith_normal_form(m);
    CHECK(snf.invariant_factors == ints({2, 12}));
    check_snf_certificate(m, snf);
  }

  TEST_CASE("smith normal form of rectangular and singular matrices") {
    const IntMatrix wide{{2, 4, 6}, {4, 8, 12}};
    const auto snf = smith_normal_form(wide);
    CHECK(snf.invariant_factors == ints({2}));
    check_snf_certificate(wide, snf);

    const IntMatrix zero(2, 3);
    CHECK(smith_normal_form(zero).invariant_factors.empty());
  }

  TEST_CASE("determinantal divisors") {
    CHECK(determinantal_divisors(IntMatrix{{2, 0}, {0, 2}}) == ints({2, 4}));
    CHECK(determinantal_divisors(IntMatrix{{2, 4}, {6, 8}}) == ints({2, 8}));
    CHECK(determinantal_divisors(IntMatrix(2, 2)) == ints({0, 0}));
  }

  TEST_CASE("snf agrees with determinantal divisors on random matrices") {
    sampling::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
      const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
      const IntMatrix m = sampling::random_matrix(rng, rows, cols, 20);
      const auto snf = smith_normal_form(m);
      check_snf_certificate(m, snf);

      // Both sides compared against the test-only Laplace-expansion oracle.
      const auto oracle = brute::determinantal_divisors(to_brute(m));
      const auto dd = determinantal_divisors(m);
      REQUIRE(dd.size() == oracle.size());
      for (std::size_t k = 0; k < dd.size(); ++k) {
        CHECK(dd[k] == oracle[k]);
        if (k < snf.invariant_factors.size()) {
          const Integer prev = k == 0 ? Integer(1) : dd[k - 1];
          CHECK(dd[k] == prev * snf.invariant_factors[k]);
        } else {
          CHECK(dd[k] == 0);
        }
      }
      if (m.is_square() && m.determinant() != 0) {
        Integer product = 1;
        for (const auto& s : snf.invariant_factors) product *= s;
        CHECK(product == abs(m.determinant()));
      }
    }
  }

  TEST_CASE("determinant and adjugate") {
    const IntMatrix m{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
    CHECK(m.determinant() == brute::det(to_brute(m)));
    CHECK(m.adjugate() * m == IntMatrix::scalar(3, m.determinant()));
    CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
  }

  TEST_CASE("lattice canonical form makes equal lattices compare equal") {
    const auto a = lattice(2, IntMatrix{{1, 1}, {0, 2}});
    const auto b = lattice(2, IntMatrix{{1, -1}, {3, 1}, {0, 2}});
    CHECK(a == b);
    CHECK(a.rank() == 2);
    const auto half = lattice(2, IntMatrix{{2, 0}, {0, 2}}, 4);
    CHECK(half == lattice(2, IntMatrix::identity(2), 2));
    CHECK(Lattice::zero(3).rank() == 0);
  }

  TEST_CASE("saturate") {
    CHECK(saturate(lattice(2, IntMatrix{{2, 0}})) == lattice(2, IntMatrix{{1, 0}}));
    CHECK(saturate(lattice(2, IntMatrix{{1, 1}})) == lattice(2, IntMatrix{{1, 1}}));
    CHECK(saturate(lattice(2, IntMatrix{{2, 2}, {0, 4}})) == Lattice::standard(2));
    CHECK(saturate(Lattice::zero(2)) == Lattice::zero(2));
  }

  TEST_CASE("saturate is idempotent and keeps the rational span") {
    sampling::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
      const auto l = lattice(n, sampling::random_matrix(rng, r, n, 9));
      const auto s = saturate(l);
      CHECK(s.rank() == l.rank());
      CHECK(s.is_saturated());
      CHECK(saturate(s) == s);
      CHECK(s.contains(l));
      // Mutual containment after scaling: the index of l in s kills s.
      if (l.rank() > 0) {
        const Integer index = lattice_quotient(s, l).order();
        CHECK(l.contains(lattice(n, s.basis() * IntMatrix::scalar(n, index))));
      }
    }
  }

  TEST_CASE("lattice intersection") {
    const auto l = lattice(2, IntMatrix{{1, 2}, {0, 3}});
    CHECK(lattice_intersect(l, l) == l);
    CHECK(lattice_intersect(lattice(2, IntMatrix{{1, 0}}), lattice(2, IntMatrix{{0, 1}})).rank() == 0);
    CHECK(lattice_intersect(lattice(2, IntMatrix::scalar(2, 2)), lattice(2, IntMatrix::scalar(2, 3))) ==
          lattice(2, IntMatrix::scalar(2, 6)));
  }

  TEST_CASE("lattice intersection matches a bounded-box enumeration") {
    sampling::Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = lattice(2, sampling::random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 2)), 2, 4),
                             rng.uniform(1, 3));
      const auto b = lattice(2, sampling::random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 2)), 2, 4),
                             rng.uniform(1, 3));
      const auto both = lattice_intersect(a, b);
      CHECK(both == lattice_intersect(b, a));
      CHECK(a.contains(both));
      CHECK(b.contains(both));
      // Vectors x/6 with |x_i| <= 30 cover every denominator used above.
      for (long x = -30; x <= 30; ++x)
        for (long y = -30; y <= 30; ++y) {
          const auto v = ints({x, y});
          CHECK(both.contains(v, 6) == (a.contains(v, 6) && b.contains(v, 6)));
        }
    }
  }

  TEST_CASE("lattice quotient") {
    CHECK(lattice_quotient(Lattice::standard(2), lattice(2, IntMatrix::scalar(2, 2))) ==
          FiniteAbelianGroup::from_factors({2, 2}));
    CHECK(lattice_quotient(Lattice::standard(2), lattice(2, IntMatrix{{1, 0}, {0, 6}})) ==
          FiniteAbelianGroup::from_factors({6}));
    CHECK(lattice_quotient(Lattice::standard(2), lattice(2, IntMatrix{{2, 4}, {6, 8}})) ==
          FiniteAbelianGroup::from_factors({2, 4}));
    CHECK(lattice_quotient(Lattice::zero(3), Lattice::zero(3)).is_trivial());
  }

  TEST_CASE("lattice quotient errors") {
    try {
      (void)lattice_quotient(lattice(2, IntMatrix::scalar(2, 2)), Lattice::standard(2));
      FAIL("expected NotASublattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotASublattice);
    }
    try {
      (void)lattice_quotient(Lattice::standard(2), lattice(2, IntMatrix{{1, 0}}));
      FAIL("expected InfiniteQuotient");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteQuotient);
    }
  }

  TEST_CASE("quotient of Z^n by M Z^n has order |det M|") {
    sampling::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
      const IntMatrix m = sampling::random_nonsingular(rng, n, 8);
      // Columns of M span M Z^n; as rows that is M^T.
      CHECK(lattice_quotient(Lattice::standard(n), lattice(n, m.transposed())).order() == abs(m.determinant()));
    }
  }

  TEST_CASE("preimage lattice") {
    CHECK(preimage_lattice(IntMatrix::scalar(2, 2), Lattice::standard(2)) == lattice(2, IntMatrix::identity(2), 2));
    const auto l = lattice(2, IntMatrix{{1, 2}, {0, 5}});
    CHECK(preimage_lattice(IntMatrix::identity(2), l) == l);
    // Solve diag(1, 6) x in Z^2 coordinatewise: x = (a, b/6).
    CHECK(preimage_lattice(IntMatrix{{1, 0}, {0, 6}}, Lattice::standard(2)) == lattice(2, IntMatrix{{6, 0}, {0, 1}}, 6));
    try {
      (void)preimage_lattice(IntMatrix{{1, 2}, {2, 4}}, Lattice::standard(2));
      FAIL("expected SingularMatrix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularMatrix);
    }
  }

  TEST_CASE("preimage lattice contains the source and maps into the target") {
    sampling::Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix m = sampling::random_nonsingular(rng, 3, 5);
      const auto pre = preimage_lattice(m, Lattice::standard(3));
      CHECK(pre.contains(Lattice::standard(3)));
      CHECK(lattice_quotient(pre, Lattice::standard(3)).order() == abs(m.determinant()));
      for (std::size_t r = 0; r < pre.rank(); ++r) {
        std::vector<Integer> image(3);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) image[i] += m(i, j) * pre.basis()(r, j);
        CHECK(Lattice::standard(3).contains(image, pre.denominator()));
      }
    }
  }
}
