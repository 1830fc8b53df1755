#include "doctest.h"

#include <memory>

#include "isoed/abvar.hpp"
#include "isoed/error.hpp"
#include "isoed/sampling.hpp"
#include "test_util.hpp"

using namespace isoed;

namespace {

std::shared_ptr<const AbelianVariety> product(std::initializer_list<std::size_t> dims) {
  std::vector<ProductFactor> factors;
  for (auto d : dims) factors.push_back({"E" + std::to_string(factors.size() + 1), d});
  return std::make_shared<const AbelianVariety>(AbelianVariety::product("A", factors));
}

std::shared_ptr<const AbelianVariety> simple(std::size_t g, bool complete = true) {
  return std::make_shared<const AbelianVariety>(AbelianVariety::custom("S", 2 * g, {}, complete));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::size_t> support_of(const AbelianVariety& v, std::uint64_t mask) {
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < v.factors().size(); ++i)
    if ((mask >> i & 1U) != 0)
      for (std::size_t c = 0; c < 2 * v.factors()[i].dim; ++c) coords.push_back(v.factor_offset(i) + c);
  return coords;
}

}  // namespace

TEST_SUITE("abvar") {
  TEST_CASE("build instances") {
    const auto a = product({1, 1});
    CHECK(a->ambient_rank() == 4);
    CHECK(a->dim() == 2);

    const auto s = simple(1);
    const auto fam = enumerate_subvarieties(*s);
    CHECK(fam.members.size() == 2);
    CHECK(fam.complete);
    CHECK(!enumerate_subvarieties(*simple(1, false)).complete);

    CHECK(code_of([] {
            (void)AbelianVariety::custom("X", 2, {{"B", lattice(2, IntMatrix{{2, 0}, {0, 1}})}}, true);
          }) == ErrorCode::UnsaturatedSubvariety);
    CHECK(code_of([] { (void)AbelianVariety::custom("X", 4, {{"B", lattice(4, IntMatrix{{1, 0, 0, 0}})}}, true); }) ==
          ErrorCode::OddRankSubvariety);
    CHECK(code_of([] { (void)AbelianVariety::custom("X", 3, {}, true); }) == ErrorCode::MalformedSpec);
    CHECK(code_of([] { (void)AbelianVariety::product("X", {{"E", 1}, {"E", 2}}); }) == ErrorCode::MalformedSpec);
  }

  TEST_CASE("multiplication by m") {
    const auto e = product({1});
    const auto one = mult_by_m(e, 1);
    CHECK(one.degree() == 1);
    CHECK(kernel(one).is_trivial());
    CHECK(mult_by_m(product({2}), 2).degree() == 16);
    CHECK(kernel(mult_by_m(e, 3)) == FiniteAbelianGroup::from_factors({3, 3}));
    CHECK(code_of([&] { (void)mult_by_m(e, 0); }) == ErrorCode::InvalidMultiplier);
  }

  TEST_CASE("kernel") {
    const auto e = simple(1);
    CHECK(kernel(mult_by_m(e, 2)) == FiniteAbelianGroup::from_factors({2, 2}));
    CHECK(kernel(Isogeny(e, e, IntMatrix{{1, 0}, {0, 6}})) == FiniteAbelianGroup::from_factors({6}));
    CHECK(kernel(Isogeny(e, e, IntMatrix{{2, 4}, {6, 8}})) == FiniteAbelianGroup::from_factors({2, 4}));
    CHECK(code_of([&] { (void)Isogeny(e, e, IntMatrix{{1, 2}, {2, 4}}); }) == ErrorCode::SingularMatrix);
  }

  TEST_CASE("kernel order equals degree and matches enumeration") {
    sampling::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
      const auto v = simple(static_cast<std::size_t>(rng.uniform(1, 2)));
      const IntMatrix m = sampling::random_nonsingular(rng, v->ambient_rank(), 3);
      const Isogeny alpha(v, v, m);
      const auto k = kernel(alpha);
      CHECK(k.order() == alpha.degree());
      std::vector<std::size_t> all(v->ambient_rank());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      const auto elems = brute::kernel_elements(to_brute(m), all);
      CHECK(Integer(static_cast<long>(elems.size())) == alpha.degree());
      for (long p : {2L, 3L, 5L, 7L})
        CHECK(rank_p(k, p) == brute::p_torsion_rank(elems, alpha.degree().get_si(), p));
    }
  }

  TEST_CASE("enumerate sub-products") {
    const auto fam = enumerate_subvarieties(*product({1, 1}));
    REQUIRE(fam.members.size() == 4);
    CHECK(fam.complete);
    CHECK(fam.members[0].label == "0");
    CHECK(fam.members[1].label == "E1");
    CHECK(fam.members[2].label == "E2");
    CHECK(fam.members[3].label == "A");
    for (const auto& s : fam.members) CHECK(s.lattice.is_saturated());
    CHECK(enumerate_subvarieties(*product({1, 2, 1})).members.size() == 8);
  }

  TEST_CASE("custom family keeps declared members and adds the trivial ones") {
    const Subvariety diag{"D", lattice(4, IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}})};
    const auto v = std::make_shared<const AbelianVariety>(AbelianVariety::custom("ExE", 4, {diag}, false));
    const auto fam = enumerate_subvarieties(*v);
    REQUIRE(fam.members.size() == 3);
    CHECK(fam.members[1].label == "D");
    CHECK(!fam.complete);
  }

  TEST_CASE("kernel intersect") {
    const auto a = product({1, 1});
    const auto fam = enumerate_subvarieties(*a);
    const auto m2 = mult_by_m(a, 2);
    CHECK(kernel_intersect(m2, fam.members[0]).is_trivial());
    CHECK(kernel_intersect(m2, fam.members[1]) == FiniteAbelianGroup::from_factors({2, 2}));
    CHECK(kernel_intersect(m2, fam.members[3]) == kernel(m2));

    // Cyclic kernel Z/5 supported on the E1 block.
    const Isogeny five(a, a, IntMatrix{{1, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(kernel_intersect(five, fam.members[1]) == FiniteAbelianGroup::from_factors({5}));
    CHECK(kernel_intersect(five, fam.members[2]).is_trivial());

    const auto other = product({1, 1, 1});
    CHECK(code_of([&] { (void)kernel_intersect(m2, enumerate_subvarieties(*other).members[1]); }) ==
          ErrorCode::ForeignSubvariety);
  }

  TEST_CASE("kernel intersect of m_A with B is (Z/m)^{2 dim B}") {
    const auto a = product({2, 1});
    for (long m : {2L, 3L, 6L}) {
      const auto alpha = mult_by_m(a, m);
      for (const auto& b : enumerate_subvarieties(*a).members) {
        std::vector<Integer> expected(2 * b.dim(), Integer(m));
        CHECK(kernel_intersect(alpha, b) == normalize(expected));
      }
    }
  }

  TEST_CASE("kernel intersect matches enumeration on dense matrices") {
    // Independent of block structure: count kernel points supported on the sub-product's coordinates.
    sampling::Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = product({1, 1});
      const IntMatrix m = sampling::random_nonsingular(rng, 4, 2);
      const Isogeny alpha(a, a, m);
      if (alpha.degree() > 40) continue;
      for (std::uint64_t mask = 0; mask < 4; ++mask) {
        const auto l = kernel_intersect(alpha, sub_product(*a, mask));
        const auto elems = brute::kernel_elements(to_brute(m), support_of(*a, mask));
        CHECK(l.order() == static_cast<long>(elems.size()));
        CHECK(alpha.degree() % l.order() == 0);
        for (long p : {2L, 3L, 5L, 7L}) CHECK(rank_p(l, p) == brute::p_torsion_rank(elems, alpha.degree().get_si(), p));
      }
    }
  }

  TEST_CASE("kernel of a block-diagonal isogeny splits over sub-products") {
    sampling::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto a = std::make_shared<const AbelianVariety>(AbelianVariety::product("A", sampling::random_factors(rng, g)));
      std::vector<IntMatrix> blocks;
      for (const auto& f : a->factors()) blocks.push_back(sampling::random_nonsingular(rng, 2 * f.dim, 4));
      const Isogeny alpha(a, a, sampling::block_diagonal(blocks));
      for (std::uint64_t mask = 0; mask < (1ULL << blocks.size()); ++mask) {
        FiniteAbelianGroup expected;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          if ((mask >> i & 1U) != 0)
            expected = direct_sum(expected, normalize(smith_normal_form(blocks[i]).invariant_factors));
        CHECK(kernel_intersect(alpha, sub_product(*a, mask)) == expected);
      }
    }
  }

  TEST_CASE("ker(alpha)/L injects into A/B") {
    // The part of ker(alpha) landing in Lambda + Q B is exactly L = ker n B.
    sampling::Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = product({1, 1});
      const Isogeny alpha(a, a, sampling::random_nonsingular(rng, 4, 3));
      const auto pre = preimage_lattice(alpha.matrix(), Lattice::standard(4));
      for (const auto& b : enumerate_subvarieties(*a).members) {
        const auto l = kernel_intersect(alpha, b);
        const auto lambda_plus_b =
            lattice_sum(Lattice::standard(4), Lattice::from_generators(4, b.lattice.basis(), alpha.degree()));
        const auto back = lattice_quotient(lattice_intersect(pre, lambda_plus_b), Lattice::standard(4));
        CHECK(back == l);
      }
    }
  }

  TEST_CASE("composition") {
    const auto a = product({1, 1});
    const auto m2 = mult_by_m(a, 2);
    const auto m3 = mult_by_m(a, 3);
    const auto id = mult_by_m(a, 1);
    CHECK(compose(id, m2).matrix() == m2.matrix());
    CHECK(compose(m2, m3).matrix() == mult_by_m(a, 6).matrix());
    CHECK(code_of([&] { (void)compose(mult_by_m(product({2}), 2), m2); }) == ErrorCode::IncompatibleComposition);

    sampling::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const Isogeny f(a, a, sampling::random_nonsingular(rng, 4, 3));
      const Isogeny g(a, a, sampling::random_nonsingular(rng, 4, 3));
      const auto gf = compose(g, f);
      CHECK(gf.degree() == f.degree() * g.degree());
      CHECK(rank(kernel(gf)) <= rank(kernel(f)) + rank(kernel(g)));
    }
  }
}
