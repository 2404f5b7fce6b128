#include "doctest.h"
#include "generators.hpp"
#include "homcheck/construct.hpp"

using namespace homcheck;
namespace fx = homcheck::fixtures;

TEST_SUITE("subadjacent") {
  TEST_CASE("commutative algebra of F2: e1.e1 = 2 e2") {
    const auto c = subadjacent_commutative(fx::f2());
    CHECK(c.kind == Kind::commutative_hom_associative);
    Tensor3 expected(2);
    expected(0, 0, 1) = 2;
    CHECK(c.product == expected);
    CHECK(check_hom_associative(c, kAll).passed());

    CHECK(subadjacent_commutative(fx::f0()).product.is_zero());

    const auto ca = subadjacent_commutative(fx::f2a());
    Tensor3 expected_a(2);
    expected_a(0, 0, 1) = 8;
    CHECK(ca.product == expected_a);
    CHECK(ca.twist == fx::f2a().twist);
  }

  TEST_CASE("Lie algebra of F4 is exactly F3") {
    const auto l = subadjacent_lie(fx::f4());
    CHECK(l.kind == Kind::hom_lie);
    CHECK(l.product == fx::f3().product);
    CHECK(check_hom_lie(l, kAll).passed());

    CHECK(subadjacent_lie(fx::zero(Kind::hom_pre_lie, 2)).product.is_zero());

    Tensor3 sym(2);
    sym(0, 0, 1) = 1;  // e1*e1 = e2 is symmetric, so the commutator vanishes
    const auto p = HomAlgebra::make(Kind::hom_pre_lie, sym, Matrix::identity(2));
    CHECK(subadjacent_lie(p).product.is_zero());
  }

  TEST_CASE("Poisson algebra of P1 is exactly F6") {
    const auto s = subadjacent_poisson(fx::p1());
    CHECK(s == fx::f6());
    CHECK(check_hom_poisson(s, kAll).passed());

    const auto s2 = subadjacent_poisson(fx::p2());
    CHECK(s2.productA.is_zero());
    CHECK(s2.productB == fx::f3().product);

    CHECK(subadjacent_poisson(fx::zero_pair(PairKind::hom_pre_poisson, 2))
              .productA.is_zero());
  }

  TEST_CASE("inputs failing the precondition are rejected") {
    const auto bad = HomAlgebra::make(Kind::hom_zinbiel, fx::f1().product,
                                      Matrix::identity(2));
    CHECK_THROWS_AS(subadjacent_commutative(bad), precondition_error);
    CHECK_THROWS_AS(subadjacent_commutative(fx::f1()), kind_error);
  }

  TEST_CASE("symmetrized product is symmetric, commutator is skew") {
    for (const auto& pp : gen::prepoisson_pool(12)) {
      const auto s = subadjacent_poisson(pp);
      for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) {
          CHECK(s.productA.slice(i, j) == s.productA.slice(j, i));
          CHECK(s.productB.slice(i, j) == -s.productB.slice(j, i));
        }
    }
  }
}

TEST_SUITE("dendriform_split") {
  TEST_CASE("zero dendriform splits into zero algebras") {
    const auto split = dendriform_split(fx::zero_pair(PairKind::hom_dendriform, 2));
    CHECK(split.associative.product.is_zero());
    CHECK(split.pre_lie.product.is_zero());
  }

  TEST_CASE("zinbiel-induced dendriform from F2") {
    const auto z = fx::f2();
    const auto d = HomTwoProductAlgebra::make(
        PairKind::hom_dendriform, z.product.flip(), z.product, z.twist);
    const auto split = dendriform_split(d);
    Tensor3 sym(2);
    sym(0, 0, 1) = 2;  // e1.e1 = e1>e1 + e1<e1 = 2 e2
    CHECK(split.associative.product == sym);
    // x*y = x>y - y<x cancels exactly under the zinbiel reading
    CHECK(split.pre_lie.product.is_zero());
    CHECK(check_hom_associative(split.associative, kForceAll).passed());
    CHECK(check_hom_pre_lie(split.pre_lie, kAll).passed());
  }

  TEST_CASE("prec = 0, succ = F1 product is dendriform and splits to F1") {
    const auto d = HomTwoProductAlgebra::make(PairKind::hom_dendriform,
                                              Tensor3(2), fx::f1().product,
                                              Matrix::identity(2));
    CHECK(check_hom_dendriform(d, kAll).passed());
    const auto split = dendriform_split(d);
    CHECK(split.associative.product == fx::f1().product);
    CHECK(split.pre_lie.product == fx::f1().product);
    CHECK(check_hom_associative(split.associative, kForceAll).passed());
    CHECK(check_hom_pre_lie(split.pre_lie, kAll).passed());
  }
}

TEST_SUITE("yau_twist / untwist") {
  TEST_CASE("P1 twisted by diag(2,4) is P1a") {
    const auto t = yau_twist(fx::p1(), gen::p1_endo(2, 0));
    CHECK(t == fx::p1a());
    CHECK(check_hom_pre_poisson(t, kAll).passed());
  }

  TEST_CASE("F2 twisted by diag(2,4) is F2a") {
    CHECK(yau_twist(fx::f2(), gen::p1_endo(2, 0)) == fx::f2a());
  }

  TEST_CASE("identity endomorphism leaves the base unchanged") {
    CHECK(yau_twist(fx::p1(), Matrix::identity(2)) == fx::p1());
  }

  TEST_CASE("non-multiplicative endomorphisms are rejected") {
    Matrix bad(2, 2);
    bad(0, 0) = 1;
    bad(1, 1) = 2;  // diag(1,2) is not multiplicative for F2
    CHECK_THROWS_AS(yau_twist(fx::f2(), bad), twist_error);
    CHECK_THROWS_AS(yau_twist(fx::f2a(), Matrix::identity(2)),
                    precondition_error);  // base twist must be the identity
  }

  TEST_CASE("untwist of P1a recovers P1; untwisting the identity is a no-op") {
    CHECK(untwist(fx::p1a()) == fx::p1());
    CHECK(untwist(fx::p1()) == fx::p1());
    CHECK(untwist(fx::f2a()) == fx::f2());
  }

  TEST_CASE("round-trips are exact on randomized twists") {
    oracle::Rng rng;
    for (int it = 0; it < 25; ++it) {
      const Matrix e1 = gen::p1_endo(gen::nonzero(rng), rng.rational());
      const auto t1 = yau_twist(fx::p1(), e1);
      CHECK(untwist(t1) == fx::p1());
      CHECK(yau_twist(untwist(t1), t1.twist) == t1);

      const Matrix e2 = gen::diag1d_endo(gen::nonzero(rng));
      const auto t2 = yau_twist(fx::p2(), e2);
      CHECK(untwist(t2) == fx::p2());
      CHECK(check_hom_pre_poisson(t2, kAll).passed());
    }
  }
}

TEST_SUITE("direct_sum") {
  TEST_CASE("zero plus zero") {
    const auto z = fx::zero_pair(PairKind::hom_poisson, 2);
    const auto s = direct_sum(z, z);
    CHECK(s.dim() == 4);
    CHECK(s.productA.is_zero());
    CHECK(check_hom_poisson(s, kAll).passed());
  }

  TEST_CASE("F6 plus F1-with-zero-bracket, cross terms vanish") {
    const auto s = direct_sum(fx::f6(), fx::f1_poisson());
    CHECK(s.dim() == 4);
    CHECK(check_hom_poisson(s, kAll).passed());
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < 4; ++j) {
        CHECK(s.productA.slice(i, j).is_zero());
        CHECK(s.productA.slice(j, i).is_zero());
        CHECK(s.productB.slice(i, j).is_zero());
        CHECK(s.productB.slice(j, i).is_zero());
      }
  }

  TEST_CASE("summands must pass the Poisson checker") {
    CHECK_THROWS_AS(direct_sum(fx::f7(), fx::f6()), precondition_error);
  }
}

TEST_SUITE("semidirect_product") {
  TEST_CASE("zero algebra with the zero representation") {
    const auto z = fx::zero_pair(PairKind::hom_poisson, 2);
    const auto rep = PoissonRepresentation::make(
        z, Matrix::identity(2), ActionMap{Matrix(2, 2), Matrix(2, 2)},
        ActionMap{Matrix(2, 2), Matrix(2, 2)});
    const auto s = semidirect_product(z, rep);
    CHECK(s.dim() == 4);
    CHECK(s.productA.is_zero());
    CHECK(s.productB.is_zero());
    CHECK(check_hom_poisson(s, kAll).passed());
  }

  TEST_CASE("F1-with-zero-bracket acting on itself") {
    const auto a = fx::f1_poisson();
    const auto s = semidirect_product(a, regular_representation(a));
    CHECK(s.dim() == 4);
    CHECK(check_hom_poisson(s, kAll).passed());
    // no V x V products
    for (int u = 2; u < 4; ++u)
      for (int v = 2; v < 4; ++v) {
        CHECK(s.productA.slice(u, v).is_zero());
        CHECK(s.productB.slice(u, v).is_zero());
      }
  }
}

TEST_CASE("theorem-as-property: sub-adjacent structures pass their checkers") {
  for (const auto& pp : gen::prepoisson_pool(40)) {
    CHECK(check_hom_pre_poisson(pp, kAll).passed());
    CHECK(check_hom_poisson(subadjacent_poisson(pp), kAll).passed());
  }
}
