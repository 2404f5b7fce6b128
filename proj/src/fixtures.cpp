#include "homcheck/fixtures.hpp"

namespace homcheck::fixtures {

namespace {

Matrix id(int n) { return Matrix::identity(n); }

Tensor3 f1_product() {
  Tensor3 t(2);
  t(0, 0, 0) = 1;  // e1.e1 = e1
  t(0, 1, 1) = 1;  // e1.e2 = e2
  t(1, 0, 1) = 1;  // e2.e1 = e2
  return t;
}

Tensor3 f2_product() {
  Tensor3 t(2);
  t(0, 0, 1) = 1;  // e1<>e1 = e2
  return t;
}

Tensor3 f3_bracket() {
  Tensor3 t(2);
  t(0, 1, 1) = 1;   // [e1,e2] = e2
  t(1, 0, 1) = -1;  // [e2,e1] = -e2
  return t;
}

Tensor3 f4_product() {
  Tensor3 t(2);
  t(0, 1, 1) = 1;  // e1*e2 = e2
  return t;
}

}  // namespace

HomAlgebra zero(Kind k, int dim) {
  return HomAlgebra::make(k, Tensor3(dim), id(dim));
}

HomTwoProductAlgebra zero_pair(PairKind k, int dim) {
  return HomTwoProductAlgebra::make(k, Tensor3(dim), Tensor3(dim), id(dim));
}

HomAlgebra f0() { return zero(Kind::hom_zinbiel, 2); }

HomAlgebra f1() {
  return HomAlgebra::make(Kind::commutative_hom_associative, f1_product(),
                          id(2));
}

HomAlgebra f2() { return HomAlgebra::make(Kind::hom_zinbiel, f2_product(), id(2)); }

HomAlgebra f2a() {
  Tensor3 t(2);
  t(0, 0, 1) = 4;  // e1<>e1 = 4 e2
  return HomAlgebra::make(Kind::hom_zinbiel, t,
                          Matrix{{Rational(2), Rational(0)},
                                 {Rational(0), Rational(4)}});
}

HomAlgebra f3() { return HomAlgebra::make(Kind::hom_lie, f3_bracket(), id(2)); }

HomAlgebra f4() { return HomAlgebra::make(Kind::hom_pre_lie, f4_product(), id(2)); }

HomTwoProductAlgebra f6() {
  Tensor3 dot(2);
  dot(0, 0, 1) = 2;  // e1.e1 = 2 e2
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, dot, Tensor3(2),
                                    id(2));
}

HomTwoProductAlgebra f7() {
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, f1_product(),
                                    f3_bracket(), id(2));
}

HomTwoProductAlgebra f1_poisson() {
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, f1_product(),
                                    Tensor3(2), id(2));
}

HomTwoProductAlgebra unital_solvable_poisson() {
  Tensor3 dot(3);
  dot(0, 0, 0) = 1;  // e1 is a unit
  dot(0, 1, 1) = 1;
  dot(1, 0, 1) = 1;
  dot(0, 2, 2) = 1;
  dot(2, 0, 2) = 1;
  Tensor3 br(3);
  br(1, 2, 2) = 1;  // [e2,e3] = e3
  br(2, 1, 2) = -1;
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, dot, br, id(3));
}

HomTwoProductAlgebra p1() {
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson, f2_product(),
                                    Tensor3(2), id(2));
}

HomTwoProductAlgebra p1a() {
  Tensor3 t(2);
  t(0, 0, 1) = 4;
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson, t, Tensor3(2),
                                    Matrix{{Rational(2), Rational(0)},
                                           {Rational(0), Rational(4)}});
}

HomTwoProductAlgebra p2() {
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson, Tensor3(2),
                                    f4_product(), id(2));
}

HomTwoProductAlgebra w1_algebra() {
  return zero_pair(PairKind::hom_poisson, 2);
}

TwoCocycle w1_cocycle() {
  return TwoCocycle::make(Matrix{{Rational(0), Rational(1)},
                                 {Rational(-1), Rational(0)}});
}

HomTwoProductAlgebra w2_algebra() {
  Matrix twist{{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, Tensor3(2),
                                    f3_bracket(), twist);
}

TwoCocycle w2_cocycle() { return w1_cocycle(); }

HomTwoProductAlgebra w4_algebra() {
  Tensor3 br(4);
  br(0, 1, 2) = 1;  // [e1,e2] = e3
  br(1, 0, 2) = -1;
  Matrix twist(4, 4);
  twist(0, 0) = -1;
  twist(1, 1) = 1;
  twist(2, 2) = -1;
  twist(3, 3) = 1;
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, Tensor3(4), br,
                                    twist);
}

TwoCocycle w4_cocycle() {
  Matrix w(4, 4);
  w(0, 2) = 1;  // omega(e1,e3) = 1
  w(2, 0) = -1;
  w(1, 3) = 1;  // omega(e2,e4) = 1
  w(3, 1) = -1;
  return TwoCocycle::make(w);
}

TruncatedDeformation d1() {
  Tensor3 succ1(2);
  succ1(0, 0, 1) = 1;  // e1 succ_1 e1 = e2
  return TruncatedDeformation::make(zero(Kind::hom_zinbiel, 2),
                                    {Tensor3(2), Tensor3(2)},
                                    {succ1, Tensor3(2)});
}

GradedAlgebra g0() {
  return GradedAlgebra::make(GradedKind::hom_pre_gerstenhaber,
                             GradedBasis{{0, 1}}, Tensor3(2), Tensor3(2),
                             id(2));
}

GradedAlgebra g1() {
  return GradedAlgebra::make(GradedKind::hom_pre_gerstenhaber,
                             GradedBasis{{0, 0}}, f2_product(), Tensor3(2),
                             id(2));
}

GradedAlgebra g2() {
  Tensor3 star(2);
  star(0, 0, 1) = 1;  // f1*f1 = f2, degree 1+1-1 = 1
  return GradedAlgebra::make(GradedKind::hom_pre_gerstenhaber,
                             GradedBasis{{1, 1}}, Tensor3(2), star, id(2));
}

std::vector<NamedAlgebra> single_gallery() {
  return {{"f0", f0()}, {"f1", f1()},   {"f2", f2()},
          {"f2a", f2a()}, {"f3", f3()}, {"f4", f4()}};
}

std::vector<NamedPair> pair_gallery() {
  return {{"f6", f6()},
          {"f7", f7()},
          {"f1-poisson", f1_poisson()},
          {"unital-solvable-poisson", unital_solvable_poisson()},
          {"p1", p1()},
          {"p1a", p1a()},
          {"p2", p2()},
          {"w1", w1_algebra()},
          {"w2", w2_algebra()},
          {"w4", w4_algebra()},
          {"zero-prepoisson", zero_pair(PairKind::hom_pre_poisson, 2)}};
}

std::vector<NamedGraded> graded_gallery() {
  return {{"g0", g0()}, {"g1", g1()}, {"g2", g2()}};
}

std::vector<NamedPair> regular_prepoisson_gallery() {
  return {{"p1", p1()},
          {"p1a", p1a()},
          {"p2", p2()},
          {"zero-prepoisson", zero_pair(PairKind::hom_pre_poisson, 2)}};
}

std::vector<NamedQuantizable> quantizable_gallery() {
  return {{"w1", w1_algebra(), w1_cocycle()},
          {"w2", w2_algebra(), w2_cocycle()},
          {"w4", w4_algebra(), w4_cocycle()}};
}

}  // namespace homcheck::fixtures
