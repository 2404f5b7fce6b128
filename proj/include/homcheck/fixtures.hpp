#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/deformation.hpp"
#include "homcheck/graded.hpp"
#include "homcheck/operators.hpp"

namespace homcheck::fixtures {

// The built-in gallery. Everything uses the identity twist unless stated.

HomAlgebra zero(Kind k, int dim);
HomTwoProductAlgebra zero_pair(PairKind k, int dim);

/// F0: zero Hom-zinbiel algebra, dim 2.
HomAlgebra f0();

/// F1: dual numbers. e1.e1 = e1, e1.e2 = e2.e1 = e2, e2.e2 = 0.
HomAlgebra f1();

/// F2: zinbiel. e1<>e1 = e2, all else 0.
HomAlgebra f2();

/// F2a: F2 Yau-twisted by diag(2,4): e1<>e1 = 4 e2, twist diag(2,4).
HomAlgebra f2a();

/// F3: Hom-Lie. [e1,e2] = e2 = -[e2,e1].
HomAlgebra f3();

/// F4: pre-Lie. e1*e2 = e2, all else 0.
HomAlgebra f4();

/// F6: Hom-Poisson. e1.e1 = 2 e2, zero bracket (sub-adjacent of P1).
HomTwoProductAlgebra f6();

/// F7: NEGATIVE control. F1 product with bracket [e1,e2] = e2; fails the
/// Hom-Leibniz rule Eq. (16) at (e2,e1,e1).
HomTwoProductAlgebra f7();

/// F1 with the zero bracket, as a Hom-Poisson algebra.
HomTwoProductAlgebra f1_poisson();

/// Unit adjoined to the solvable bracket: e1 a unit for the product,
/// [e2,e3] = e3. A Hom-Poisson algebra whose two actions genuinely
/// interact; pins down the operator ordering of Eq. (18).
HomTwoProductAlgebra unital_solvable_poisson();

/// P1: pre-Poisson (F2 zinbiel product, zero pre-Lie product).
HomTwoProductAlgebra p1();

/// P1a: P1 Yau-twisted by diag(2,4): e1<>e1 = 4 e2, twist diag(2,4).
HomTwoProductAlgebra p1a();

/// P2: pre-Poisson (zero zinbiel product, F4 pre-Lie product).
HomTwoProductAlgebra p2();

// Quantizable family: Hom-Poisson algebras with an invertible twist and an
// invertible alpha-invariant 2-cocycle of both products.

/// W1: zero products, dim 2, identity twist; omega(e1,e2) = 1.
HomTwoProductAlgebra w1_algebra();
TwoCocycle w1_cocycle();

/// W2: zero product, bracket [e1,e2] = e2, unipotent twist
/// alpha(e1) = e1 + e2. The bracket image is fixed by alpha.
HomTwoProductAlgebra w2_algebra();
TwoCocycle w2_cocycle();

/// W4: dim 4, zero product, [e1,e2] = e3, twist diag(-1,1,-1,1);
/// omega = e1^e3 + e2^e4. alpha moves the bracket image, so the two
/// bracket-side quantization formulas of Thm 5.10 disagree here.
HomTwoProductAlgebra w4_algebra();
TwoCocycle w4_cocycle();

/// D1: order-2 deformation of the zero zinbiel algebra with
/// e1 succ_1 e1 = e2 and prec_1 = 0.
TruncatedDeformation d1();

/// G0: degrees (0, 1), all products zero.
GradedAlgebra g0();

/// G1: F2 placed in degree 0 (pre-Gerstenhaber, zero degree-(-1) product).
GradedAlgebra g1();

/// G2: two degree-1 elements with f1*f1 = f2, zero degree-0 product.
GradedAlgebra g2();

struct NamedAlgebra {
  std::string name;
  HomAlgebra algebra;
};
struct NamedPair {
  std::string name;
  HomTwoProductAlgebra algebra;
};
struct NamedGraded {
  std::string name;
  GradedAlgebra algebra;
};

std::vector<NamedAlgebra> single_gallery();
std::vector<NamedPair> pair_gallery();
std::vector<NamedGraded> graded_gallery();

/// The regular (invertible-twist) Hom-pre-Poisson fixtures.
std::vector<NamedPair> regular_prepoisson_gallery();

/// The quantizable (algebra, cocycle) fixtures for Thm 5.10.
struct NamedQuantizable {
  std::string name;
  HomTwoProductAlgebra algebra;
  TwoCocycle cocycle;
};
std::vector<NamedQuantizable> quantizable_gallery();

}  // namespace homcheck::fixtures
