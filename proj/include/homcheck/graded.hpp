#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/report.hpp"

namespace homcheck {

/// (-1)^(p q), the sign picked up when graded elements of degrees p and q
/// move past each other.
Rational koszul_sign(long p, long q);

struct GradedBasis {
  std::vector<long> degrees;

  int dim() const { return static_cast<int>(degrees.size()); }
  long deg(int i) const { return degrees[static_cast<std::size_t>(i)]; }

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

enum class GradedKind { hom_gerstenhaber, hom_pre_gerstenhaber };

std::string kind_name(GradedKind k);

/// Graded algebra with a degree-0 product (dot or zinbiel) and a
/// degree-(-1) product (bracket or pre-Lie). Homogeneity is a construction
/// invariant: product0 entries need |e_k| = |e_i| + |e_j|, productM1 entries
/// |e_k| = |e_i| + |e_j| - 1, and the twist is degree-preserving. Signs are
/// computed from the stored degrees at evaluation time, never baked into
/// the tensors, so the all-degrees-0 case lines up entry for entry with the
/// ungraded checkers.
struct GradedAlgebra {
  GradedKind kind = GradedKind::hom_gerstenhaber;
  GradedBasis basis;
  Tensor3 product0;
  Tensor3 productM1;
  Matrix twist;

  int dim() const { return basis.dim(); }

  static GradedAlgebra make(GradedKind kind, GradedBasis basis,
                            Tensor3 product0, Tensor3 productM1, Matrix twist);

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;
};

/// Graded commutativity + Hom-associativity of the dot, graded skewness +
/// Hom-Jacobi of the bracket, and the graded Leibniz rule, with the signs of
/// the defining identities.
CheckReport check_hom_gerstenhaber(const GradedAlgebra& g, CheckOptions o = {});

/// Eq. (26), the graded Hom-pre-Lie identity, and Eqs. (27)-(28).
CheckReport check_hom_pre_gerstenhaber(const GradedAlgebra& g,
                                       CheckOptions o = {});

/// x.y = x<>y + (-1)^(|x||y|) y<>x and
/// [x,y] = x*y - (-1)^((|x|-1)(|y|-1)) y*x; degrees and twist carry over.
GradedAlgebra subadjacent_gerstenhaber(const GradedAlgebra& g);

}  // namespace homcheck
