#pragma once

#include <string>

#include "homcheck/linalg.hpp"
#include "homcheck/report.hpp"

namespace homcheck {

enum class Kind {
  hom_associative,
  commutative_hom_associative,
  hom_lie,
  hom_pre_lie,
  hom_zinbiel,
  hom_permutative,
  hom_leibniz,
};

enum class PairKind {
  hom_poisson,           // (dot, bracket)
  hom_pre_poisson,       // (zinbiel, prelie)
  hom_dendriform,        // (prec, succ)
  dual_hom_pre_poisson,  // (perm, leibniz)
};

std::string kind_name(Kind k);
std::string kind_name(PairKind k);

/// A finite-dimensional algebra with one product and a twist map. The twist
/// is an algebra morphism by construction; everything else is the checkers'
/// business.
struct HomAlgebra {
  Kind kind = Kind::hom_associative;
  Tensor3 product;
  Matrix twist;

  int dim() const { return product.dim(); }
  bool regular() const;  // twist invertible

  /// Validates shapes and multiplicativity of the twist; throws twist_error
  /// naming the first violating pair.
  static HomAlgebra make(Kind kind, Tensor3 product, Matrix twist);
  /// Skips the multiplicativity check (for candidates fed to
  /// check_multiplicativity and for parser internals).
  static HomAlgebra make_unchecked(Kind kind, Tensor3 product, Matrix twist);

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

/// Two products sharing one twist: Hom-Poisson and friends.
struct HomTwoProductAlgebra {
  PairKind kind = PairKind::hom_poisson;
  Tensor3 productA;  // dot / zinbiel / prec / perm
  Tensor3 productB;  // bracket / prelie / succ / leibniz
  Matrix twist;

  int dim() const { return productA.dim(); }
  bool regular() const;

  static HomTwoProductAlgebra make(PairKind kind, Tensor3 a, Tensor3 b,
                                   Matrix twist);
  static HomTwoProductAlgebra make_unchecked(PairKind kind, Tensor3 a,
                                             Tensor3 b, Matrix twist);

  friend bool operator==(const HomTwoProductAlgebra&,
                         const HomTwoProductAlgebra&) = default;
};

/// Multiplicativity violations of the twist for a raw (product, twist) pair:
/// alpha(e_i * e_j) = alpha(e_i) * alpha(e_j) on all basis pairs.
std::vector<Violation> multiplicativity_violations(const Tensor3& product,
                                                   const Matrix& twist,
                                                   const std::string& label);

CheckReport check_multiplicativity(const HomAlgebra& a);
CheckReport check_multiplicativity(const HomTwoProductAlgebra& a);

namespace detail {

/// Precomputed left/right multiplication operators of one product, plus the
/// twisted variants; the per-triple identity evaluations all reduce to
/// matrix-vector work against these.
struct ProductOps {
  const Tensor3* t = nullptr;
  std::vector<Matrix> left;        // L[i]  : y  -> e_i * y
  std::vector<Matrix> right;       // R[j]  : x  -> x * e_j
  std::vector<Matrix> left_tw;     // LA[i] : y  -> alpha(e_i) * y
  std::vector<Matrix> right_tw;    // RA[k] : x  -> x * alpha(e_k)

  ProductOps() = default;
  ProductOps(const Tensor3& tensor, const Matrix& twist);

  Vector slice(int i, int j) const { return t->slice(i, j); }
};

Matrix operator_of(const Tensor3& t, const Vector& x, bool left);

}  // namespace detail

}  // namespace homcheck
