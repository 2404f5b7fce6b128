#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/report.hpp"

namespace homcheck {

// One checker per structure in the catalog. Each scans every basis pair or
// triple of the defining identities, in the order the definition states
// them, and reports exact LHS - RHS discrepancies. The kind tag must match
// unless CheckOptions::force is set.

/// Eq. (1); commutativity too when the kind says so.
CheckReport check_hom_associative(const HomAlgebra& a, CheckOptions o = {});

/// Skew-symmetry and the Hom-Jacobi identity Eq. (7).
CheckReport check_hom_lie(const HomAlgebra& a, CheckOptions o = {});

/// Eq. (11).
CheckReport check_hom_pre_lie(const HomAlgebra& a, CheckOptions o = {});

/// Eq. (12).
CheckReport check_hom_zinbiel(const HomAlgebra& a, CheckOptions o = {});

/// Eq. (48), both equalities.
CheckReport check_hom_permutative(const HomAlgebra& a, CheckOptions o = {});

/// Eq. (51).
CheckReport check_hom_leibniz(const HomAlgebra& a, CheckOptions o = {});

/// Eqs. (13)-(15); productA is prec, productB is succ.
CheckReport check_hom_dendriform(const HomTwoProductAlgebra& a,
                                 CheckOptions o = {});

/// Commutative Hom-associativity of dot, Hom-Lie axioms of the bracket,
/// and the Hom-Leibniz rule Eq. (16).
CheckReport check_hom_poisson(const HomTwoProductAlgebra& a,
                              CheckOptions o = {});

/// Hom-zinbiel axioms of productA, Hom-pre-Lie axioms of productB, and the
/// compatibilities Eqs. (21)-(22).
CheckReport check_hom_pre_poisson(const HomTwoProductAlgebra& a,
                                  CheckOptions o = {});

/// Hom-permutative axioms of productA, Hom-Leibniz axioms of productB, and
/// Eqs. (54)-(56).
CheckReport check_dual_hom_pre_poisson(const HomTwoProductAlgebra& a,
                                       CheckOptions o = {});

/// Dispatch on the kind tag (used by the CLI and by constructions that
/// re-verify their outputs).
CheckReport check_by_kind(const HomAlgebra& a, CheckOptions o = {});
CheckReport check_by_kind(const HomTwoProductAlgebra& a, CheckOptions o = {});

/// f carries src coordinates to dst coordinates; Eqs. (23)-(25) per product.
CheckReport check_morphism(const HomAlgebra& src, const HomAlgebra& dst,
                           const Matrix& f, CheckOptions o = {});
CheckReport check_morphism(const HomTwoProductAlgebra& src,
                           const HomTwoProductAlgebra& dst, const Matrix& f,
                           CheckOptions o = {});

namespace detail {

// Identity scans shared with the graded checkers and the deformation
// equations. Each returns the violations of one displayed identity.
std::vector<Violation> scan_commutativity(const ProductOps& p);
std::vector<Violation> scan_hom_associative(const ProductOps& p);
std::vector<Violation> scan_skew_symmetry(const ProductOps& p);
std::vector<Violation> scan_hom_jacobi(const ProductOps& p);
std::vector<Violation> scan_hom_pre_lie(const ProductOps& p);
std::vector<Violation> scan_hom_zinbiel(const ProductOps& p);
std::vector<Violation> scan_leibniz_rule(const ProductOps& dot,
                                         const ProductOps& br);

}  // namespace detail

}  // namespace homcheck
