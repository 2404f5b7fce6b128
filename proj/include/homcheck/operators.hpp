#pragma once

#include "homcheck/construct.hpp"
#include "homcheck/representation.hpp"

namespace homcheck {

/// T : V -> A intertwining the twists, T o beta = alpha o T (Eq. (35)/(37),
/// enforced at construction). The quadratic conditions Eq. (36)/(38) are the
/// checkers' job.
struct OOperator {
  Representation rep;
  Matrix T;  // dim_A x dim_V

  static OOperator make(Representation rep, Matrix T);
};

struct PoissonOOperator {
  PoissonRepresentation rep;
  Matrix T;

  static PoissonOOperator make(PoissonRepresentation rep, Matrix T);
  OOperator comm_part() const;
  OOperator lie_part() const;
};

/// Eq. (35) and Eq. (36) over a representation of a commutative
/// Hom-associative algebra. Requires invertible beta.
CheckReport check_o_operator_comm(const Representation& rep, const Matrix& T,
                                  CheckOptions o = {});
CheckReport check_o_operator_comm(const OOperator& op, CheckOptions o = {});

/// Eq. (37) and Eq. (38) over a Hom-Lie representation.
CheckReport check_o_operator_lie(const Representation& rep, const Matrix& T,
                                 CheckOptions o = {});
CheckReport check_o_operator_lie(const OOperator& op, CheckOptions o = {});

/// Both halves on a Hom-Poisson representation; the equation names in the
/// report identify the failing half.
CheckReport check_o_operator_poisson(const PoissonRepresentation& rep,
                                     const Matrix& T, CheckOptions o = {});
CheckReport check_o_operator_poisson(const PoissonOOperator& op,
                                     CheckOptions o = {});

/// u <>_T v = mu(T(beta^-1 u)) v on the carrier, twist beta.
HomAlgebra induced_zinbiel(const OOperator& op);

/// u *_T v = rho(T(beta^-1 u)) v on the carrier, twist beta.
HomAlgebra induced_prelie(const OOperator& op);

/// Both products together: a Hom-pre-Poisson structure on the carrier.
HomTwoProductAlgebra induced_prepoisson(const PoissonOOperator& op);

/// The induced structure transported onto T(V) in the pivot-column basis of
/// T. `carrier_basis` lists the carrier indices whose T-images form the
/// basis; `image_basis` stacks those images as columns.
struct ImageStructure {
  HomTwoProductAlgebra algebra;
  std::vector<int> carrier_basis;
  Matrix image_basis;  // dim_A x rank
};
ImageStructure image_structure(const PoissonOOperator& op);

/// For invertible T: the compatible Hom-pre-Poisson structure on A itself,
///   x <> y = T(mu(alpha^-1 x) T^-1 y),  x * y = T(rho(alpha^-1 x) T^-1 y).
/// Its sub-adjacent Hom-Poisson algebra is exactly the source algebra.
HomTwoProductAlgebra compatible_from_invertible(const PoissonOOperator& op);

/// Skew bilinear form given by its coefficient matrix omega(e_i, e_j).
struct TwoCocycle {
  Matrix omega;

  static TwoCocycle make(Matrix omega);  // enforces skew-symmetry
  Rational eval(const Vector& x, const Vector& y) const;
};

/// Eqs. (42)-(44) against a Hom-Poisson algebra.
CheckReport check_two_cocycle(const HomTwoProductAlgebra& a,
                              const TwoCocycle& w, CheckOptions o = {});

/// Two versions of the Thm 5.10 bracket-side formula are in circulation; they
/// differ in one twist exponent and only eq45 yields a compatible structure
/// (the acceptance suite pins this). Both stay available for comparison.
enum class CocycleVariant {
  eq45,       // omega(x*y, z) = -omega(y, [alpha^-1 x, alpha^-2 z])
  proofline,  // omega(x*y, z) = -omega(y, [alpha^-1 x, alpha^-1 z])
};
inline constexpr CocycleVariant kDefaultCocycleVariant = CocycleVariant::eq45;

/// Quantization through an invertible alpha-invariant 2-cocycle:
///   omega(x<>y, z) = omega(y, alpha^-1(x) . alpha^-2(z))
/// plus the bracket formula selected by `variant`.
HomTwoProductAlgebra prepoisson_from_cocycle(
    const HomTwoProductAlgebra& a, const TwoCocycle& w,
    CocycleVariant variant = kDefaultCocycleVariant);

/// S : A -> A commuting with the twist (Eq. (49)/(52), enforced at
/// construction).
struct AverageOperator {
  Matrix S;

  static AverageOperator make(Matrix S, const Matrix& twist);
};

/// Eq. (50) (product kinds), Eq. (53) (Lie), or both (Poisson); requires a
/// regular algebra passing its own checker.
CheckReport check_average_operator(const HomAlgebra& a, const Matrix& S,
                                   CheckOptions o = {});
CheckReport check_average_operator(const HomTwoProductAlgebra& a,
                                   const Matrix& S, CheckOptions o = {});

/// x • y = S(alpha^-1 x) . y
HomAlgebra induced_permutative(const HomAlgebra& a, const AverageOperator& s);

/// {x, y} = [S(alpha^-1 x), y]
HomAlgebra induced_leibniz(const HomAlgebra& a, const AverageOperator& s);

/// Both formulas on a regular Hom-Poisson algebra: a dual-Hom-pre-Poisson
/// structure.
HomTwoProductAlgebra induced_dual_prepoisson(const HomTwoProductAlgebra& a,
                                             const AverageOperator& s);

/// Solve T o beta = alpha o T exactly, then walk every integer combination
/// of the nullspace basis with coefficients in [-bound, bound] and keep the
/// candidates passing the quadratic checks. Complete within the grid only.
/// Results ordered by lexicographic coefficient tuple.
std::vector<OOperator> search_o_operators(const Representation& rep,
                                          int bound);
std::vector<PoissonOOperator> search_o_operators(
    const PoissonRepresentation& rep, int bound);

}  // namespace homcheck
