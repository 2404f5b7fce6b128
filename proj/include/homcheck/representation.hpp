#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/checks.hpp"

namespace homcheck {

/// One operator per algebra basis element: entry k is mu(e_k) or rho(e_k)
/// acting on carrier coordinates.
using ActionMap = std::vector<Matrix>;

Matrix action_of(const ActionMap& a, const Vector& x);

/// Representation of a single-product algebra: (V, beta, mu) for the
/// commutative Hom-associative case, (V, beta, rho) for the Hom-Lie case.
struct Representation {
  HomAlgebra algebra;
  Matrix beta;
  ActionMap action;

  int carrier_dim() const { return beta.rows(); }

  /// Shape validation only; the defining equations are the checkers' job.
  static Representation make(HomAlgebra algebra, Matrix beta,
                             ActionMap action);
};

/// Representation of a Hom-Poisson algebra: (V, beta, rho, mu).
struct PoissonRepresentation {
  HomTwoProductAlgebra algebra;  // hom-poisson
  Matrix beta;
  ActionMap rho;  // bracket action
  ActionMap mu;   // product action

  int carrier_dim() const { return beta.rows(); }

  static PoissonRepresentation make(HomTwoProductAlgebra algebra, Matrix beta,
                                    ActionMap rho, ActionMap mu);

  Representation comm_part() const;  // (V, beta, mu) over (A, dot, alpha)
  Representation lie_part() const;   // (V, beta, rho) over (A, bracket, alpha)
};

/// Eqs. (2)-(3). Precondition: the algebra passes its own checker.
CheckReport check_rep_comm_assoc(const Representation& rep,
                                 CheckOptions o = {});

/// Eqs. (8)-(9).
CheckReport check_rep_lie(const Representation& rep, CheckOptions o = {});

/// Component checks plus the linking Eqs. (17)-(18).
CheckReport check_rep_poisson(const PoissonRepresentation& rep,
                              CheckOptions o = {});

/// L_x(y) = x.y for the commutative case, ad_x(y) = [x,y] for Hom-Lie.
Representation regular_representation(const HomAlgebra& a);

/// (A, alpha, ad, L) of a Hom-Poisson algebra.
PoissonRepresentation regular_representation(const HomTwoProductAlgebra& a);

/// The representation of the sub-adjacent Hom-Poisson algebra carried by a
/// Hom-pre-Poisson algebra: rho is left pre-Lie multiplication, mu is left
/// zinbiel multiplication.
PoissonRepresentation prepoisson_representation(
    const HomTwoProductAlgebra& pp);

// Dual representations. Two maps go by the name mu*: the plain dual
// (<mu*(x)xi, u> = -<xi, mu(x)u>) and its beta^-2-twisted composite; mixing
// them up is the classic sign bug, so only the twisted composite with the
// Thm 2.3 / Thm 2.6 / Prop 3.5 signs is exposed here. In coordinates (dual
// basis, pullbacks as transposes):
//
//   comm case:  beta' = (beta^-1)^T,  mu'(x)  =  (beta^-2 mu(alpha x))^T
//   Lie case:   beta' = (beta^-1)^T,  rho'(x) = -(beta^-2 rho(alpha x))^T
//
// The extra negation appears only in the Lie case: Thm 2.3 hands out -mu*
// while Thm 2.6 hands out rho* itself.
Representation dual_rep_comm_assoc(const Representation& rep);
Representation dual_rep_lie(const Representation& rep);
PoissonRepresentation dual_rep_poisson(const PoissonRepresentation& rep);

}  // namespace homcheck
