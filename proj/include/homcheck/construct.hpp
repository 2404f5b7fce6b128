#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/representation.hpp"

namespace homcheck {

/// An algebra endomorphism used to twist identity-twist structures.
using TwistSpec = Matrix;

/// x.y = x<>y + y<>x turns a Hom-zinbiel algebra into a commutative
/// Hom-associative one (same twist).
HomAlgebra subadjacent_commutative(const HomAlgebra& z);

/// [x,y] = x*y - y*x turns a Hom-pre-Lie algebra into a Hom-Lie one.
HomAlgebra subadjacent_lie(const HomAlgebra& p);

/// x.y = x>y + x<y and x*y = x>y - y<x from a Hom-dendriform algebra.
struct DendriformSplit {
  HomAlgebra associative;
  HomAlgebra pre_lie;
};
DendriformSplit dendriform_split(const HomTwoProductAlgebra& d);

/// Symmetrize the zinbiel product, antisymmetrize the pre-Lie product: the
/// sub-adjacent Hom-Poisson algebra of a Hom-pre-Poisson algebra.
HomTwoProductAlgebra subadjacent_poisson(const HomTwoProductAlgebra& pp);

/// Compose the products of an identity-twist structure with a multiplicative
/// endomorphism; the result carries the endomorphism as its twist.
HomAlgebra yau_twist(const HomAlgebra& base, const TwistSpec& endo);
HomTwoProductAlgebra yau_twist(const HomTwoProductAlgebra& base,
                               const TwistSpec& endo);

/// Compose the products of a regular Hom-structure with twist^-1; the result
/// has the identity twist. Inverse of yau_twist on both sides.
HomAlgebra untwist(const HomAlgebra& h);
HomTwoProductAlgebra untwist(const HomTwoProductAlgebra& h);

/// Componentwise Hom-Poisson structure on the direct sum.
HomTwoProductAlgebra direct_sum(const HomTwoProductAlgebra& a,
                                const HomTwoProductAlgebra& b);

/// Semi-direct Hom-Poisson structure on A + V:
///   (x+u).(y+v)  = x.y + mu(x)v + mu(y)u
///   [x+u, y+v]   = [x,y] + rho(x)v - rho(y)u
HomTwoProductAlgebra semidirect_product(const HomTwoProductAlgebra& a,
                                        const PoissonRepresentation& rep);

}  // namespace homcheck
