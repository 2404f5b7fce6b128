#pragma once

#include "homcheck/algebra.hpp"
#include "homcheck/report.hpp"

namespace homcheck {

/// Order-N truncation of a Hom-dendriform formal deformation of a
/// Hom-zinbiel algebra. The order-0 products are implicit in the base:
/// x prec_0 y = x <> y and x succ_0 y = y <> x (the flip is stored
/// explicitly so no evaluation site has to remember the orientation).
struct TruncatedDeformation {
  HomAlgebra base;  // hom-zinbiel
  int order = 1;    // N >= 1
  // Index 0 holds the order-0 convention; 1..N the deformation tensors.
  std::vector<Tensor3> prec;
  std::vector<Tensor3> succ;

  int dim() const { return base.dim(); }

  /// `prec_orders` / `succ_orders` carry orders 1..N. Validates shapes and
  /// multiplicativity of the base twist for every order.
  static TruncatedDeformation make(HomAlgebra base,
                                   std::vector<Tensor3> prec_orders,
                                   std::vector<Tensor3> succ_orders);
};

/// The order-n deformation equations (29)-(31) for n = 1..order (or up to
/// `max_order` if 1 <= max_order <= order). Violation names carry the
/// equation and the order, e.g. "Eq. (31), n=2".
CheckReport check_deformation(const TruncatedDeformation& d,
                              CheckOptions o = {}, int max_order = -1);

/// x * y = x succ_1 y - y prec_1 x together with the base product: the
/// semi-classical limit, a Hom-pre-Poisson algebra. Needs order >= 2.
HomTwoProductAlgebra semiclassical_limit(const TruncatedDeformation& d);

/// Coefficients of t^0..t^N of x prec_t y (or x succ_t y).
std::vector<Vector> truncated_product(const TruncatedDeformation& d,
                                      const Vector& x, const Vector& y,
                                      bool succ_side);

}  // namespace homcheck
