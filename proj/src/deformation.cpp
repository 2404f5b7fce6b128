#include "homcheck/deformation.hpp"

#include "homcheck/checks.hpp"
#include "homcheck/scan.hpp"

namespace homcheck {

TruncatedDeformation TruncatedDeformation::make(
    HomAlgebra base, std::vector<Tensor3> prec_orders,
    std::vector<Tensor3> succ_orders) {
  if (base.kind != Kind::hom_zinbiel)
    throw kind_error("deformation base must be a Hom-zinbiel algebra");
  if (prec_orders.size() != succ_orders.size() || prec_orders.empty())
    throw validation_error(
        "deformation needs matching prec/succ tensor lists of length N >= 1");
  const int n = base.dim();
  for (const auto* list : {&prec_orders, &succ_orders})
    for (const auto& t : *list)
      if (t.dim() != n)
        throw dimension_error("deformation tensor dimension mismatch");
  // A single twist serves every order, so each order must be multiplicative.
  for (std::size_t i = 0; i < prec_orders.size(); ++i) {
    for (const auto* t : {&prec_orders[i], &succ_orders[i]}) {
      auto vs = multiplicativity_violations(*t, base.twist, "multiplicativity");
      if (!vs.empty())
        throw twist_error("twist not multiplicative for order-" +
                          std::to_string(i + 1) + " tensor, " +
                          vs.front().str());
    }
  }
  TruncatedDeformation d;
  d.order = static_cast<int>(prec_orders.size());
  d.prec.reserve(prec_orders.size() + 1);
  d.succ.reserve(succ_orders.size() + 1);
  d.prec.push_back(base.product);
  d.succ.push_back(base.product.flip());
  for (auto& t : prec_orders) d.prec.push_back(std::move(t));
  for (auto& t : succ_orders) d.succ.push_back(std::move(t));
  d.base = std::move(base);
  return d;
}

CheckReport check_deformation(const TruncatedDeformation& d, CheckOptions o,
                              int max_order) {
  {
    auto base = check_hom_zinbiel(d.base, {o.force, false});
    if (!base.passed())
      throw precondition_error("check_deformation: base fails zinbiel check: " +
                               base.first().str());
  }
  const int n = d.dim();
  const int top = (max_order >= 1 && max_order <= d.order) ? max_order
                                                           : d.order;
  std::vector<detail::ProductOps> p_ops, s_ops;
  for (int i = 0; i <= d.order; ++i) {
    p_ops.emplace_back(d.prec[static_cast<std::size_t>(i)], d.base.twist);
    s_ops.emplace_back(d.succ[static_cast<std::size_t>(i)], d.base.twist);
  }

  CheckReport r;
  for (int ord = 1; ord <= top; ++ord) {
    const std::string suffix = ", n=" + std::to_string(ord);
    // (29): sum_{p+q=n} ( (x <_p y) <_q a(z) - a(x) <_p (y <_q z + y >_q z) )
    r.append(scan3(n, n, n, "Eq. (29)" + suffix, [&, ord](int i, int j, int k) {
      Vector d29(n);
      for (int p = 0; p <= ord; ++p) {
        const int q = ord - p;
        d29 += p_ops[q].right_tw[k].apply(p_ops[p].slice(i, j));
        d29 -= p_ops[p].left_tw[i].apply(p_ops[q].slice(j, k) +
                                         s_ops[q].slice(j, k));
      }
      return d29;
    }));
    // (30): sum_{p+q=n} ( (x >_p y) <_q a(z) - a(x) >_p (y <_q z) )
    r.append(scan3(n, n, n, "Eq. (30)" + suffix, [&, ord](int i, int j, int k) {
      Vector d30(n);
      for (int p = 0; p <= ord; ++p) {
        const int q = ord - p;
        d30 += p_ops[q].right_tw[k].apply(s_ops[p].slice(i, j));
        d30 -= s_ops[p].left_tw[i].apply(p_ops[q].slice(j, k));
      }
      return d30;
    }));
    // (31): sum_{p+q=n} ( a(x) >_p (y >_q z) - (x <_p y + x >_p y) >_q a(z) )
    r.append(scan3(n, n, n, "Eq. (31)" + suffix, [&, ord](int i, int j, int k) {
      Vector d31(n);
      for (int p = 0; p <= ord; ++p) {
        const int q = ord - p;
        d31 += s_ops[p].left_tw[i].apply(s_ops[q].slice(j, k));
        d31 -= s_ops[q].right_tw[k].apply(p_ops[p].slice(i, j) +
                                          s_ops[p].slice(i, j));
      }
      return d31;
    }));
  }
  if (!o.all) r.truncate_to_first();
  return r;
}

HomTwoProductAlgebra semiclassical_limit(const TruncatedDeformation& d) {
  if (d.order < 2)
    throw precondition_error(
        "semiclassical_limit: needs a deformation of order >= 2");
  auto inner = check_deformation(d, {false, false});
  if (!inner.passed())
    throw precondition_error("semiclassical_limit: " + inner.first().str());
  const Tensor3 star = d.succ[1] - d.prec[1].flip();
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson, d.base.product,
                                    star, d.base.twist);
}

std::vector<Vector> truncated_product(const TruncatedDeformation& d,
                                      const Vector& x, const Vector& y,
                                      bool succ_side) {
  if (x.dim() != d.dim() || y.dim() != d.dim())
    throw dimension_error("truncated_product: dimension mismatch");
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(d.order) + 1);
  const auto& tensors = succ_side ? d.succ : d.prec;
  for (const auto& t : tensors) out.push_back(apply_bilinear(t, x, y));
  return out;
}

}  // namespace homcheck
