#include "homcheck/construct.hpp"

#include "homcheck/checks.hpp"

namespace homcheck {

namespace {

void require_pass(const CheckReport& r, const char* what) {
  if (!r.passed())
    throw precondition_error(std::string(what) + ": " + r.first().str());
}

void require_identity_twist(const Matrix& twist, const char* what) {
  if (!twist.is_identity())
    throw precondition_error(std::string(what) +
                             ": base must carry the identity twist");
}

}  // namespace

HomAlgebra subadjacent_commutative(const HomAlgebra& z) {
  require_pass(check_hom_zinbiel(z), "subadjacent_commutative");
  return HomAlgebra::make(Kind::commutative_hom_associative,
                          z.product + z.product.flip(), z.twist);
}

HomAlgebra subadjacent_lie(const HomAlgebra& p) {
  require_pass(check_hom_pre_lie(p), "subadjacent_lie");
  return HomAlgebra::make(Kind::hom_lie, p.product - p.product.flip(),
                          p.twist);
}

DendriformSplit dendriform_split(const HomTwoProductAlgebra& d) {
  require_pass(check_hom_dendriform(d), "dendriform_split");
  const Tensor3& prec = d.productA;
  const Tensor3& succ = d.productB;
  return DendriformSplit{
      HomAlgebra::make(Kind::hom_associative, succ + prec, d.twist),
      HomAlgebra::make(Kind::hom_pre_lie, succ - prec.flip(), d.twist)};
}

HomTwoProductAlgebra subadjacent_poisson(const HomTwoProductAlgebra& pp) {
  require_pass(check_hom_pre_poisson(pp), "subadjacent_poisson");
  return HomTwoProductAlgebra::make(
      PairKind::hom_poisson, pp.productA + pp.productA.flip(),
      pp.productB - pp.productB.flip(), pp.twist);
}

HomAlgebra yau_twist(const HomAlgebra& base, const TwistSpec& endo) {
  require_identity_twist(base.twist, "yau_twist");
  require_pass(check_by_kind(base), "yau_twist");
  auto vs = multiplicativity_violations(base.product, endo, "endomorphism");
  if (!vs.empty())
    throw twist_error("yau_twist: endo not multiplicative, " +
                      vs.front().str());
  return HomAlgebra::make(base.kind, base.product.post_compose(endo), endo);
}

HomTwoProductAlgebra yau_twist(const HomTwoProductAlgebra& base,
                               const TwistSpec& endo) {
  require_identity_twist(base.twist, "yau_twist");
  require_pass(check_by_kind(base), "yau_twist");
  for (const Tensor3* t : {&base.productA, &base.productB}) {
    auto vs = multiplicativity_violations(*t, endo, "endomorphism");
    if (!vs.empty())
      throw twist_error("yau_twist: endo not multiplicative, " +
                        vs.front().str());
  }
  return HomTwoProductAlgebra::make(base.kind,
                                    base.productA.post_compose(endo),
                                    base.productB.post_compose(endo), endo);
}

HomAlgebra untwist(const HomAlgebra& h) {
  require_pass(check_by_kind(h), "untwist");
  const Matrix inv = mat_inverse(h.twist);
  return HomAlgebra::make(h.kind, h.product.post_compose(inv),
                          Matrix::identity(h.dim()));
}

HomTwoProductAlgebra untwist(const HomTwoProductAlgebra& h) {
  require_pass(check_by_kind(h), "untwist");
  const Matrix inv = mat_inverse(h.twist);
  return HomTwoProductAlgebra::make(h.kind, h.productA.post_compose(inv),
                                    h.productB.post_compose(inv),
                                    Matrix::identity(h.dim()));
}

HomTwoProductAlgebra direct_sum(const HomTwoProductAlgebra& a,
                                const HomTwoProductAlgebra& b) {
  if (a.kind != PairKind::hom_poisson || b.kind != PairKind::hom_poisson)
    throw kind_error("direct_sum: both summands must be Hom-Poisson");
  require_pass(check_hom_poisson(a), "direct_sum (left summand)");
  require_pass(check_hom_poisson(b), "direct_sum (right summand)");
  return HomTwoProductAlgebra::make(
      PairKind::hom_poisson, Tensor3::block_sum(a.productA, b.productA),
      Tensor3::block_sum(a.productB, b.productB),
      block_diag(a.twist, b.twist));
}

HomTwoProductAlgebra semidirect_product(const HomTwoProductAlgebra& a,
                                        const PoissonRepresentation& rep) {
  if (!(rep.algebra == a))
    throw precondition_error(
        "semidirect_product: representation is not over the given algebra");
  require_pass(check_rep_poisson(rep), "semidirect_product");

  const int n = a.dim();
  const int m = rep.carrier_dim();
  Tensor3 dot = Tensor3::block_sum(a.productA, Tensor3(m));
  Tensor3 br = Tensor3::block_sum(a.productB, Tensor3(m));
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < m; ++u) {
      const auto& mu_i = rep.mu[static_cast<std::size_t>(i)];
      const auto& rho_i = rep.rho[static_cast<std::size_t>(i)];
      for (int k = 0; k < m; ++k) {
        dot(i, n + u, n + k) = mu_i(k, u);   // mu(x)v
        dot(n + u, i, n + k) = mu_i(k, u);   // mu(y)u
        br(i, n + u, n + k) = rho_i(k, u);   // rho(x)v
        br(n + u, i, n + k) = -rho_i(k, u);  // -rho(y)u
      }
    }
  return HomTwoProductAlgebra::make(PairKind::hom_poisson, std::move(dot),
                                    std::move(br),
                                    block_diag(a.twist, rep.beta));
}

}  // namespace homcheck
