#include "homcheck/representation.hpp"

#include "homcheck/scan.hpp"

namespace homcheck {

Matrix action_of(const ActionMap& a, const Vector& x) {
  if (a.empty()) return Matrix(0, 0);
  Matrix m(a[0].rows(), a[0].cols());
  for (int r = 0; r < x.dim(); ++r) {
    if (x[r].is_zero()) continue;
    m += x[r] * a[static_cast<std::size_t>(r)];
  }
  return m;
}

namespace {

void require_action_shapes(int dim_a, const Matrix& beta,
                           const ActionMap& action) {
  if (beta.rows() != beta.cols()) throw dimension_error("beta must be square");
  if (static_cast<int>(action.size()) != dim_a)
    throw dimension_error("action map needs one matrix per basis element");
  for (const auto& m : action)
    if (m.rows() != beta.rows() || m.cols() != beta.rows())
      throw dimension_error("action matrices must be carrier_dim x carrier_dim");
}

void require_algebra(const CheckReport& r, const char* what) {
  if (!r.passed())
    throw precondition_error(std::string(what) + ": " + r.first().str());
}

ActionMap twisted_action(const ActionMap& action, const Matrix& twist) {
  ActionMap out;
  out.reserve(action.size());
  for (int i = 0; i < static_cast<int>(action.size()); ++i)
    out.push_back(action_of(action, twist.col(i)));
  return out;
}

// Eq. (2)/(8) shape: action(alpha(x)) o beta = beta o action(x).
std::vector<Violation> scan_twist_compat(const ActionMap& action,
                                         const Matrix& twist,
                                         const Matrix& beta,
                                         const std::string& label) {
  const int dim_a = static_cast<int>(action.size());
  const int dim_v = beta.rows();
  const ActionMap tw = twisted_action(action, twist);
  std::vector<Matrix> diff;
  diff.reserve(action.size());
  for (int i = 0; i < dim_a; ++i)
    diff.push_back(mat_mul(tw[i], beta) - mat_mul(beta, action[i]));
  return scan2(dim_a, dim_v, label,
               [&](int i, int u) { return diff[i].col(u); });
}

}  // namespace

Representation Representation::make(HomAlgebra algebra, Matrix beta,
                                    ActionMap action) {
  require_action_shapes(algebra.dim(), beta, action);
  return Representation{std::move(algebra), std::move(beta),
                        std::move(action)};
}

PoissonRepresentation PoissonRepresentation::make(HomTwoProductAlgebra algebra,
                                                  Matrix beta, ActionMap rho,
                                                  ActionMap mu) {
  require_action_shapes(algebra.dim(), beta, rho);
  require_action_shapes(algebra.dim(), beta, mu);
  return PoissonRepresentation{std::move(algebra), std::move(beta),
                               std::move(rho), std::move(mu)};
}

Representation PoissonRepresentation::comm_part() const {
  return Representation{
      HomAlgebra{Kind::commutative_hom_associative, algebra.productA,
                 algebra.twist},
      beta, mu};
}

Representation PoissonRepresentation::lie_part() const {
  return Representation{
      HomAlgebra{Kind::hom_lie, algebra.productB, algebra.twist}, beta, rho};
}

CheckReport check_rep_comm_assoc(const Representation& rep, CheckOptions o) {
  if (!o.force)
    require_algebra(check_hom_associative(rep.algebra, {false, false}),
                    "check_rep_comm_assoc: algebra fails its checker");
  const int dim_a = rep.algebra.dim();
  const int dim_v = rep.carrier_dim();
  const ActionMap tw = twisted_action(rep.action, rep.algebra.twist);

  CheckReport r;
  r.append(scan_twist_compat(rep.action, rep.algebra.twist, rep.beta,
                             "Eq. (2)"));
  // Eq. (3): mu(x.y) o beta = mu(alpha(x)) o mu(y)
  const Tensor3& t = rep.algebra.product;
  r.append(scan3(dim_a, dim_a, dim_v, "Eq. (3)", [&](int i, int j, int u) {
    const Matrix lhs = mat_mul(action_of(rep.action, t.slice(i, j)), rep.beta);
    const Matrix rhs = mat_mul(tw[i], rep.action[static_cast<std::size_t>(j)]);
    return lhs.col(u) - rhs.col(u);
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_rep_lie(const Representation& rep, CheckOptions o) {
  if (!o.force)
    require_algebra(check_hom_lie(rep.algebra, {false, false}),
                    "check_rep_lie: algebra fails its checker");
  const int dim_a = rep.algebra.dim();
  const int dim_v = rep.carrier_dim();
  const ActionMap tw = twisted_action(rep.action, rep.algebra.twist);

  CheckReport r;
  r.append(scan_twist_compat(rep.action, rep.algebra.twist, rep.beta,
                             "Eq. (8)"));
  // Eq. (9): rho([x,y]) o beta = rho(alpha(x)) o rho(y) - rho(alpha(y)) o rho(x)
  const Tensor3& t = rep.algebra.product;
  r.append(scan3(dim_a, dim_a, dim_v, "Eq. (9)", [&](int i, int j, int u) {
    const Matrix lhs = mat_mul(action_of(rep.action, t.slice(i, j)), rep.beta);
    const Matrix rhs =
        mat_mul(tw[i], rep.action[static_cast<std::size_t>(j)]) -
        mat_mul(tw[j], rep.action[static_cast<std::size_t>(i)]);
    return lhs.col(u) - rhs.col(u);
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_rep_poisson(const PoissonRepresentation& rep,
                              CheckOptions o) {
  if (!o.force)
    require_algebra(check_hom_poisson(rep.algebra, {false, false}),
                    "check_rep_poisson: algebra fails its checker");
  CheckOptions sub{true, true};
  CheckReport r;
  r.append(check_rep_comm_assoc(rep.comm_part(), sub));
  r.append(check_rep_lie(rep.lie_part(), sub));

  const int dim_a = rep.algebra.dim();
  const int dim_v = rep.carrier_dim();
  const Matrix& twist = rep.algebra.twist;
  const ActionMap mu_tw = twisted_action(rep.mu, twist);
  const ActionMap rho_tw = twisted_action(rep.rho, twist);
  const Tensor3& dot = rep.algebra.productA;
  const Tensor3& br = rep.algebra.productB;

  // Eq. (17): rho(x.y) o beta = mu(alpha(y)) o rho(x) + mu(alpha(x)) o rho(y)
  r.append(scan3(dim_a, dim_a, dim_v, "Eq. (17)", [&](int i, int j, int u) {
    const Matrix lhs = mat_mul(action_of(rep.rho, dot.slice(i, j)), rep.beta);
    const Matrix rhs = mat_mul(mu_tw[j], rep.rho[static_cast<std::size_t>(i)]) +
                       mat_mul(mu_tw[i], rep.rho[static_cast<std::size_t>(j)]);
    return lhs.col(u) - rhs.col(u);
  }));
  // Eq. (18): rho(alpha(x)) o mu(y) = mu(alpha(y)) o rho(x) + mu([x,y]) o beta
  r.append(scan3(dim_a, dim_a, dim_v, "Eq. (18)", [&](int i, int j, int u) {
    const Matrix lhs = mat_mul(rho_tw[i], rep.mu[static_cast<std::size_t>(j)]);
    const Matrix rhs = mat_mul(mu_tw[j], rep.rho[static_cast<std::size_t>(i)]) +
                       mat_mul(action_of(rep.mu, br.slice(i, j)), rep.beta);
    return lhs.col(u) - rhs.col(u);
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

namespace {

ActionMap left_multiplications(const Tensor3& t) {
  ActionMap a;
  a.reserve(static_cast<std::size_t>(t.dim()));
  for (int i = 0; i < t.dim(); ++i)
    a.push_back(detail::operator_of(t, Vector::unit(t.dim(), i), true));
  return a;
}

}  // namespace

Representation regular_representation(const HomAlgebra& a) {
  if (a.kind != Kind::commutative_hom_associative && a.kind != Kind::hom_lie)
    throw kind_error(
        "regular_representation: defined for commutative Hom-associative and "
        "Hom-Lie algebras");
  require_algebra(check_by_kind(a, {false, false}),
                  "regular_representation: algebra fails its checker");
  return Representation{a, a.twist, left_multiplications(a.product)};
}

PoissonRepresentation regular_representation(const HomTwoProductAlgebra& a) {
  if (a.kind != PairKind::hom_poisson)
    throw kind_error("regular_representation: expected a Hom-Poisson algebra");
  require_algebra(check_hom_poisson(a, {false, false}),
                  "regular_representation: algebra fails its checker");
  return PoissonRepresentation{a, a.twist, left_multiplications(a.productB),
                               left_multiplications(a.productA)};
}

PoissonRepresentation prepoisson_representation(
    const HomTwoProductAlgebra& pp) {
  if (pp.kind != PairKind::hom_pre_poisson)
    throw kind_error(
        "prepoisson_representation: expected a Hom-pre-Poisson algebra");
  require_algebra(check_hom_pre_poisson(pp, {false, false}),
                  "prepoisson_representation: algebra fails its checker");
  // Sub-adjacent products, built here to avoid a cycle with construct.cpp.
  const Tensor3 dot = pp.productA + pp.productA.flip();
  const Tensor3 br = pp.productB - pp.productB.flip();
  auto poisson = HomTwoProductAlgebra::make(PairKind::hom_poisson, dot, br,
                                            pp.twist);
  return PoissonRepresentation{std::move(poisson), pp.twist,
                               left_multiplications(pp.productB),
                               left_multiplications(pp.productA)};
}

namespace {

// Shared core of the dual constructions: x -> sign (beta^-2 action(alpha x))^T.
ActionMap dual_action(const ActionMap& action, const Matrix& twist,
                      const Matrix& beta, bool negate) {
  const Matrix beta_inv = mat_inverse(beta);
  const Matrix beta_inv2 = mat_mul(beta_inv, beta_inv);
  ActionMap out;
  out.reserve(action.size());
  for (int i = 0; i < static_cast<int>(action.size()); ++i) {
    Matrix m = mat_mul(beta_inv2, action_of(action, twist.col(i))).transpose();
    out.push_back(negate ? -m : m);
  }
  return out;
}

}  // namespace

Representation dual_rep_comm_assoc(const Representation& rep) {
  auto inner = check_rep_comm_assoc(rep, {false, false});
  if (!inner.passed())
    throw precondition_error("dual_rep_comm_assoc: " + inner.first().str());
  return Representation{
      rep.algebra, mat_inverse(rep.beta).transpose(),
      dual_action(rep.action, rep.algebra.twist, rep.beta, false)};
}

Representation dual_rep_lie(const Representation& rep) {
  auto inner = check_rep_lie(rep, {false, false});
  if (!inner.passed())
    throw precondition_error("dual_rep_lie: " + inner.first().str());
  return Representation{
      rep.algebra, mat_inverse(rep.beta).transpose(),
      dual_action(rep.action, rep.algebra.twist, rep.beta, true)};
}

PoissonRepresentation dual_rep_poisson(const PoissonRepresentation& rep) {
  auto inner = check_rep_poisson(rep, {false, false});
  if (!inner.passed())
    throw precondition_error("dual_rep_poisson: " + inner.first().str());
  return PoissonRepresentation{
      rep.algebra, mat_inverse(rep.beta).transpose(),
      dual_action(rep.rho, rep.algebra.twist, rep.beta, true),
      dual_action(rep.mu, rep.algebra.twist, rep.beta, false)};
}

}  // namespace homcheck
