#include "homcheck/operators.hpp"

#include <algorithm>

#include "homcheck/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcheck {

namespace {

void require_pass(const CheckReport& r, const char* what) {
  if (!r.passed())
    throw precondition_error(std::string(what) + ": " + r.first().str());
}

void require_operator_shape(int dim_a, int dim_v, const Matrix& T,
                            const char* what) {
  if (T.rows() != dim_a || T.cols() != dim_v)
    throw dimension_error(std::string(what) + ": T must be dim_A x dim_V");
}

std::vector<Violation> scan_intertwiner(const Matrix& T, const Matrix& beta,
                                        const Matrix& alpha,
                                        const std::string& label) {
  const Matrix diff = mat_mul(T, beta) - mat_mul(alpha, T);
  return scan1(T.cols(), label, [&](int u) { return diff.col(u); });
}

// Eq. (36): T(u).T(v) = T( mu(T(beta^-1 u)) v + mu(T(beta^-1 v)) u )
std::vector<Violation> scan_quadratic_comm(const Tensor3& dot,
                                           const ActionMap& mu,
                                           const Matrix& T,
                                           const Matrix& beta_inv,
                                           Exec exec = default_exec()) {
  const int dim_v = T.cols();
  const Matrix tb = mat_mul(T, beta_inv);
  std::vector<Matrix> act(static_cast<std::size_t>(dim_v));
  for (int u = 0; u < dim_v; ++u) act[u] = action_of(mu, tb.col(u));
  return scan2(dim_v, dim_v, "Eq. (36)", [&](int u, int v) {
    const Vector lhs = apply_bilinear(dot, T.col(u), T.col(v));
    const Vector rhs = T.apply(act[u].col(v) + act[v].col(u));
    return lhs - rhs;
  }, exec);
}

// Eq. (38): [T(u), T(v)] = T( rho(T(beta^-1 u)) v - rho(T(beta^-1 v)) u )
std::vector<Violation> scan_quadratic_lie(const Tensor3& br,
                                          const ActionMap& rho,
                                          const Matrix& T,
                                          const Matrix& beta_inv,
                                          Exec exec = default_exec()) {
  const int dim_v = T.cols();
  const Matrix tb = mat_mul(T, beta_inv);
  std::vector<Matrix> act(static_cast<std::size_t>(dim_v));
  for (int u = 0; u < dim_v; ++u) act[u] = action_of(rho, tb.col(u));
  return scan2(dim_v, dim_v, "Eq. (38)", [&](int u, int v) {
    const Vector lhs = apply_bilinear(br, T.col(u), T.col(v));
    const Vector rhs = T.apply(act[u].col(v) - act[v].col(u));
    return lhs - rhs;
  }, exec);
}

}  // namespace

OOperator OOperator::make(Representation rep, Matrix T) {
  require_operator_shape(rep.algebra.dim(), rep.carrier_dim(), T,
                         "OOperator");
  auto vs = scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (35)");
  if (!vs.empty())
    throw validation_error("operator does not intertwine the twists, " +
                           vs.front().str());
  return OOperator{std::move(rep), std::move(T)};
}

PoissonOOperator PoissonOOperator::make(PoissonRepresentation rep, Matrix T) {
  require_operator_shape(rep.algebra.dim(), rep.carrier_dim(), T,
                         "PoissonOOperator");
  auto vs = scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (35)");
  if (!vs.empty())
    throw validation_error("operator does not intertwine the twists, " +
                           vs.front().str());
  return PoissonOOperator{std::move(rep), std::move(T)};
}

OOperator PoissonOOperator::comm_part() const {
  return OOperator{rep.comm_part(), T};
}

OOperator PoissonOOperator::lie_part() const {
  return OOperator{rep.lie_part(), T};
}

CheckReport check_o_operator_comm(const Representation& rep, const Matrix& T,
                                  CheckOptions o) {
  if (!o.force)
    require_pass(check_rep_comm_assoc(rep, {false, false}),
                 "check_o_operator_comm: representation fails its checker");
  require_operator_shape(rep.algebra.dim(), rep.carrier_dim(), T,
                         "check_o_operator_comm");
  const Matrix beta_inv = mat_inverse(rep.beta);
  CheckReport r;
  r.append(scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (35)"));
  r.append(scan_quadratic_comm(rep.algebra.product, rep.action, T, beta_inv));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_o_operator_comm(const OOperator& op, CheckOptions o) {
  return check_o_operator_comm(op.rep, op.T, o);
}

CheckReport check_o_operator_lie(const Representation& rep, const Matrix& T,
                                 CheckOptions o) {
  if (!o.force)
    require_pass(check_rep_lie(rep, {false, false}),
                 "check_o_operator_lie: representation fails its checker");
  require_operator_shape(rep.algebra.dim(), rep.carrier_dim(), T,
                         "check_o_operator_lie");
  const Matrix beta_inv = mat_inverse(rep.beta);
  CheckReport r;
  r.append(scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (37)"));
  r.append(scan_quadratic_lie(rep.algebra.product, rep.action, T, beta_inv));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_o_operator_lie(const OOperator& op, CheckOptions o) {
  return check_o_operator_lie(op.rep, op.T, o);
}

CheckReport check_o_operator_poisson(const PoissonRepresentation& rep,
                                     const Matrix& T, CheckOptions o) {
  if (!o.force)
    require_pass(check_rep_poisson(rep, {false, false}),
                 "check_o_operator_poisson: representation fails its checker");
  require_operator_shape(rep.algebra.dim(), rep.carrier_dim(), T,
                         "check_o_operator_poisson");
  const Matrix beta_inv = mat_inverse(rep.beta);
  CheckReport r;
  r.append(scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (35)"));
  r.append(scan_quadratic_comm(rep.algebra.productA, rep.mu, T, beta_inv));
  r.append(scan_intertwiner(T, rep.beta, rep.algebra.twist, "Eq. (37)"));
  r.append(scan_quadratic_lie(rep.algebra.productB, rep.rho, T, beta_inv));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_o_operator_poisson(const PoissonOOperator& op,
                                     CheckOptions o) {
  return check_o_operator_poisson(op.rep, op.T, o);
}

namespace {

Tensor3 induced_tensor(const ActionMap& action, const Matrix& T,
                       const Matrix& beta_inv) {
  const int dim_v = T.cols();
  const Matrix tb = mat_mul(T, beta_inv);
  Tensor3 t(dim_v);
  for (int u = 0; u < dim_v; ++u) {
    const Matrix act = action_of(action, tb.col(u));
    for (int v = 0; v < dim_v; ++v) t.set_slice(u, v, act.col(v));
  }
  return t;
}

}  // namespace

HomAlgebra induced_zinbiel(const OOperator& op) {
  require_pass(check_o_operator_comm(op, {false, false}), "induced_zinbiel");
  return HomAlgebra::make(
      Kind::hom_zinbiel,
      induced_tensor(op.rep.action, op.T, mat_inverse(op.rep.beta)),
      op.rep.beta);
}

HomAlgebra induced_prelie(const OOperator& op) {
  require_pass(check_o_operator_lie(op, {false, false}), "induced_prelie");
  return HomAlgebra::make(
      Kind::hom_pre_lie,
      induced_tensor(op.rep.action, op.T, mat_inverse(op.rep.beta)),
      op.rep.beta);
}

HomTwoProductAlgebra induced_prepoisson(const PoissonOOperator& op) {
  require_pass(check_o_operator_poisson(op, {false, false}),
               "induced_prepoisson");
  const Matrix beta_inv = mat_inverse(op.rep.beta);
  return HomTwoProductAlgebra::make(
      PairKind::hom_pre_poisson, induced_tensor(op.rep.mu, op.T, beta_inv),
      induced_tensor(op.rep.rho, op.T, beta_inv), op.rep.beta);
}

ImageStructure image_structure(const PoissonOOperator& op) {
  const HomTwoProductAlgebra induced = induced_prepoisson(op);
  const int dim_v = op.T.cols();

  // Well-definedness of the transport: products against the kernel of T
  // must land back in the kernel.
  const auto kernel = solve_nullspace(op.T);
  for (std::size_t ki = 0; ki < kernel.size(); ++ki) {
    for (int u = 0; u < dim_v; ++u) {
      const Vector eu = Vector::unit(dim_v, u);
      for (const Tensor3* t : {&induced.productA, &induced.productB}) {
        if (!op.T.apply(apply_bilinear(*t, kernel[ki], eu)).is_zero() ||
            !op.T.apply(apply_bilinear(*t, eu, kernel[ki])).is_zero())
          throw error(
              "image_structure: transport ill-defined at kernel vector " +
              kernel[ki].str() + " against e" + std::to_string(u + 1));
      }
    }
  }

  // Basis of T(V): images of the pivot columns of T (row reduction finds the
  // leftmost independent set, which is what makes the output deterministic).
  std::vector<int> pivots;
  rref(op.T, &pivots);
  const int rank = static_cast<int>(pivots.size());
  Matrix basis(op.T.rows(), rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < op.T.rows(); ++r) basis(r, c) = op.T(r, pivots[c]);

  Tensor3 ta(rank), tb(rank);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      ta.set_slice(a, b,
                   solve_linear(basis, op.T.apply(induced.productA.slice(
                                           pivots[a], pivots[b]))));
      tb.set_slice(a, b,
                   solve_linear(basis, op.T.apply(induced.productB.slice(
                                           pivots[a], pivots[b]))));
    }
  Matrix twist(rank, rank);
  for (int a = 0; a < rank; ++a) {
    const Vector img = op.rep.algebra.twist.apply(basis.col(a));
    const Vector c = solve_linear(basis, img);
    for (int r = 0; r < rank; ++r) twist(r, a) = c[r];
  }
  return ImageStructure{
      HomTwoProductAlgebra::make(PairKind::hom_pre_poisson, std::move(ta),
                                 std::move(tb), std::move(twist)),
      std::move(pivots), std::move(basis)};
}

HomTwoProductAlgebra compatible_from_invertible(const PoissonOOperator& op) {
  require_pass(check_o_operator_poisson(op, {false, false}),
               "compatible_from_invertible");
  const Matrix t_inv = mat_inverse(op.T);  // singular_error if not square/invertible
  const Matrix a_inv = mat_inverse(op.rep.algebra.twist);
  const int n = op.rep.algebra.dim();
  Tensor3 diamond(n), star(n);
  for (int i = 0; i < n; ++i) {
    const Matrix mu_i = action_of(op.rep.mu, a_inv.col(i));
    const Matrix rho_i = action_of(op.rep.rho, a_inv.col(i));
    for (int j = 0; j < n; ++j) {
      diamond.set_slice(i, j, op.T.apply(mu_i.apply(t_inv.col(j))));
      star.set_slice(i, j, op.T.apply(rho_i.apply(t_inv.col(j))));
    }
  }
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson,
                                    std::move(diamond), std::move(star),
                                    op.rep.algebra.twist);
}

TwoCocycle TwoCocycle::make(Matrix omega) {
  if (omega.rows() != omega.cols())
    throw dimension_error("cocycle matrix must be square");
  if (!(omega.transpose() == -omega))
    throw validation_error("cocycle matrix must be skew-symmetric");
  return TwoCocycle{std::move(omega)};
}

Rational TwoCocycle::eval(const Vector& x, const Vector& y) const {
  Rational acc;
  for (int i = 0; i < omega.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < omega.cols(); ++j) {
      if (omega(i, j).is_zero() || y[j].is_zero()) continue;
      acc += x[i] * omega(i, j) * y[j];
    }
  }
  return acc;
}

CheckReport check_two_cocycle(const HomTwoProductAlgebra& a,
                              const TwoCocycle& w, CheckOptions o) {
  if (!o.force)
    require_pass(check_hom_poisson(a, {false, false}),
                 "check_two_cocycle: algebra fails check_hom_poisson");
  if (w.omega.rows() != a.dim())
    throw dimension_error("check_two_cocycle: omega has the wrong size");
  const int n = a.dim();
  std::vector<Vector> tw(static_cast<std::size_t>(n)),
      unit(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    tw[i] = a.twist.col(i);
    unit[i] = Vector::unit(n, i);
  }
  auto cyclic = [&](const Tensor3& t, int i, int j, int k) {
    Vector d(1);
    d[0] = w.eval(t.slice(i, j), tw[k]) + w.eval(t.slice(j, k), tw[i]) +
           w.eval(t.slice(k, i), tw[j]);
    return d;
  };
  CheckReport r;
  r.append(scan3(n, n, n, "Eq. (42)", [&](int i, int j, int k) {
    return cyclic(a.productA, i, j, k);
  }));
  r.append(scan3(n, n, n, "Eq. (43)", [&](int i, int j, int k) {
    return cyclic(a.productB, i, j, k);
  }));
  r.append(scan2(n, n, "Eq. (44)", [&](int i, int j) {
    Vector d(1);
    d[0] = w.eval(unit[i], unit[j]) - w.eval(tw[i], tw[j]);
    return d;
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

HomTwoProductAlgebra prepoisson_from_cocycle(const HomTwoProductAlgebra& a,
                                             const TwoCocycle& w,
                                             CocycleVariant variant) {
  require_pass(check_two_cocycle(a, w, {false, false}),
               "prepoisson_from_cocycle");
  const Matrix sharp_inv = mat_inverse(w.omega.transpose());
  const Matrix a_inv = mat_inverse(a.twist);
  const Matrix a_inv2 = mat_mul(a_inv, a_inv);
  const Matrix& bracket_twist =
      variant == CocycleVariant::eq45 ? a_inv2 : a_inv;
  const int n = a.dim();

  // omega(x<>y, -) and omega(x*y, -) are determined as functionals; the
  // products are read off through (omega-sharp)^-1.
  Tensor3 diamond(n), star(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector ej = Vector::unit(n, j);
      Vector phi(n), psi(n);
      for (int k = 0; k < n; ++k) {
        phi[k] = w.eval(
            ej, apply_bilinear(a.productA, a_inv.col(i), a_inv2.col(k)));
        psi[k] = -w.eval(ej, apply_bilinear(a.productB, a_inv.col(i),
                                            bracket_twist.col(k)));
      }
      diamond.set_slice(i, j, sharp_inv.apply(phi));
      star.set_slice(i, j, sharp_inv.apply(psi));
    }
  return HomTwoProductAlgebra::make(PairKind::hom_pre_poisson,
                                    std::move(diamond), std::move(star),
                                    a.twist);
}

AverageOperator AverageOperator::make(Matrix S, const Matrix& twist) {
  if (S.rows() != twist.rows() || S.cols() != twist.cols())
    throw dimension_error("average operator has the wrong size");
  if (!(mat_mul(S, twist) == mat_mul(twist, S)))
    throw validation_error(
        "average operator does not commute with the twist (Eq. (49))");
  return AverageOperator{std::move(S)};
}

namespace {

std::vector<Violation> scan_average(const Tensor3& t, const Matrix& S,
                                    const Matrix& s_alpha_inv,
                                    const std::string& label) {
  const int n = t.dim();
  return scan2(n, n, label, [&](int i, int j) {
    const Vector lhs = apply_bilinear(t, S.col(i), S.col(j));
    const Vector rhs =
        S.apply(apply_bilinear(t, s_alpha_inv.col(i), Vector::unit(n, j)));
    return lhs - rhs;
  });
}

std::vector<Violation> scan_twist_commute(const Matrix& S, const Matrix& twist,
                                          const std::string& label) {
  const Matrix diff = mat_mul(S, twist) - mat_mul(twist, S);
  return scan1(S.cols(), label, [&](int i) { return diff.col(i); });
}

}  // namespace

CheckReport check_average_operator(const HomAlgebra& a, const Matrix& S,
                                   CheckOptions o) {
  if (!o.force) {
    if (a.kind != Kind::commutative_hom_associative && a.kind != Kind::hom_lie)
      throw kind_error(
          "check_average_operator: expected a commutative Hom-associative or "
          "Hom-Lie algebra");
    require_pass(check_by_kind(a, {false, false}),
                 "check_average_operator: algebra fails its checker");
  }
  const Matrix s_alpha_inv = mat_mul(S, mat_inverse(a.twist));
  const bool lie = a.kind == Kind::hom_lie;
  CheckReport r;
  r.append(scan_twist_commute(S, a.twist, lie ? "Eq. (52)" : "Eq. (49)"));
  r.append(scan_average(a.product, S, s_alpha_inv,
                        lie ? "Eq. (53)" : "Eq. (50)"));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_average_operator(const HomTwoProductAlgebra& a,
                                   const Matrix& S, CheckOptions o) {
  if (!o.force) {
    if (a.kind != PairKind::hom_poisson)
      throw kind_error("check_average_operator: expected a Hom-Poisson algebra");
    require_pass(check_hom_poisson(a, {false, false}),
                 "check_average_operator: algebra fails its checker");
  }
  const Matrix s_alpha_inv = mat_mul(S, mat_inverse(a.twist));
  CheckReport r;
  r.append(scan_twist_commute(S, a.twist, "Eq. (49)"));
  r.append(scan_average(a.productA, S, s_alpha_inv, "Eq. (50)"));
  r.append(scan_average(a.productB, S, s_alpha_inv, "Eq. (53)"));
  if (!o.all) r.truncate_to_first();
  return r;
}

namespace {

Tensor3 average_induced_tensor(const Tensor3& t, const Matrix& s_alpha_inv) {
  const int n = t.dim();
  Tensor3 out(n);
  for (int i = 0; i < n; ++i) {
    const Matrix op = detail::operator_of(t, s_alpha_inv.col(i), true);
    for (int j = 0; j < n; ++j) out.set_slice(i, j, op.col(j));
  }
  return out;
}

}  // namespace

HomAlgebra induced_permutative(const HomAlgebra& a, const AverageOperator& s) {
  if (a.kind != Kind::commutative_hom_associative)
    throw kind_error(
        "induced_permutative: expected a commutative Hom-associative algebra");
  require_pass(check_average_operator(a, s.S, {false, false}),
               "induced_permutative");
  return HomAlgebra::make(
      Kind::hom_permutative,
      average_induced_tensor(a.product, mat_mul(s.S, mat_inverse(a.twist))),
      a.twist);
}

HomAlgebra induced_leibniz(const HomAlgebra& a, const AverageOperator& s) {
  if (a.kind != Kind::hom_lie)
    throw kind_error("induced_leibniz: expected a Hom-Lie algebra");
  require_pass(check_average_operator(a, s.S, {false, false}),
               "induced_leibniz");
  return HomAlgebra::make(
      Kind::hom_leibniz,
      average_induced_tensor(a.product, mat_mul(s.S, mat_inverse(a.twist))),
      a.twist);
}

HomTwoProductAlgebra induced_dual_prepoisson(const HomTwoProductAlgebra& a,
                                             const AverageOperator& s) {
  if (a.kind != PairKind::hom_poisson)
    throw kind_error("induced_dual_prepoisson: expected a Hom-Poisson algebra");
  require_pass(check_average_operator(a, s.S, {false, false}),
               "induced_dual_prepoisson");
  const Matrix s_alpha_inv = mat_mul(s.S, mat_inverse(a.twist));
  return HomTwoProductAlgebra::make(
      PairKind::dual_hom_pre_poisson,
      average_induced_tensor(a.productA, s_alpha_inv),
      average_induced_tensor(a.productB, s_alpha_inv), a.twist);
}

namespace {

// Exact solution space of T o beta = alpha o T, as matrices.
std::vector<Matrix> intertwiner_space(const Matrix& alpha, const Matrix& beta,
                                      int dim_a, int dim_v) {
  Matrix k(dim_a * dim_v, dim_a * dim_v);
  for (int r = 0; r < dim_a; ++r)
    for (int c = 0; c < dim_v; ++c) {
      const int row = r * dim_v + c;
      for (int s = 0; s < dim_v; ++s) k(row, r * dim_v + s) += beta(s, c);
      for (int s = 0; s < dim_a; ++s) k(row, s * dim_v + c) -= alpha(r, s);
    }
  std::vector<Matrix> basis;
  for (const Vector& v : solve_nullspace(k)) {
    Matrix m(dim_a, dim_v);
    for (int r = 0; r < dim_a; ++r)
      for (int c = 0; c < dim_v; ++c) m(r, c) = v[r * dim_v + c];
    basis.push_back(std::move(m));
  }
  return basis;
}

constexpr long kMaxGrid = 2'000'000;

template <typename Quadratic>
std::vector<Matrix> grid_search(const std::vector<Matrix>& basis, int bound,
                                int dim_a, int dim_v,
                                const Quadratic& passes) {
  const int m = static_cast<int>(basis.size());
  const long radix = 2L * bound + 1;
  long total = 1;
  for (int t = 0; t < m; ++t) {
    if (total > kMaxGrid / radix)
      throw validation_error(
          "search grid too large; lower the bound or the dimensions");
    total *= radix;
  }

  std::vector<std::pair<long, Matrix>> hits;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::pair<long, Matrix>> local;
#pragma omp for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      Matrix t(dim_a, dim_v);
      long rest = idx;
      for (int d = m - 1; d >= 0; --d) {
        const long coeff = rest % radix - bound;
        rest /= radix;
        if (coeff != 0) t += Rational(coeff) * basis[static_cast<std::size_t>(d)];
      }
      if (passes(t)) local.emplace_back(idx, std::move(t));
    }
#pragma omp critical
    for (auto& h : local) hits.push_back(std::move(h));
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
#else
  for (long idx = 0; idx < total; ++idx) {
    Matrix t(dim_a, dim_v);
    long rest = idx;
    for (int d = m - 1; d >= 0; --d) {
      const long coeff = rest % radix - bound;
      rest /= radix;
      if (coeff != 0) t += Rational(coeff) * basis[static_cast<std::size_t>(d)];
    }
    if (passes(t)) hits.emplace_back(idx, std::move(t));
  }
#endif
  std::vector<Matrix> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

}  // namespace

std::vector<OOperator> search_o_operators(const Representation& rep,
                                          int bound) {
  if (bound < 0) throw validation_error("search bound must be >= 0");
  const bool lie = rep.algebra.kind == Kind::hom_lie;
  require_pass(lie ? check_rep_lie(rep, {false, false})
                   : check_rep_comm_assoc(rep, {false, false}),
               "search_o_operators: representation fails its checker");
  const Matrix beta_inv = mat_inverse(rep.beta);
  mat_inverse(rep.algebra.twist);  // regularity demanded up front

  const auto basis = intertwiner_space(rep.algebra.twist, rep.beta,
                                       rep.algebra.dim(), rep.carrier_dim());
  auto passes = [&](const Matrix& t) {
    return lie ? scan_quadratic_lie(rep.algebra.product, rep.action, t,
                                    beta_inv, Exec::serial)
                     .empty()
               : scan_quadratic_comm(rep.algebra.product, rep.action, t,
                                     beta_inv, Exec::serial)
                     .empty();
  };
  std::vector<OOperator> out;
  for (Matrix& t : grid_search(basis, bound, rep.algebra.dim(),
                               rep.carrier_dim(), passes))
    out.push_back(OOperator{rep, std::move(t)});
  return out;
}

std::vector<PoissonOOperator> search_o_operators(
    const PoissonRepresentation& rep, int bound) {
  if (bound < 0) throw validation_error("search bound must be >= 0");
  require_pass(check_rep_poisson(rep, {false, false}),
               "search_o_operators: representation fails its checker");
  const Matrix beta_inv = mat_inverse(rep.beta);
  mat_inverse(rep.algebra.twist);

  const auto basis = intertwiner_space(rep.algebra.twist, rep.beta,
                                       rep.algebra.dim(), rep.carrier_dim());
  auto passes = [&](const Matrix& t) {
    return scan_quadratic_comm(rep.algebra.productA, rep.mu, t, beta_inv,
                               Exec::serial)
               .empty() &&
           scan_quadratic_lie(rep.algebra.productB, rep.rho, t, beta_inv,
                              Exec::serial)
               .empty();
  };
  std::vector<PoissonOOperator> out;
  for (Matrix& t : grid_search(basis, bound, rep.algebra.dim(),
                               rep.carrier_dim(), passes))
    out.push_back(PoissonOOperator{rep, std::move(t)});
  return out;
}

}  // namespace homcheck
