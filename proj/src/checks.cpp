#include "homcheck/checks.hpp"

#include "homcheck/scan.hpp"

namespace homcheck {

namespace {

using detail::ProductOps;

void require_kind(const HomAlgebra& a, std::initializer_list<Kind> ks,
                  const CheckOptions& o, const char* checker) {
  if (o.force) return;
  for (Kind k : ks)
    if (a.kind == k) return;
  throw kind_error(std::string(checker) + ": algebra is tagged " +
                   kind_name(a.kind) + " (use force to override)");
}

void require_kind(const HomTwoProductAlgebra& a, PairKind k,
                  const CheckOptions& o, const char* checker) {
  if (o.force || a.kind == k) return;
  throw kind_error(std::string(checker) + ": algebra is tagged " +
                   kind_name(a.kind) + " (use force to override)");
}

CheckReport finish(CheckReport r, const CheckOptions& o) {
  if (!o.all) r.truncate_to_first();
  return r;
}

}  // namespace

namespace detail {

std::vector<Violation> scan_commutativity(const ProductOps& p) {
  const int n = p.t->dim();
  return scan2(n, n, "commutativity",
               [&](int i, int j) { return p.slice(i, j) - p.slice(j, i); });
}

std::vector<Violation> scan_hom_associative(const ProductOps& p) {
  const int n = p.t->dim();
  // alpha(x).(y.z) = (x.y).alpha(z)
  return scan3(n, n, n, "Eq. (1)", [&](int i, int j, int k) {
    return p.left_tw[i].apply(p.slice(j, k)) -
           p.right_tw[k].apply(p.slice(i, j));
  });
}

std::vector<Violation> scan_skew_symmetry(const ProductOps& p) {
  const int n = p.t->dim();
  return scan2(n, n, "skew-symmetry",
               [&](int i, int j) { return p.slice(i, j) + p.slice(j, i); });
}

std::vector<Violation> scan_hom_jacobi(const ProductOps& p) {
  const int n = p.t->dim();
  // [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0
  return scan3(n, n, n, "Eq. (7)", [&](int i, int j, int k) {
    Vector d = p.left_tw[i].apply(p.slice(j, k));
    d += p.left_tw[j].apply(p.slice(k, i));
    d += p.left_tw[k].apply(p.slice(i, j));
    return d;
  });
}

std::vector<Violation> scan_hom_pre_lie(const ProductOps& p) {
  const int n = p.t->dim();
  // (x*y)*alpha(z) - alpha(x)*(y*z) = (y*x)*alpha(z) - alpha(y)*(x*z)
  return scan3(n, n, n, "Eq. (11)", [&](int i, int j, int k) {
    Vector d = p.right_tw[k].apply(p.slice(i, j) - p.slice(j, i));
    d -= p.left_tw[i].apply(p.slice(j, k));
    d += p.left_tw[j].apply(p.slice(i, k));
    return d;
  });
}

std::vector<Violation> scan_hom_zinbiel(const ProductOps& p) {
  const int n = p.t->dim();
  // alpha(x)<>(y<>z) = (x<>y)<>alpha(z) + (y<>x)<>alpha(z)
  return scan3(n, n, n, "Eq. (12)", [&](int i, int j, int k) {
    return p.left_tw[i].apply(p.slice(j, k)) -
           p.right_tw[k].apply(p.slice(i, j) + p.slice(j, i));
  });
}

std::vector<Violation> scan_leibniz_rule(const ProductOps& dot,
                                         const ProductOps& br) {
  const int n = dot.t->dim();
  // [alpha(x), y.z] = [x,y].alpha(z) + alpha(y).[x,z]
  return scan3(n, n, n, "Eq. (16)", [&](int i, int j, int k) {
    Vector d = br.left_tw[i].apply(dot.slice(j, k));
    d -= dot.right_tw[k].apply(br.slice(i, j));
    d -= dot.left_tw[j].apply(br.slice(i, k));
    return d;
  });
}

}  // namespace detail

CheckReport check_hom_associative(const HomAlgebra& a, CheckOptions o) {
  require_kind(a,
               {Kind::hom_associative, Kind::commutative_hom_associative}, o,
               "check_hom_associative");
  ProductOps p(a.product, a.twist);
  CheckReport r;
  r.append(detail::scan_hom_associative(p));
  if (a.kind == Kind::commutative_hom_associative || o.force)
    r.append(detail::scan_commutativity(p));
  return finish(std::move(r), o);
}

CheckReport check_hom_lie(const HomAlgebra& a, CheckOptions o) {
  require_kind(a, {Kind::hom_lie}, o, "check_hom_lie");
  ProductOps p(a.product, a.twist);
  CheckReport r;
  r.append(detail::scan_skew_symmetry(p));
  r.append(detail::scan_hom_jacobi(p));
  return finish(std::move(r), o);
}

CheckReport check_hom_pre_lie(const HomAlgebra& a, CheckOptions o) {
  require_kind(a, {Kind::hom_pre_lie}, o, "check_hom_pre_lie");
  ProductOps p(a.product, a.twist);
  CheckReport r;
  r.append(detail::scan_hom_pre_lie(p));
  return finish(std::move(r), o);
}

CheckReport check_hom_zinbiel(const HomAlgebra& a, CheckOptions o) {
  require_kind(a, {Kind::hom_zinbiel}, o, "check_hom_zinbiel");
  ProductOps p(a.product, a.twist);
  CheckReport r;
  r.append(detail::scan_hom_zinbiel(p));
  return finish(std::move(r), o);
}

CheckReport check_hom_permutative(const HomAlgebra& a, CheckOptions o) {
  require_kind(a, {Kind::hom_permutative}, o, "check_hom_permutative");
  ProductOps p(a.product, a.twist);
  const int n = a.dim();
  CheckReport r;
  // alpha(x)•(y•z) = (x•y)•alpha(z) = (y•x)•alpha(z), split as two identities
  r.append(scan3(n, n, n, "Eq. (48a)", [&](int i, int j, int k) {
    return p.left_tw[i].apply(p.slice(j, k)) -
           p.right_tw[k].apply(p.slice(i, j));
  }));
  r.append(scan3(n, n, n, "Eq. (48b)", [&](int i, int j, int k) {
    return p.right_tw[k].apply(p.slice(i, j) - p.slice(j, i));
  }));
  return finish(std::move(r), o);
}

CheckReport check_hom_leibniz(const HomAlgebra& a, CheckOptions o) {
  require_kind(a, {Kind::hom_leibniz}, o, "check_hom_leibniz");
  ProductOps p(a.product, a.twist);
  const int n = a.dim();
  CheckReport r;
  // {{x,y}, alpha(z)} = {alpha(x), {y,z}} - {alpha(y), {x,z}}
  r.append(scan3(n, n, n, "Eq. (51)", [&](int i, int j, int k) {
    Vector d = p.right_tw[k].apply(p.slice(i, j));
    d -= p.left_tw[i].apply(p.slice(j, k));
    d += p.left_tw[j].apply(p.slice(i, k));
    return d;
  }));
  return finish(std::move(r), o);
}

CheckReport check_hom_dendriform(const HomTwoProductAlgebra& a,
                                 CheckOptions o) {
  require_kind(a, PairKind::hom_dendriform, o, "check_hom_dendriform");
  ProductOps prec(a.productA, a.twist);
  ProductOps succ(a.productB, a.twist);
  const int n = a.dim();
  CheckReport r;
  // (13) (x<y)<alpha(z) = alpha(x)<(y<z + y>z)
  r.append(scan3(n, n, n, "Eq. (13)", [&](int i, int j, int k) {
    return prec.right_tw[k].apply(prec.slice(i, j)) -
           prec.left_tw[i].apply(prec.slice(j, k) + succ.slice(j, k));
  }));
  // (14) (x>y)<alpha(z) = alpha(x)>(y<z)
  r.append(scan3(n, n, n, "Eq. (14)", [&](int i, int j, int k) {
    return prec.right_tw[k].apply(succ.slice(i, j)) -
           succ.left_tw[i].apply(prec.slice(j, k));
  }));
  // (15) alpha(x)>(y>z) = (x<y + x>y)>alpha(z)
  r.append(scan3(n, n, n, "Eq. (15)", [&](int i, int j, int k) {
    return succ.left_tw[i].apply(succ.slice(j, k)) -
           succ.right_tw[k].apply(prec.slice(i, j) + succ.slice(i, j));
  }));
  return finish(std::move(r), o);
}

CheckReport check_hom_poisson(const HomTwoProductAlgebra& a, CheckOptions o) {
  require_kind(a, PairKind::hom_poisson, o, "check_hom_poisson");
  ProductOps dot(a.productA, a.twist);
  ProductOps br(a.productB, a.twist);
  CheckReport r;
  r.append(detail::scan_hom_associative(dot));
  r.append(detail::scan_commutativity(dot));
  r.append(detail::scan_skew_symmetry(br));
  r.append(detail::scan_hom_jacobi(br));
  r.append(detail::scan_leibniz_rule(dot, br));
  return finish(std::move(r), o);
}

CheckReport check_hom_pre_poisson(const HomTwoProductAlgebra& a,
                                  CheckOptions o) {
  require_kind(a, PairKind::hom_pre_poisson, o, "check_hom_pre_poisson");
  ProductOps z(a.productA, a.twist);  // zinbiel product
  ProductOps p(a.productB, a.twist);  // pre-Lie product
  const int n = a.dim();
  CheckReport r;
  r.append(detail::scan_hom_zinbiel(z));
  r.append(detail::scan_hom_pre_lie(p));
  // (21) (x*y - y*x)<>alpha(z) = alpha(x)*(y<>z) - alpha(y)<>(x*z)
  r.append(scan3(n, n, n, "Eq. (21)", [&](int i, int j, int k) {
    Vector d = z.right_tw[k].apply(p.slice(i, j) - p.slice(j, i));
    d -= p.left_tw[i].apply(z.slice(j, k));
    d += z.left_tw[j].apply(p.slice(i, k));
    return d;
  }));
  // (22) (x<>y + y<>x)*alpha(z) = alpha(x)<>(y*z) + alpha(y)<>(x*z)
  r.append(scan3(n, n, n, "Eq. (22)", [&](int i, int j, int k) {
    Vector d = p.right_tw[k].apply(z.slice(i, j) + z.slice(j, i));
    d -= z.left_tw[i].apply(p.slice(j, k));
    d -= z.left_tw[j].apply(p.slice(i, k));
    return d;
  }));
  return finish(std::move(r), o);
}

CheckReport check_dual_hom_pre_poisson(const HomTwoProductAlgebra& a,
                                       CheckOptions o) {
  require_kind(a, PairKind::dual_hom_pre_poisson, o,
               "check_dual_hom_pre_poisson");
  ProductOps perm(a.productA, a.twist);
  ProductOps lb(a.productB, a.twist);
  const int n = a.dim();
  CheckReport r;
  {
    CheckOptions sub{true, true};
    HomAlgebra pa{Kind::hom_permutative, a.productA, a.twist};
    HomAlgebra pb{Kind::hom_leibniz, a.productB, a.twist};
    r.append(check_hom_permutative(pa, sub));
    r.append(check_hom_leibniz(pb, sub));
  }
  // (54) {alpha(x), y•z} = {x,y}•alpha(z) + alpha(y)•{x,z}
  r.append(scan3(n, n, n, "Eq. (54)", [&](int i, int j, int k) {
    Vector d = lb.left_tw[i].apply(perm.slice(j, k));
    d -= perm.right_tw[k].apply(lb.slice(i, j));
    d -= perm.left_tw[j].apply(lb.slice(i, k));
    return d;
  }));
  // (55) {x•y, alpha(z)} = alpha(x)•{y,z} + alpha(y)•{x,z}
  r.append(scan3(n, n, n, "Eq. (55)", [&](int i, int j, int k) {
    Vector d = lb.right_tw[k].apply(perm.slice(i, j));
    d -= perm.left_tw[i].apply(lb.slice(j, k));
    d -= perm.left_tw[j].apply(lb.slice(i, k));
    return d;
  }));
  // (56) {x,y}•alpha(z) + {y,x}•alpha(z) = 0
  r.append(scan3(n, n, n, "Eq. (56)", [&](int i, int j, int k) {
    return perm.right_tw[k].apply(lb.slice(i, j) + lb.slice(j, i));
  }));
  return finish(std::move(r), o);
}

CheckReport check_by_kind(const HomAlgebra& a, CheckOptions o) {
  switch (a.kind) {
    case Kind::hom_associative:
    case Kind::commutative_hom_associative:
      return check_hom_associative(a, o);
    case Kind::hom_lie: return check_hom_lie(a, o);
    case Kind::hom_pre_lie: return check_hom_pre_lie(a, o);
    case Kind::hom_zinbiel: return check_hom_zinbiel(a, o);
    case Kind::hom_permutative: return check_hom_permutative(a, o);
    case Kind::hom_leibniz: return check_hom_leibniz(a, o);
  }
  throw error("unreachable");
}

CheckReport check_by_kind(const HomTwoProductAlgebra& a, CheckOptions o) {
  switch (a.kind) {
    case PairKind::hom_poisson: return check_hom_poisson(a, o);
    case PairKind::hom_pre_poisson: return check_hom_pre_poisson(a, o);
    case PairKind::hom_dendriform: return check_hom_dendriform(a, o);
    case PairKind::dual_hom_pre_poisson:
      return check_dual_hom_pre_poisson(a, o);
  }
  throw error("unreachable");
}

namespace {

std::vector<Violation> scan_product_morphism(const Tensor3& src,
                                             const Tensor3& dst,
                                             const Matrix& f,
                                             const std::string& label) {
  const int n = src.dim();
  std::vector<Vector> f_col(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f_col[i] = f.col(i);
  return scan2(n, n, label, [&](int i, int j) {
    return f.apply(src.slice(i, j)) - apply_bilinear(dst, f_col[i], f_col[j]);
  });
}

std::vector<Violation> scan_twist_morphism(const Matrix& src_twist,
                                           const Matrix& dst_twist,
                                           const Matrix& f) {
  const int n = src_twist.rows();
  const Matrix lhs = mat_mul(f, src_twist);
  const Matrix rhs = mat_mul(dst_twist, f);
  return scan1(n, "Eq. (25)",
               [&](int i) { return lhs.col(i) - rhs.col(i); });
}

void require_morphism_shape(int src_dim, int dst_dim, const Matrix& f) {
  if (f.rows() != dst_dim || f.cols() != src_dim)
    throw dimension_error("morphism matrix must be dst_dim x src_dim");
}

}  // namespace

CheckReport check_morphism(const HomAlgebra& src, const HomAlgebra& dst,
                           const Matrix& f, CheckOptions o) {
  if (!o.force && src.kind != dst.kind)
    throw kind_error("check_morphism: kinds differ");
  require_morphism_shape(src.dim(), dst.dim(), f);
  CheckReport r;
  r.append(scan_product_morphism(src.product, dst.product, f, "Eq. (23)"));
  r.append(scan_twist_morphism(src.twist, dst.twist, f));
  return finish(std::move(r), o);
}

CheckReport check_morphism(const HomTwoProductAlgebra& src,
                           const HomTwoProductAlgebra& dst, const Matrix& f,
                           CheckOptions o) {
  if (!o.force && src.kind != dst.kind)
    throw kind_error("check_morphism: kinds differ");
  require_morphism_shape(src.dim(), dst.dim(), f);
  CheckReport r;
  r.append(scan_product_morphism(src.productA, dst.productA, f, "Eq. (23)"));
  r.append(scan_product_morphism(src.productB, dst.productB, f, "Eq. (24)"));
  r.append(scan_twist_morphism(src.twist, dst.twist, f));
  return finish(std::move(r), o);
}

}  // namespace homcheck
