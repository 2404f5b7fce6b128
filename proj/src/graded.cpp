#include "homcheck/graded.hpp"

#include "homcheck/scan.hpp"

namespace homcheck {

Rational koszul_sign(long p, long q) {
  const bool odd = (p % 2 != 0) && (q % 2 != 0);
  return odd ? Rational(-1) : Rational(1);
}

std::string kind_name(GradedKind k) {
  return k == GradedKind::hom_gerstenhaber ? "hom-gerstenhaber"
                                           : "hom-pre-gerstenhaber";
}

GradedAlgebra GradedAlgebra::make(GradedKind kind, GradedBasis basis,
                                  Tensor3 product0, Tensor3 productM1,
                                  Matrix twist) {
  const int n = basis.dim();
  if (product0.dim() != n || productM1.dim() != n || twist.rows() != n ||
      twist.cols() != n)
    throw dimension_error("graded algebra: shapes do not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!product0(i, j, k).is_zero() &&
            basis.deg(k) != basis.deg(i) + basis.deg(j))
          throw grading_error("degree-0 product not homogeneous at (e" +
                              std::to_string(i + 1) + ",e" +
                              std::to_string(j + 1) + ")");
        if (!productM1(i, j, k).is_zero() &&
            basis.deg(k) != basis.deg(i) + basis.deg(j) - 1)
          throw grading_error("degree-(-1) product not homogeneous at (e" +
                              std::to_string(i + 1) + ",e" +
                              std::to_string(j + 1) + ")");
      }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!twist(r, c).is_zero() && basis.deg(r) != basis.deg(c))
        throw grading_error("twist is not of degree 0");
  for (const Tensor3* t : {&product0, &productM1}) {
    auto vs = multiplicativity_violations(*t, twist, "multiplicativity");
    if (!vs.empty())
      throw twist_error("twist not multiplicative, " + vs.front().str());
  }
  return GradedAlgebra{kind, std::move(basis), std::move(product0),
                       std::move(productM1), std::move(twist)};
}

namespace {

void require_kind(const GradedAlgebra& g, GradedKind k, const CheckOptions& o,
                  const char* checker) {
  if (o.force || g.kind == k) return;
  throw kind_error(std::string(checker) + ": algebra is tagged " +
                   kind_name(g.kind) + " (use force to override)");
}

}  // namespace

CheckReport check_hom_gerstenhaber(const GradedAlgebra& g, CheckOptions o) {
  require_kind(g, GradedKind::hom_gerstenhaber, o, "check_hom_gerstenhaber");
  detail::ProductOps dot(g.product0, g.twist);
  detail::ProductOps br(g.productM1, g.twist);
  const GradedBasis& gb = g.basis;
  const int n = g.dim();

  CheckReport r;
  // x.y = (-1)^(|x||y|) y.x
  r.append(scan2(n, n, "graded commutativity", [&](int i, int j) {
    return dot.slice(i, j) -
           koszul_sign(gb.deg(i), gb.deg(j)) * dot.slice(j, i);
  }));
  // alpha(x).(y.z) = (x.y).alpha(z)
  r.append(scan3(n, n, n, "graded Hom-associativity", [&](int i, int j, int k) {
    return dot.left_tw[i].apply(dot.slice(j, k)) -
           dot.right_tw[k].apply(dot.slice(i, j));
  }));
  // [x,y] = -(-1)^((|x|-1)(|y|-1)) [y,x]
  r.append(scan2(n, n, "graded skew-symmetry", [&](int i, int j) {
    return br.slice(i, j) +
           koszul_sign(gb.deg(i) - 1, gb.deg(j) - 1) * br.slice(j, i);
  }));
  // [alpha(x),[y,z]] = [[x,y],alpha(z)] + (-1)^((|x|-1)(|y|-1)) [alpha(y),[x,z]]
  r.append(scan3(n, n, n, "graded Hom-Jacobi", [&](int i, int j, int k) {
    Vector d = br.left_tw[i].apply(br.slice(j, k));
    d -= br.right_tw[k].apply(br.slice(i, j));
    d -= koszul_sign(gb.deg(i) - 1, gb.deg(j) - 1) *
         br.left_tw[j].apply(br.slice(i, k));
    return d;
  }));
  // [alpha(x), y.z] = [x,y].alpha(z) + (-1)^((|x|-1)|y|) alpha(y).[x,z]
  r.append(scan3(n, n, n, "graded Leibniz rule", [&](int i, int j, int k) {
    Vector d = br.left_tw[i].apply(dot.slice(j, k));
    d -= dot.right_tw[k].apply(br.slice(i, j));
    d -= koszul_sign(gb.deg(i) - 1, gb.deg(j)) *
         dot.left_tw[j].apply(br.slice(i, k));
    return d;
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

CheckReport check_hom_pre_gerstenhaber(const GradedAlgebra& g,
                                       CheckOptions o) {
  require_kind(g, GradedKind::hom_pre_gerstenhaber, o,
               "check_hom_pre_gerstenhaber");
  detail::ProductOps z(g.product0, g.twist);   // graded zinbiel product
  detail::ProductOps p(g.productM1, g.twist);  // graded pre-Lie product
  const GradedBasis& gb = g.basis;
  const int n = g.dim();

  CheckReport r;
  // (26) alpha(x)<>(y<>z) = (-1)^(|x||y|) (y<>x)<>alpha(z) + (x<>y)<>alpha(z)
  r.append(scan3(n, n, n, "Eq. (26)", [&](int i, int j, int k) {
    Vector d = z.left_tw[i].apply(z.slice(j, k));
    d -= koszul_sign(gb.deg(i), gb.deg(j)) * z.right_tw[k].apply(z.slice(j, i));
    d -= z.right_tw[k].apply(z.slice(i, j));
    return d;
  }));
  // (x*y)*alpha(z) - alpha(x)*(y*z)
  //   = (-1)^((|x|-1)(|y|-1)) ((y*x)*alpha(z) - alpha(y)*(x*z))
  r.append(scan3(n, n, n, "graded Hom-pre-Lie identity",
                 [&](int i, int j, int k) {
                   Vector d = p.right_tw[k].apply(p.slice(i, j));
                   d -= p.left_tw[i].apply(p.slice(j, k));
                   const Rational s = koszul_sign(gb.deg(i) - 1, gb.deg(j) - 1);
                   d -= s * p.right_tw[k].apply(p.slice(j, i));
                   d += s * p.left_tw[j].apply(p.slice(i, k));
                   return d;
                 }));
  // (27) (x*y - (-1)^((|x|-1)(|y|-1)) y*x)<>alpha(z)
  //        = alpha(x)*(y<>z) - (-1)^((|x|-1)|y|) alpha(y)<>(x*z)
  r.append(scan3(n, n, n, "Eq. (27)", [&](int i, int j, int k) {
    const Rational s1 = koszul_sign(gb.deg(i) - 1, gb.deg(j) - 1);
    const Rational s2 = koszul_sign(gb.deg(i) - 1, gb.deg(j));
    Vector d = z.right_tw[k].apply(p.slice(i, j) - s1 * p.slice(j, i));
    d -= p.left_tw[i].apply(z.slice(j, k));
    d += s2 * z.left_tw[j].apply(p.slice(i, k));
    return d;
  }));
  // (28) (x<>y + (-1)^(|x||y|) y<>x)*alpha(z)
  //        = alpha(x)<>(y*z) + (-1)^(|x||y|) alpha(y)<>(x*z)
  r.append(scan3(n, n, n, "Eq. (28)", [&](int i, int j, int k) {
    const Rational s = koszul_sign(gb.deg(i), gb.deg(j));
    Vector d = p.right_tw[k].apply(z.slice(i, j) + s * z.slice(j, i));
    d -= z.left_tw[i].apply(p.slice(j, k));
    d -= s * z.left_tw[j].apply(p.slice(i, k));
    return d;
  }));
  if (!o.all) r.truncate_to_first();
  return r;
}

GradedAlgebra subadjacent_gerstenhaber(const GradedAlgebra& g) {
  {
    auto inner = check_hom_pre_gerstenhaber(g, {false, false});
    if (!inner.passed())
      throw precondition_error("subadjacent_gerstenhaber: " +
                               inner.first().str());
  }
  const int n = g.dim();
  Tensor3 dot(n), br(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational s0 = koszul_sign(g.basis.deg(i), g.basis.deg(j));
      const Rational s1 = koszul_sign(g.basis.deg(i) - 1, g.basis.deg(j) - 1);
      dot.set_slice(i, j, g.product0.slice(i, j) + s0 * g.product0.slice(j, i));
      br.set_slice(i, j,
                   g.productM1.slice(i, j) - s1 * g.productM1.slice(j, i));
    }
  return GradedAlgebra::make(GradedKind::hom_gerstenhaber, g.basis,
                             std::move(dot), std::move(br), g.twist);
}

}  // namespace homcheck
