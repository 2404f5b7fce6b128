#include "homcheck/algebra.hpp"

#include "homcheck/scan.hpp"

namespace homcheck {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::hom_associative: return "hom-associative";
    case Kind::commutative_hom_associative: return "commutative-hom-associative";
    case Kind::hom_lie: return "hom-lie";
    case Kind::hom_pre_lie: return "hom-pre-lie";
    case Kind::hom_zinbiel: return "hom-zinbiel";
    case Kind::hom_permutative: return "hom-permutative";
    case Kind::hom_leibniz: return "hom-leibniz";
  }
  return "?";
}

std::string kind_name(PairKind k) {
  switch (k) {
    case PairKind::hom_poisson: return "hom-poisson";
    case PairKind::hom_pre_poisson: return "hom-pre-poisson";
    case PairKind::hom_dendriform: return "hom-dendriform";
    case PairKind::dual_hom_pre_poisson: return "dual-hom-pre-poisson";
  }
  return "?";
}

std::vector<Violation> multiplicativity_violations(const Tensor3& product,
                                                   const Matrix& twist,
                                                   const std::string& label) {
  const int n = product.dim();
  std::vector<Vector> tw_col(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tw_col[i] = twist.col(i);
  return scan2(n, n, label, [&](int i, int j) {
    return twist.apply(product.slice(i, j)) -
           apply_bilinear(product, tw_col[i], tw_col[j]);
  });
}

namespace {

void require_shapes(const Tensor3& t, const Matrix& twist) {
  if (twist.rows() != t.dim() || twist.cols() != t.dim())
    throw dimension_error("twist must be dim x dim");
}

void require_multiplicative(const Tensor3& t, const Matrix& twist,
                            const std::string& label) {
  auto vs = multiplicativity_violations(t, twist, label);
  if (!vs.empty()) throw twist_error("twist not multiplicative, " + vs.front().str());
}

}  // namespace

bool HomAlgebra::regular() const {
  try {
    mat_inverse(twist);
    return true;
  } catch (const singular_error&) {
    return false;
  }
}

HomAlgebra HomAlgebra::make(Kind kind, Tensor3 product, Matrix twist) {
  require_shapes(product, twist);
  require_multiplicative(product, twist, "multiplicativity");
  return HomAlgebra{kind, std::move(product), std::move(twist)};
}

HomAlgebra HomAlgebra::make_unchecked(Kind kind, Tensor3 product,
                                      Matrix twist) {
  require_shapes(product, twist);
  return HomAlgebra{kind, std::move(product), std::move(twist)};
}

bool HomTwoProductAlgebra::regular() const {
  try {
    mat_inverse(twist);
    return true;
  } catch (const singular_error&) {
    return false;
  }
}

HomTwoProductAlgebra HomTwoProductAlgebra::make(PairKind kind, Tensor3 a,
                                                Tensor3 b, Matrix twist) {
  if (a.dim() != b.dim())
    throw dimension_error("products must share one dimension");
  require_shapes(a, twist);
  require_multiplicative(a, twist, "multiplicativity (productA)");
  require_multiplicative(b, twist, "multiplicativity (productB)");
  return HomTwoProductAlgebra{kind, std::move(a), std::move(b),
                              std::move(twist)};
}

HomTwoProductAlgebra HomTwoProductAlgebra::make_unchecked(PairKind kind,
                                                          Tensor3 a, Tensor3 b,
                                                          Matrix twist) {
  if (a.dim() != b.dim())
    throw dimension_error("products must share one dimension");
  require_shapes(a, twist);
  return HomTwoProductAlgebra{kind, std::move(a), std::move(b),
                              std::move(twist)};
}

CheckReport check_multiplicativity(const HomAlgebra& a) {
  CheckReport r;
  r.append(multiplicativity_violations(a.product, a.twist, "multiplicativity"));
  return r;
}

CheckReport check_multiplicativity(const HomTwoProductAlgebra& a) {
  CheckReport r;
  r.append(multiplicativity_violations(a.productA, a.twist,
                                       "multiplicativity (productA)"));
  r.append(multiplicativity_violations(a.productB, a.twist,
                                       "multiplicativity (productB)"));
  return r;
}

namespace detail {

Matrix operator_of(const Tensor3& t, const Vector& x, bool left) {
  const int n = t.dim();
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (x[r].is_zero()) continue;
    for (int other = 0; other < n; ++other)
      for (int k = 0; k < n; ++k) {
        const Rational& c = left ? t(r, other, k) : t(other, r, k);
        if (!c.is_zero()) m(k, other) += x[r] * c;
      }
  }
  return m;
}

ProductOps::ProductOps(const Tensor3& tensor, const Matrix& twist)
    : t(&tensor) {
  const int n = tensor.dim();
  left.reserve(n);
  right.reserve(n);
  left_tw.reserve(n);
  right_tw.reserve(n);
  for (int i = 0; i < n; ++i) {
    left.push_back(operator_of(tensor, Vector::unit(n, i), true));
    right.push_back(operator_of(tensor, Vector::unit(n, i), false));
  }
  for (int i = 0; i < n; ++i) {
    const Vector a = twist.col(i);
    left_tw.push_back(operator_of(tensor, a, true));
    right_tw.push_back(operator_of(tensor, a, false));
  }
}

}  // namespace detail

}  // namespace homcheck
