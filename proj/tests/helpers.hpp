#pragma once

#include <random>

#include "homcheck/algebra.hpp"
#include "homcheck/linalg.hpp"

// Test-only oracles, written independently of the library paths they check.

namespace oracle {

using namespace homcheck;

/// Plain triple loop, no sparsity shortcuts.
inline Matrix naive_mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Rational acc;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

/// Rank by fraction-free elimination (no pivot normalization), a different
/// route than the library rref.
inline int rank(Matrix m) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    for (int r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      const Rational p = m(row, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) * p - m(row, c) * f;
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Direct evaluation of a bilinear product on coordinates, used to confirm
/// that identities checked on basis tuples really hold on random vectors.
inline Vector eval(const Tensor3& t, const Vector& x, const Vector& y) {
  Vector z(t.dim());
  for (int k = 0; k < t.dim(); ++k) {
    Rational acc;
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) acc += x[i] * y[j] * t(i, j, k);
    z[k] = acc;
  }
  return z;
}

struct Rng {
  std::mt19937_64 gen{20240927};

  Rational rational(int max_num = 4, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(gen), den(gen));
  }

  Rational nonzero_rational(int max_num = 4) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> sign(0, 1);
    return Rational(sign(gen) ? num(gen) : -num(gen));
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen);
  }

  Vector vector(int dim, int max_num = 4) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rational(max_num);
    return v;
  }

  Matrix matrix(int rows, int cols, int max_num = 3) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rational(max_num);
    return m;
  }

  /// Random invertible matrix, built as a product of elementary operations.
  Matrix invertible(int n, int ops = 8) {
    Matrix m = Matrix::identity(n);
    for (int s = 0; s < ops; ++s) {
      const int r1 = integer(0, n - 1);
      const int r2 = integer(0, n - 1);
      if (r1 == r2) {
        const Rational sc = nonzero_rational(3);
        for (int c = 0; c < n; ++c) m(r1, c) *= sc;
      } else {
        const Rational f = rational(2);
        for (int c = 0; c < n; ++c) m(r1, c) += f * m(r2, c);
      }
    }
    return m;
  }
};

}  // namespace oracle

inline constexpr homcheck::CheckOptions kAll{false, true};
inline constexpr homcheck::CheckOptions kForceAll{true, true};
