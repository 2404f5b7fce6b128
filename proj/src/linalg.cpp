#include "homcheck/linalg.hpp"

#include <sstream>

namespace homcheck {

bool Vector::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  if (dim() != o.dim()) throw dimension_error("vector sum: dimension mismatch");
  for (int i = 0; i < dim(); ++i) e[i] += o.e[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (dim() != o.dim()) throw dimension_error("vector diff: dimension mismatch");
  for (int i = 0; i < dim(); ++i) e[i] -= o.e[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : e) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = -e[i];
  return r;
}

Vector Vector::unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << e[i];
  }
  os << ")";
  return os.str();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols_)
      throw dimension_error("ragged matrix initializer");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::col(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(int r) const {
  Vector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw dimension_error("matrix apply: dimension mismatch");
  Vector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc;
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c).is_zero() || v[c].is_zero()) continue;
      acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_error("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_error("matrix diff: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = -m(r, c);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw dimension_error("mat_mul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

Matrix mat_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw dimension_error("mat_inverse: not square");
  const int n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw singular_error("mat_inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const Rational p = m(col, col);
    for (int c = 0; c < n; ++c) {
      m(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (int c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int piv = -1;
    while (lead < m.cols()) {
      for (int rr = r; rr < m.rows(); ++rr)
        if (!m(rr, lead).is_zero()) {
          piv = rr;
          break;
        }
      if (piv >= 0) break;
      ++lead;
    }
    if (piv < 0) break;
    if (piv != r)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(r, c));
    const Rational p = m(r, lead);
    for (int c = 0; c < m.cols(); ++c) m(r, c) /= p;
    for (int rr = 0; rr < m.rows(); ++rr) {
      if (rr == r || m(rr, lead).is_zero()) continue;
      const Rational f = m(rr, lead);
      for (int c = 0; c < m.cols(); ++c) m(rr, c) -= f * m(r, c);
    }
    if (pivots) pivots->push_back(lead);
    ++lead;
  }
  return m;
}

std::vector<Vector> solve_nullspace(const Matrix& a) {
  std::vector<int> pivots;
  const Matrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v[pivots[row]] = -r(static_cast<int>(row), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim())
    throw dimension_error("solve_linear: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<int> pivots;
  const Matrix r = rref(aug, &pivots);
  Vector x(a.cols());
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] == a.cols())
      throw singular_error("solve_linear: inconsistent system");
    x[pivots[row]] = r(static_cast<int>(row), a.cols());
  }
  // Free columns would make the solution non-unique; callers guarantee full
  // column rank, but verify the candidate anyway.
  if (static_cast<int>(pivots.size()) != a.cols()) {
    Vector check = a.apply(x);
    if (!(check == b)) throw singular_error("solve_linear: underdetermined");
  }
  return x;
}

Vector Tensor3::slice(int i, int j) const {
  Vector v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void Tensor3::set_slice(int i, int j, const Vector& v) {
  for (int k = 0; k < dim_; ++k) (*this)(i, j, k) = v[k];
}

bool Tensor3::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Tensor3 Tensor3::flip() const {
  Tensor3 t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) t(i, j, k) = (*this)(j, i, k);
  return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dim_ != o.dim_) throw dimension_error("tensor sum: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dim_ != o.dim_) throw dimension_error("tensor diff: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3 Tensor3::post_compose(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw dimension_error("post_compose: shape mismatch");
  Tensor3 t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t.set_slice(i, j, m.apply(slice(i, j)));
  return t;
}

Tensor3 Tensor3::block_sum(const Tensor3& a, const Tensor3& b) {
  Tensor3 t(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) t(i, j, k) = a(i, j, k);
  const int off = a.dim();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        t(off + i, off + j, off + k) = b(i, j, k);
  return t;
}

Vector apply_bilinear(const Tensor3& t, const Vector& x, const Vector& y) {
  if (x.dim() != t.dim() || y.dim() != t.dim())
    throw dimension_error("apply_bilinear: dimension mismatch");
  Vector z(t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < t.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      for (int k = 0; k < t.dim(); ++k) {
        if (t(i, j, k).is_zero()) continue;
        z[k] += c * t(i, j, k);
      }
    }
  }
  return z;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

}  // namespace homcheck
