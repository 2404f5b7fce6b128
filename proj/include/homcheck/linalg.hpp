#pragma once

#include <vector>

#include "homcheck/rational.hpp"

namespace homcheck {

/// Coordinate vector over the rationals.
struct Vector {
  std::vector<Rational> e;

  Vector() = default;
  explicit Vector(int dim) : e(static_cast<std::size_t>(dim)) {}
  Vector(std::initializer_list<Rational> init) : e(init) {}

  int dim() const { return static_cast<int>(e.size()); }
  Rational& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const {
    return e[static_cast<std::size_t>(i)];
  }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  Vector operator-() const;
  friend bool operator==(const Vector&, const Vector&) = default;

  static Vector unit(int dim, int i);
  std::string str() const;  // "(0, 1, -2/3)"
};

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return a_[idx(r, c)]; }
  const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }

  Vector col(int c) const;
  Vector row(int r) const;
  Vector apply(const Vector& v) const;  // matrix * column vector
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  Matrix operator-() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Exact inverse; throws singular_error (the algebra or representation is
/// not regular) when none exists.
Matrix mat_inverse(const Matrix& a);

/// Exact kernel basis in reduced row-echelon pivot order; empty when the
/// kernel is trivial.
std::vector<Vector> solve_nullspace(const Matrix& a);

/// Reduced row echelon form; pivot column indices appended to `pivots`.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

/// Solve a x = b exactly; throws singular_error if inconsistent and
/// dimension_error on shape mismatch. `a` need not be square but must have
/// full column rank for a unique answer; we only call it in that regime.
Vector solve_linear(const Matrix& a, const Vector& b);

/// Structure constants of one bilinear product: entry (i, j, k) is the
/// coefficient of e_k in e_i * e_j.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }

  Rational& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
  const Rational& operator()(int i, int j, int k) const {
    return a_[idx(i, j, k)];
  }

  /// e_i * e_j as a coordinate vector.
  Vector slice(int i, int j) const;
  void set_slice(int i, int j, const Vector& v);

  bool is_zero() const;
  Tensor3 flip() const;  // (i,j,k) -> (j,i,k)
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

  /// Post-compose the product with a linear map: (m ∘ *)(x, y) = m(x * y).
  Tensor3 post_compose(const Matrix& m) const;

  /// Block sum: products act componentwise, cross terms vanish.
  static Tensor3 block_sum(const Tensor3& a, const Tensor3& b);

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_ = 0;
  std::vector<Rational> a_;
};

/// z_k = sum_{i,j} x_i y_j t(i,j,k). Throws dimension_error on mismatch.
Vector apply_bilinear(const Tensor3& t, const Vector& x, const Vector& y);

Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace homcheck
