// Dense exact containers: vectors, matrices and n x n x n coefficient cubes.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "admp/scalar.hpp"

namespace admp {

class Vec {
 public:
  Vec() = default;
  Vec(Field f, std::size_t dim);
  static Vec basis(Field f, std::size_t dim, std::size_t i);

  Field field() const { return f_; }
  std::size_t dim() const { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }
  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v);
  friend bool operator==(const Vec& a, const Vec& b);

 private:
  Field f_;
  std::vector<Scalar> c_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// One matrix per basis element of the acting algebra: f[i] = rho(e_i).
using Family = std::vector<Matrix>;

// Evaluates a family at an arbitrary vector: sum_i x_i f[i].
Matrix family_at(const Family& f, const Vec& x);

// n x n x n coefficient storage shared by the typed tensors below.
class Cube {
 public:
  Cube() = default;
  Cube(Field f, std::size_t n);

  Field field() const { return f_; }
  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return e_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Scalar>& data() const { return e_; }
  bool is_zero() const;

 protected:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

bool operator==(const Cube& a, const Cube& b);

// e_i <> e_j = sum_k c(i,j,k) e_k.
class MulTensor : public Cube {
 public:
  using Cube::Cube;
};

// sum t(i,j,k) e_i (x) e_j (x) e_k.
class Tensor3 : public Cube {
 public:
  using Cube::Cube;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 t);
};

// alpha(e_i) = sum_{j,k} a(i,j,k) e_j (x) e_k.
class Comultiplication : public Cube {
 public:
  using Cube::Cube;
  // alpha(x) as an n x n coefficient matrix.
  Matrix at(const Vec& x) const;
};

Vec apply_mul(const MulTensor& m, const Vec& x, const Vec& y);
Matrix left_mult(const MulTensor& m, const Vec& x);
Matrix right_mult(const MulTensor& m, const Vec& x);
Family left_family(const MulTensor& m);
Family right_family(const MulTensor& m);

MulTensor operator+(const MulTensor& a, const MulTensor& b);
MulTensor operator-(const MulTensor& a, const MulTensor& b);
MulTensor scale(const Scalar& s, const MulTensor& m);
// (x, y) -> y <> x.
MulTensor opposite(const MulTensor& m);

Matrix dual_map(const Matrix& t);
// x -> -(f(x))^T.
Family neg_dual_endo_family(const Family& f);

// Rank-2 tensors are n x n coefficient matrices t(i,j) on e_i (x) e_j.
// (A (x) B) t = A t B^T.
Matrix tensor2_apply(const Matrix& a, const Matrix& b, const Matrix& t);
inline Matrix tau(const Matrix& t) { return t.transpose(); }

// Applies a to slot 0, 1 or 2 of a 3-tensor.
Tensor3 apply_slot(const Matrix& a, const Tensor3& t, int slot);
Tensor3 tau12(const Tensor3& t);
Tensor3 tau23(const Tensor3& t);
// u (x) t and t (x) u for u a vector and t a rank-2 tensor.
Tensor3 outer(const Vec& u, const Matrix& t);
Tensor3 outer(const Matrix& t, const Vec& u);

enum class Slots { s12_13, s13_23, s23_12, s12_23, s23_13, s13_12 };
std::string to_string(Slots s);

// Coefficients of r_ab <> s_cd for r, s in P (x) P, computed from closed
// formulas; the formal unit in r_13 etc. is never materialised.
Tensor3 tensor3_product(const Matrix& r, const Matrix& s, const MulTensor& m, Slots slots);

void require_same_field(Field a, Field b, const char* what);
void require_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace admp
