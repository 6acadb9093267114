#include "admp/tensor.hpp"

namespace admp {

void require_same_field(Field a, Field b, const char* what) {
  if (!(a == b)) throw ModeMismatch(std::string(what) + ": " + a.name() + " vs " + b.name());
}

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

// ---- Vec ----

Vec::Vec(Field f, std::size_t dim) : f_(f), c_(dim, Scalar::zero(f)) {}

Vec Vec::basis(Field f, std::size_t dim, std::size_t i) {
  Vec v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  require_dim(dim(), o.dim(), "vector sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_dim(dim(), o.dim(), "vector difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec operator*(const Scalar& s, Vec v) {
  for (auto& c : v.c_) c *= s;
  return v;
}

bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

// ---- Matrix ----

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  require_dim(cols_, v.dim(), "matrix-vector product");
  Vec out(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec Matrix::column(std::size_t j) const {
  Vec out(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_dim(rows_, o.rows_, "matrix sum rows");
  require_dim(cols_, o.cols_, "matrix sum cols");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_dim(rows_, o.rows_, "matrix difference rows");
  require_dim(cols_, o.cols_, "matrix difference cols");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix operator-(Matrix a) {
  for (auto& s : a.e_) s = -s;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_dim(a.cols_, b.rows_, "matrix product");
  Matrix out(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& e : m.e_) e *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix family_at(const Family& f, const Vec& x) {
  require_dim(f.size(), x.dim(), "family evaluation");
  if (f.empty()) throw DimensionMismatch("empty family");
  Matrix out(x.field(), f[0].rows(), f[0].cols());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * f[i];
  return out;
}

// ---- cubes ----

Cube::Cube(Field f, std::size_t n) : f_(f), n_(n), e_(n * n * n, Scalar::zero(f)) {}

bool Cube::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const Cube& a, const Cube& b) { return a.dim() == b.dim() && a.data() == b.data(); }

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require_dim(n_, o.n_, "tensor sum");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  require_dim(n_, o.n_, "tensor difference");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Tensor3 operator*(const Scalar& s, Tensor3 t) {
  for (auto& e : t.e_) e *= s;
  return t;
}

Matrix Comultiplication::at(const Vec& x) const {
  require_dim(n_, x.dim(), "comultiplication argument");
  Matrix out(f_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) out(j, k) += x[i] * (*this)(i, j, k);
  }
  return out;
}

// ---- multiplication operators ----

Vec apply_mul(const MulTensor& m, const Vec& x, const Vec& y) {
  std::size_t n = m.dim();
  require_dim(n, x.dim(), "left factor");
  require_dim(n, y.dim(), "right factor");
  Vec out(m.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!m(i, j, k).is_zero()) out[k] += w * m(i, j, k);
    }
  }
  return out;
}

Matrix left_mult(const MulTensor& m, const Vec& x) {
  std::size_t n = m.dim();
  require_dim(n, x.dim(), "left multiplication");
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(k, j) += x[i] * m(i, j, k);
  }
  return out;
}

Matrix right_mult(const MulTensor& m, const Vec& x) {
  std::size_t n = m.dim();
  require_dim(n, x.dim(), "right multiplication");
  Matrix out(m.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) out(k, i) += x[j] * m(i, j, k);
  }
  return out;
}

Family left_family(const MulTensor& m) {
  Family f;
  for (std::size_t i = 0; i < m.dim(); ++i) f.push_back(left_mult(m, Vec::basis(m.field(), m.dim(), i)));
  return f;
}

Family right_family(const MulTensor& m) {
  Family f;
  for (std::size_t i = 0; i < m.dim(); ++i) f.push_back(right_mult(m, Vec::basis(m.field(), m.dim(), i)));
  return f;
}

namespace {

template <class Op>
MulTensor zip(const MulTensor& a, const MulTensor& b, Op op) {
  require_dim(a.dim(), b.dim(), "tensor combination");
  require_same_field(a.field(), b.field(), "tensor combination");
  std::size_t n = a.dim();
  MulTensor out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = op(a(i, j, k), b(i, j, k));
  return out;
}

}  // namespace

MulTensor operator+(const MulTensor& a, const MulTensor& b) {
  return zip(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

MulTensor operator-(const MulTensor& a, const MulTensor& b) {
  return zip(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

MulTensor scale(const Scalar& s, const MulTensor& m) {
  return zip(m, m, [&](const Scalar& x, const Scalar&) { return s * x; });
}

MulTensor opposite(const MulTensor& m) {
  std::size_t n = m.dim();
  MulTensor out(m.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = m(j, i, k);
  return out;
}

Matrix dual_map(const Matrix& t) { return t.transpose(); }

Family neg_dual_endo_family(const Family& f) {
  Family out;
  out.reserve(f.size());
  for (const auto& m : f) {
    if (!m.is_square()) throw DimensionMismatch("endomorphism family needs square matrices");
    out.push_back(-m.transpose());
  }
  return out;
}

// ---- tensor algebra ----

Matrix tensor2_apply(const Matrix& a, const Matrix& b, const Matrix& t) { return a * t * b.transpose(); }

Tensor3 apply_slot(const Matrix& a, const Tensor3& t, int slot) {
  std::size_t n = t.dim();
  require_dim(a.cols(), n, "slot operator");
  require_dim(a.rows(), n, "slot operator");
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = t(i, j, k);
        if (v.is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          switch (slot) {
            case 0: out(q, j, k) += a(q, i) * v; break;
            case 1: out(i, q, k) += a(q, j) * v; break;
            default: out(i, j, q) += a(q, k) * v; break;
          }
        }
      }
  return out;
}

Tensor3 tau12(const Tensor3& t) {
  std::size_t n = t.dim();
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(j, i, k) = t(i, j, k);
  return out;
}

Tensor3 tau23(const Tensor3& t) {
  std::size_t n = t.dim();
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, k, j) = t(i, j, k);
  return out;
}

Tensor3 outer(const Vec& u, const Matrix& t) {
  std::size_t n = u.dim();
  Tensor3 out(u.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = u[i] * t(j, k);
  }
  return out;
}

Tensor3 outer(const Matrix& t, const Vec& u) {
  std::size_t n = u.dim();
  Tensor3 out(u.field(), n);
  for (std::size_t k = 0; k < n; ++k) {
    if (u[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j, k) = t(i, j) * u[k];
  }
  return out;
}

std::string to_string(Slots s) {
  switch (s) {
    case Slots::s12_13: return "12.13";
    case Slots::s13_23: return "13.23";
    case Slots::s23_12: return "23.12";
    case Slots::s12_23: return "12.23";
    case Slots::s23_13: return "23.13";
    case Slots::s13_12: return "13.12";
  }
  return "?";
}

Tensor3 tensor3_product(const Matrix& r, const Matrix& s, const MulTensor& m, Slots slots) {
  std::size_t n = m.dim();
  require_dim(r.rows(), n, "r dimension");
  require_dim(s.rows(), n, "s dimension");
  require_same_field(r.field(), m.field(), "slot product");
  Tensor3 out(m.field(), n);
  // r = sum r(a,b) e_a (x) e_b, s = sum s(c,d) e_c (x) e_d; the product
  // multiplies the factors sharing a slot and passes the others through.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& rab = r(a, b);
      if (rab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar& scd = s(c, d);
          if (scd.is_zero()) continue;
          Scalar w = rab * scd;
          for (std::size_t q = 0; q < n; ++q) {
            switch (slots) {
              case Slots::s12_13: {  // a.c (x) b (x) d
                const Scalar& mq = m(a, c, q);
                if (!mq.is_zero()) out(q, b, d) += w * mq;
                break;
              }
              case Slots::s13_23: {  // a (x) c (x) b.d
                const Scalar& mq = m(b, d, q);
                if (!mq.is_zero()) out(a, c, q) += w * mq;
                break;
              }
              case Slots::s23_12: {  // c (x) a.d (x) b
                const Scalar& mq = m(a, d, q);
                if (!mq.is_zero()) out(c, q, b) += w * mq;
                break;
              }
              case Slots::s12_23: {  // a (x) b.c (x) d
                const Scalar& mq = m(b, c, q);
                if (!mq.is_zero()) out(a, q, d) += w * mq;
                break;
              }
              case Slots::s23_13: {  // c (x) a (x) b.d
                const Scalar& mq = m(b, d, q);
                if (!mq.is_zero()) out(c, a, q) += w * mq;
                break;
              }
              case Slots::s13_12: {  // a.c (x) d (x) b
                const Scalar& mq = m(a, c, q);
                if (!mq.is_zero()) out(q, d, b) += w * mq;
                break;
              }
            }
          }
        }
    }
  return out;
}

}  // namespace admp
