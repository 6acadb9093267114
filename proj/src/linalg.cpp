#include "admp/linalg.hpp"

namespace admp {

RowEchelon row_reduce(const Matrix& a) {
  Field f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  Scalar det = Scalar::one(f);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
      det = -det;
    }
    Scalar piv = m(row, col);
    det *= piv;
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) / piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots), det};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  RowEchelon e = row_reduce(a);
  if (e.pivots.size() < a.rows()) return Scalar::zero(a.field());
  return e.det_factor;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar::one(a.field());
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require_dim(a.rows(), b.dim(), "linear system");
  std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vec x(a.field(), n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

}  // namespace admp
