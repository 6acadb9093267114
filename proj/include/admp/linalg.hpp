// Exact Gaussian elimination over the scalar field.
#pragma once

#include <optional>

#include "admp/tensor.hpp"

namespace admp {

struct RowEchelon {
  Matrix reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  Scalar det_factor;                  // product of pivots and row-swap signs (square input)
};

RowEchelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);
Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

// Solves a x = b. Free variables are set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace admp
