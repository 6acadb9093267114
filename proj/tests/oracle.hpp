// Independent expansion oracles: products of r12, r13, r23 computed by adjoining
// a formal unit to the algebra, and sums of pure tensors built element by element.
#pragma once

#include <array>
#include <vector>

#include "admp/tensor.hpp"

namespace admp::testing {

// The algebra extended by a unit symbol with index n.
class UnitalExtension {
 public:
  explicit UnitalExtension(const MulTensor& m) : m_(m), n_(m.dim()) {}
  std::size_t size() const { return n_ + 1; }
  // Coordinates of e_i * e_j in the extended basis.
  std::vector<Scalar> mul(std::size_t i, std::size_t j) const {
    Field f = m_.field();
    std::vector<Scalar> out(n_ + 1, Scalar::zero(f));
    if (i == n_) {
      out[j] = Scalar::one(f);
    } else if (j == n_) {
      out[i] = Scalar::one(f);
    } else {
      for (std::size_t k = 0; k < n_; ++k) out[k] = m_(i, j, k);
    }
    return out;
  }

 private:
  const MulTensor& m_;
  std::size_t n_;
};

// Dense tensor over the extended basis.
using Ext3 = std::vector<Scalar>;

inline std::size_t ext_index(std::size_t N, std::size_t a, std::size_t b, std::size_t c) { return (a * N + b) * N + c; }

// r placed in legs (p, q) with the unit symbol in the remaining leg.
inline Ext3 lift(const Matrix& r, int p, int q) {
  std::size_t n = r.rows(), N = n + 1;
  Ext3 t(N * N * N, Scalar::zero(r.field()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::array<std::size_t, 3> idx{n, n, n};
      idx[p] = a;
      idx[q] = b;
      t[ext_index(N, idx[0], idx[1], idx[2])] = r(a, b);
    }
  return t;
}

// Leg-wise product (u1 u2 u3)(v1 v2 v3) = u1v1 (x) u2v2 (x) u3v3, projected back to
// the original basis. Any surviving unit component is reported by `unit_leak`.
inline Tensor3 legwise_product(const MulTensor& m, const Ext3& u, const Ext3& v, bool* unit_leak = nullptr) {
  UnitalExtension ext(m);
  std::size_t n = m.dim(), N = n + 1;
  Field f = m.field();
  Ext3 out(N * N * N, Scalar::zero(f));
  for (std::size_t i1 = 0; i1 < N; ++i1)
    for (std::size_t i2 = 0; i2 < N; ++i2)
      for (std::size_t i3 = 0; i3 < N; ++i3) {
        const Scalar& cu = u[ext_index(N, i1, i2, i3)];
        if (cu.is_zero()) continue;
        for (std::size_t j1 = 0; j1 < N; ++j1)
          for (std::size_t j2 = 0; j2 < N; ++j2)
            for (std::size_t j3 = 0; j3 < N; ++j3) {
              const Scalar& cv = v[ext_index(N, j1, j2, j3)];
              if (cv.is_zero()) continue;
              auto a = ext.mul(i1, j1), b = ext.mul(i2, j2), c = ext.mul(i3, j3);
              Scalar w = cu * cv;
              for (std::size_t x = 0; x < N; ++x)
                if (!a[x].is_zero())
                  for (std::size_t y = 0; y < N; ++y)
                    if (!b[y].is_zero())
                      for (std::size_t z = 0; z < N; ++z)
                        if (!c[z].is_zero()) out[ext_index(N, x, y, z)] += w * a[x] * b[y] * c[z];
            }
      }
  Tensor3 t(f, n);
  bool leak = false;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        const Scalar& s = out[ext_index(N, x, y, z)];
        if (x < n && y < n && z < n)
          t(x, y, z) = s;
        else if (!s.is_zero())
          leak = true;
      }
  if (unit_leak) *unit_leak = leak;
  return t;
}

// A sum of pure tensors w * a (x) b (x) c.
struct Pure3 {
  Scalar w;
  Vec a, b, c;
};

inline Tensor3 collect(Field f, std::size_t n, const std::vector<Pure3>& terms) {
  Tensor3 t(f, n);
  for (const auto& p : terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) += p.w * p.a[i] * p.b[j] * p.c[k];
  return t;
}

struct Pure2 {
  Scalar w;
  Vec a, b;
};

}  // namespace admp::testing
