// Shared helpers for the unit and acceptance tests: generators, random
// instances and an integer-arithmetic oracle for the adm-Poisson identity.
#pragma once

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "admp/o_operators.hpp"

namespace admp::testing {

inline Field gf5() { return Field::gf(5); }
inline Field Q() { return Field::rational(); }

inline Scalar S(Field f, long v) { return Scalar::from_int(f, v); }
inline Scalar S(Field f, long num, long den) { return S(f, num) / S(f, den); }

// Base-p digits of idx, least significant first.
inline std::vector<int> digits(std::uint64_t idx, std::size_t k, int p) {
  std::vector<int> d(k);
  for (auto& x : d) {
    x = static_cast<int>(idx % p);
    idx /= p;
  }
  return d;
}

inline MulTensor tensor_of(Field f, std::size_t n, const std::vector<int>& c) {
  MulTensor m(f, n);
  for (std::size_t t = 0; t < n * n * n; ++t) m(t / (n * n), (t / n) % n, t % n) = S(f, c[t]);
  return m;
}

inline Matrix matrix_of(Field f, std::size_t rows, std::size_t cols, const std::vector<int>& c) {
  Matrix m(f, rows, cols);
  for (std::size_t t = 0; t < rows * cols; ++t) m(t / cols, t % cols) = S(f, c[t]);
  return m;
}

// Independent oracle: with plain integers mod p, checks
//   3 (xy)z - 3 x(yz) + z(xy) - x(zy) + y(xz) - y(zx) = 0
// on all basis triples, which is the adm-Poisson identity multiplied by 3.
inline bool naive_adm_poisson(const std::vector<int>& c, std::size_t n, int p) {
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  // mul(u, v) for coordinate vectors.
  auto mul = [&](const std::vector<long>& u, const std::vector<long>& v) {
    std::vector<long> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (u[i] && v[j])
          for (std::size_t k = 0; k < n; ++k) w[k] = (w[k] + u[i] * v[j] % p * C(i, j, k)) % p;
    return w;
  };
  auto e = [&](std::size_t i) {
    std::vector<long> v(n, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = e(i), y = e(j), z = e(k);
        auto a = mul(mul(x, y), z), b = mul(x, mul(y, z)), c1 = mul(z, mul(x, y)), d = mul(x, mul(z, y)),
             g = mul(y, mul(x, z)), h = mul(y, mul(z, x));
        for (std::size_t t = 0; t < n; ++t) {
          long v = 3 * a[t] - 3 * b[t] + c1[t] - d[t] + g[t] - h[t];
          if (((v % p) + p) % p != 0) return false;
        }
      }
  return true;
}

// All adm-Poisson structures of dimension n over GF(p), found by the naive oracle.
inline std::vector<MulTensor> naive_catalog(std::size_t n, int p = 5) {
  std::size_t k = n * n * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  std::vector<MulTensor> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto d = digits(idx, k, p);
    if (naive_adm_poisson(d, n, p)) out.push_back(tensor_of(Field::gf(p), n, d));
  }
  return out;
}

inline const std::vector<MulTensor>& catalog2() {
  static const std::vector<MulTensor> c = naive_catalog(2);
  return c;
}

inline const std::vector<MulTensor>& catalog1() {
  static const std::vector<MulTensor> c = naive_catalog(1);
  return c;
}

using Rng = std::mt19937_64;

// Uniform residue over GF(p); over Q a small fraction, zero with probability ~1/3.
inline Scalar random_scalar(Field f, Rng& rng) {
  if (!f.is_rational()) return S(f, static_cast<long>(rng() % f.modulus()));
  if (rng() % 3 == 0) return S(f, 0);
  long num = static_cast<long>(rng() % 7) - 3, den = static_cast<long>(rng() % 3) + 1;
  return S(f, num, den);
}

inline MulTensor random_tensor(Field f, std::size_t n, Rng& rng) {
  MulTensor m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i, j, k) = random_scalar(f, rng);
  return m;
}

inline Comultiplication random_comul(Field f, std::size_t n, Rng& rng) {
  Comultiplication c(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = random_scalar(f, rng);
  return c;
}

inline Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

inline Family random_family(Field f, std::size_t n, std::size_t m, Rng& rng) {
  Family fam;
  for (std::size_t i = 0; i < n; ++i) fam.push_back(random_matrix(f, m, m, rng));
  return fam;
}

inline Matrix random_skew(Field f, std::size_t n, Rng& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_scalar(f, rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline MulTensor random_skew_tensor(Field f, std::size_t n, Rng& rng) {
  MulTensor m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        m(i, j, k) = random_scalar(f, rng);
        m(j, i, k) = -m(i, j, k);
      }
  return m;
}

inline MulTensor random_symmetric_tensor(Field f, std::size_t n, Rng& rng) {
  MulTensor m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i, j, k) = m(j, i, k) = random_scalar(f, rng);
  return m;
}

// Runs body(i) for i in [0, total) across threads; body must be thread-safe.
template <class Body>
void parallel_for(std::uint64_t total, Body body, unsigned workers = std::max(2u, std::thread::hardware_concurrency())) {
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < total; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace admp::testing
