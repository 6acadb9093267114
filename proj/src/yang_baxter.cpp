#include "admp/yang_baxter.hpp"

#include "admp/linalg.hpp"

namespace admp {

RTensor RTensor::skew_part() const { return {half(field()) * (coeff - coeff.transpose())}; }
RTensor RTensor::symmetric_part() const { return {half(field()) * (coeff + coeff.transpose())}; }
bool RTensor::is_skew() const { return coeff == -coeff.transpose(); }
bool RTensor::is_symmetric() const { return coeff == coeff.transpose(); }

namespace {

void require_r(const MulTensor& m, const RTensor& r) {
  if (!r.coeff.is_square()) throw DimensionMismatch("r must be a square coefficient matrix");
  require_dim(m.dim(), r.dim(), "r tensor");
  require_same_field(m.field(), r.field(), "r tensor");
}

Tensor3 prod(const MulTensor& m, const RTensor& r, Slots s) { return tensor3_product(r.coeff, r.coeff, m, s); }

// Zero test of a 3-tensor, one component per count.
void expect_vanishing(Checker& ck, const char* identity, const Tensor3& t) {
  std::size_t n = t.dim();
  Scalar zero = Scalar::zero(t.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ck.count();
        if (!ck.expect(identity, {i, j, k}, t(i, j, k), zero)) return;
      }
}

Matrix ox(const Matrix& a, const Matrix& b, const Matrix& t) { return tensor2_apply(a, b, t); }

}  // namespace

Tensor3 ybe_operator(const MulTensor& m, const RTensor& r, YbeOperator which) {
  require_r(m, r);
  switch (which) {
    case YbeOperator::P:
    case YbeOperator::A:
      return prod(m, r, Slots::s23_12) - prod(m, r, Slots::s13_23) - prod(m, r, Slots::s12_13);
    case YbeOperator::Q:
      return prod(m, r, Slots::s12_23) - prod(m, r, Slots::s23_13) - prod(m, r, Slots::s13_12);
    case YbeOperator::C:
      return prod(m, r, Slots::s23_12) + prod(m, r, Slots::s23_13) + prod(m, r, Slots::s13_12);
  }
  throw InvalidInput("unknown Yang-Baxter operator");
}

AxiomReport check_ybe(const AdmPoissonAlgebra& a, const RTensor& r, YbeKind kind) {
  if (kind != YbeKind::adm_pybe) throw InvalidInput("this equation needs a Poisson algebra");
  Checker ck("components");
  expect_vanishing(ck, "adm-pybe", ybe_operator(a.star(), r, YbeOperator::P));
  return ck.finish();
}

AxiomReport check_ybe(const PoissonAlgebra& p, const RTensor& r, YbeKind kind) {
  Checker ck("components");
  switch (kind) {
    case YbeKind::adm_pybe: throw InvalidInput("adm-pybe needs an adm-Poisson algebra");
    case YbeKind::cybe: expect_vanishing(ck, "cybe", ybe_operator(p.bracket(), r, YbeOperator::C)); break;
    case YbeKind::aybe: expect_vanishing(ck, "aybe", ybe_operator(p.circ(), r, YbeOperator::A)); break;
    case YbeKind::pybe:
      expect_vanishing(ck, "cybe", ybe_operator(p.bracket(), r, YbeOperator::C));
      expect_vanishing(ck, "aybe", ybe_operator(p.circ(), r, YbeOperator::A));
      break;
  }
  return ck.finish();
}

Comultiplication coboundary_alpha(const MulTensor& star, const RTensor& r) {
  require_r(star, r);
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix id = Matrix::identity(f, n);
  Comultiplication c(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix ax = ox(id, left_mult(star, x), r.coeff) - ox(right_mult(star, x), id, r.coeff);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = ax(j, k);
  }
  return c;
}

std::string to_string(CoboundaryCondition c) {
  switch (c) {
    case CoboundaryCondition::eqv1: return "eqv1";
    case CoboundaryCondition::eqv2: return "eqv2";
    case CoboundaryCondition::eqv3: return "eqv3";
    case CoboundaryCondition::cosp: return "cosp";
    case CoboundaryCondition::con1: return "con1";
    case CoboundaryCondition::cosp2: return "cosp2";
    case CoboundaryCondition::corollary1a: return "corollary1a";
    case CoboundaryCondition::corollary1b: return "corollary1b";
  }
  return "?";
}

std::optional<CoboundaryCondition> coboundary_condition_from_string(const std::string& s) {
  for (auto c : {CoboundaryCondition::eqv1, CoboundaryCondition::eqv2, CoboundaryCondition::eqv3,
                 CoboundaryCondition::cosp, CoboundaryCondition::con1, CoboundaryCondition::cosp2,
                 CoboundaryCondition::corollary1a, CoboundaryCondition::corollary1b})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

// (L (x) id - id (x) R) t.
Matrix k_op(const Matrix& l, const Matrix& rr, const Matrix& t) {
  Matrix id = Matrix::identity(t.field(), t.rows());
  return ox(l, id, t) - ox(id, rr, t);
}

// (R (x) id (x) id - id (x) id (x) L)P + 1/3((id (x) R (x) id - id (x) id (x) R)P + (R (x) id (x) id - id (x) R (x) id)Q).
Tensor3 pq_part(const Matrix& lx, const Matrix& rx, const Tensor3& p, const Tensor3& q) {
  Scalar t = third(p.field());
  return apply_slot(rx, p, 0) - apply_slot(lx, p, 2) +
         t * (apply_slot(rx, p, 1) - apply_slot(rx, p, 2) + apply_slot(rx, q, 0) - apply_slot(rx, q, 1));
}

}  // namespace

CospTerms cosp_terms(const MulTensor& star, const RTensor& r, const Vec& x) {
  require_r(star, r);
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix s = r.coeff + r.coeff.transpose();
  auto K = [&](const Vec& y) { return k_op(left_mult(star, y), right_mult(star, y), s); };
  Matrix rx = right_mult(star, x), kx = K(x);
  Matrix id = Matrix::identity(f, n);
  CospTerms out{Tensor3(f, n), Tensor3(f, n), Tensor3(f, n), Tensor3(f, n), Tensor3(f, n), Tensor3(f, n)};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& w = r.coeff(p, q);
      if (w.is_zero()) continue;
      Vec ep = Vec::basis(f, n, p), eq = Vec::basis(f, n, q);
      Tensor3 t = outer(ep, K(eq));
      out.a += w * apply_slot(rx, t, 0);
      out.b += w * apply_slot(rx, tau12(t), 1);
      Tensor3 u = outer(ox(left_mult(star, ep), id, kx), eq);
      out.c += w * (u + tau23(u));
      Tensor3 v = outer(ep, K(apply_mul(star, x, eq)));
      out.d += w * (v + tau12(v));
      out.e += w * outer(ep, ox(right_mult(star, eq), id, kx));
      out.f += w * outer(ox(right_mult(star, ep), id, kx), eq);
    }
  return out;
}

Tensor3 cosp_value(const MulTensor& star, const RTensor& r, const Vec& x) {
  Tensor3 p = ybe_operator(star, r, YbeOperator::P), q = ybe_operator(star, r, YbeOperator::Q);
  CospTerms c = cosp_terms(star, r, x);
  Scalar t = third(star.field());
  Tensor3 corr = c.c + c.d - c.a - c.b - c.e - c.f;
  return pq_part(left_mult(star, x), right_mult(star, x), p, q) + t * corr;
}

namespace {

struct PolarOps {
  Matrix l, r;  // L = L_o + ad, R = L_o - ad
};

AxiomReport check_eqv(const MulTensor& star, const RTensor& r, int which) {
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix id = Matrix::identity(f, n);
  Matrix s = r.coeff + r.coeff.transpose();
  Scalar t = third(f);
  static const char* const names[3] = {"eqv1", "eqv2", "eqv3"};
  Checker ck("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j);
      Vec xy = apply_mul(star, x, y), yx = apply_mul(star, y, x);
      Matrix Lx = left_mult(star, x), Ly = left_mult(star, y), Rx = right_mult(star, x), Ry = right_mult(star, y);
      Matrix Ax = k_op(Lx, Rx, s), Ay = k_op(Ly, Ry, s);
      Matrix lhs, rhs;
      switch (which) {
        case 0:
          lhs = ox(id, Lx, Ay) + ox(id, Ly, Ax);
          rhs = k_op(left_mult(star, xy), right_mult(star, xy), s);
          break;
        case 1:
          lhs = ox(id, Lx, Ay) + ox(id, Ly, Ax);
          rhs = ox(Lx, id, Ay) + ox(id, Ry, Ax);
          break;
        default:
          lhs = ox(Rx, id, Ay) + t * k_op(left_mult(star, xy) - left_mult(star, yx),
                                          right_mult(star, xy) - right_mult(star, yx), s);
          rhs = ox(id, Lx, Ay);
          break;
      }
      if (!ck.expect(names[which], {i, j}, lhs, rhs)) return ck.finish();
    }
  return ck.finish();
}

}  // namespace

AxiomReport check_coboundary_condition(const MulTensor& star, const RTensor& r, CoboundaryCondition which) {
  require_r(star, r);
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix s = r.coeff + r.coeff.transpose();
  Checker ck("elements");
  auto per_x = [&](auto&& body) {
    for (std::size_t i = 0; i < n; ++i) {
      ck.count();
      if (!body(i, Vec::basis(f, n, i))) break;
    }
    return ck.finish();
  };
  auto polar_ops = [&](const MulTensor& b, const MulTensor& c, const Vec& x) {
    Matrix lc = left_mult(c, x), ad = left_mult(b, x);
    return PolarOps{lc + ad, lc - ad};
  };
  switch (which) {
    case CoboundaryCondition::eqv1: return check_eqv(star, r, 0);
    case CoboundaryCondition::eqv2: return check_eqv(star, r, 1);
    case CoboundaryCondition::eqv3: return check_eqv(star, r, 2);
    case CoboundaryCondition::cosp:
      return per_x([&](std::size_t i, const Vec& x) {
        Tensor3 v = cosp_value(star, r, x);
        return ck.expect("cosp", {i}, v, Tensor3(f, n));
      });
    case CoboundaryCondition::con1:
      return per_x([&](std::size_t i, const Vec& x) {
        return ck.expect("con1", {i}, k_op(left_mult(star, x), right_mult(star, x), s), Matrix(f, n, n));
      });
    case CoboundaryCondition::cosp2: {
      Tensor3 p = ybe_operator(star, r, YbeOperator::P), q = ybe_operator(star, r, YbeOperator::Q);
      return per_x([&](std::size_t i, const Vec& x) {
        return ck.expect("cosp2", {i}, pq_part(left_mult(star, x), right_mult(star, x), p, q), Tensor3(f, n));
      });
    }
    case CoboundaryCondition::corollary1a: {
      auto [b, c] = polarize_raw(star);
      return per_x([&](std::size_t i, const Vec& x) {
        PolarOps o = polar_ops(b, c, x);
        return ck.expect("corollary1a", {i}, k_op(o.l, o.r, s), Matrix(f, n, n));
      });
    }
    case CoboundaryCondition::corollary1b: {
      auto [b, c] = polarize_raw(star);
      Tensor3 a = ybe_operator(c, r, YbeOperator::A), cc = ybe_operator(b, r, YbeOperator::C);
      Tensor3 p = a + cc, q = a - cc;
      return per_x([&](std::size_t i, const Vec& x) {
        PolarOps o = polar_ops(b, c, x);
        return ck.expect("corollary1b", {i}, pq_part(o.l, o.r, p, q), Tensor3(f, n));
      });
    }
  }
  throw InvalidInput("unknown coboundary condition");
}

AxiomReport check_coboundary_poisson_conditions(const MulTensor& bracket, const MulTensor& circ,
                                                const RTensor& r) {
  require_r(bracket, r);
  require_r(circ, r);
  std::size_t n = bracket.dim();
  Field f = bracket.field();
  Matrix id = Matrix::identity(f, n);
  Matrix s = r.coeff + r.coeff.transpose();
  Tensor3 a = ybe_operator(circ, r, YbeOperator::A), c = ybe_operator(bracket, r, YbeOperator::C);
  Matrix zero2(f, n, n);
  Tensor3 zero3(f, n);
  Checker ck("elements");
  for (std::size_t i = 0; i < n; ++i) {
    ck.count();
    Vec x = Vec::basis(f, n, i);
    Matrix ad = left_mult(bracket, x), lc = left_mult(circ, x);
    if (!ck.expect("ad-invariant-symmetric-part", {i}, ox(ad, id, s) + ox(id, ad, s), zero2)) break;
    if (!ck.expect("circ-invariant-symmetric-part", {i}, ox(lc, id, s) - ox(id, lc, s), zero2)) break;
    if (!ck.expect("ad-invariant-cybe", {i}, apply_slot(ad, c, 0) + apply_slot(ad, c, 1) + apply_slot(ad, c, 2),
                   zero3))
      break;
    if (!ck.expect("circ-invariant-aybe", {i}, apply_slot(lc, a, 0) - apply_slot(lc, a, 2), zero3)) break;
    if (!ck.expect("mixed-ybe", {i}, apply_slot(ad, a, 0) - apply_slot(lc, c, 1) + apply_slot(lc, c, 2), zero3))
      break;
  }
  return ck.finish();
}

PoissonComultiplicationPair coboundary_poisson_pair(const MulTensor& bracket, const MulTensor& circ,
                                                    const RTensor& r) {
  require_r(bracket, r);
  require_r(circ, r);
  std::size_t n = bracket.dim();
  Field f = bracket.field();
  Matrix id = Matrix::identity(f, n);
  PoissonComultiplicationPair out{Comultiplication(f, n), Comultiplication(f, n)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix ad = left_mult(bracket, x), lc = left_mult(circ, x);
    Matrix d = ox(ad, id, r.coeff) + ox(id, ad, r.coeff);
    Matrix D = ox(id, lc, r.coeff) - ox(lc, id, r.coeff);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.delta(i, j, k) = d(j, k);
        out.Delta(i, j, k) = D(j, k);
      }
  }
  return out;
}

AxiomReport operator_form_check(const MulTensor& star, const RTensor& r) {
  require_r(star, r);
  if (!r.is_skew()) throw InvalidInput("operator form needs a skew-symmetric r");
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix sh = r.sharp();
  Checker ck("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec a = Vec::basis(f, n, i), b = Vec::basis(f, n, j);
      Vec ra = sh.apply(a), rb = sh.apply(b);
      Vec rhs = sh.apply(right_mult(star, ra).transpose().apply(b) + left_mult(star, rb).transpose().apply(a));
      if (!ck.expect("operator-form", {i, j}, apply_mul(star, ra, rb), rhs)) return ck.finish();
    }
  return ck.finish();
}

AxiomReport cyclic_form_check(const MulTensor& star, const RTensor& r) {
  require_r(star, r);
  if (!r.is_skew()) throw InvalidInput("cyclic form needs a skew-symmetric r");
  std::optional<Matrix> w = inverse(r.coeff);
  if (!w) throw InvalidInput("cyclic form needs a nondegenerate r");
  std::size_t n = star.dim();
  Field f = star.field();
  auto omega = [&](const Vec& x, const Vec& y) {
    Vec wy = w->apply(y);
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * wy[i];
    return acc;
  };
  Checker ck("triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ck.count();
        Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j), z = Vec::basis(f, n, k);
        Scalar v = omega(apply_mul(star, x, y), z) + omega(apply_mul(star, y, z), x) + omega(apply_mul(star, z, x), y);
        if (!ck.expect("cyclic-form", {i, j, k}, v, Scalar::zero(f))) return ck.finish();
      }
  return ck.finish();
}

CoboundaryCorrespondence coboundary_correspondence(const MulTensor& star, const RTensor& r) {
  require_r(star, r);
  std::size_t n = star.dim();
  Field f = star.field();
  Matrix id = Matrix::identity(f, n);
  Matrix s = r.coeff + r.coeff.transpose();
  std::size_t unknowns = n * n, rows = 2 * n * n * n;
  Matrix a(f, rows, unknowns);
  Vec b(f, rows);
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix Lx = left_mult(star, x), Rx = right_mult(star, x);
    auto op1 = [&](const Matrix& t) { return ox(id, Lx, t) - ox(Rx, id, t); };
    auto op2 = [&](const Matrix& t) { return ox(Lx, id, t) - ox(id, Rx, t); };
    std::size_t base1 = 2 * i * n * n, base2 = base1 + n * n;
    // op1(r1) = op1(s) and op2(r1) = -op2(s).
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Matrix e(f, n, n);
        e(p, q) = Scalar::one(f);
        Matrix c1 = op1(e), c2 = op2(e);
        for (std::size_t u = 0; u < n * n; ++u) {
          a(base1 + u, p * n + q) = c1(u / n, u % n);
          a(base2 + u, p * n + q) = c2(u / n, u % n);
        }
      }
    Matrix t1 = op1(s), t2 = -op2(s);
    for (std::size_t u = 0; u < n * n; ++u) {
      b[base1 + u] = t1(u / n, u % n);
      b[base2 + u] = t2(u / n, u % n);
    }
  }
  std::optional<Vec> sol = solve(a, b);
  CoboundaryCorrespondence out;
  if (!sol) return out;
  out.is_coboundary_poisson = true;
  Matrix r1(f, n, n);
  for (std::size_t u = 0; u < unknowns; ++u) r1(u / n, u % n) = (*sol)[u];
  out.r1 = RTensor{r1};
  return out;
}

}  // namespace admp
