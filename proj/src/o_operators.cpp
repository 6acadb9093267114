#include "admp/o_operators.hpp"

#include "admp/linalg.hpp"

namespace admp {

namespace {

void require_theta(std::size_t n, std::size_t m, const Matrix& theta) {
  if (theta.rows() != n || theta.cols() != m)
    throw DimensionMismatch("theta must be " + std::to_string(n) + "x" + std::to_string(m));
}

[[noreturn]] void invalid(const std::string& what, const AxiomReport& r) {
  throw InvalidInput(what + ": " + format_failure(*r.witness));
}

}  // namespace

AxiomReport check_o_operator(const MulTensor& star, const Family& l, const Family& r, const Matrix& theta) {
  std::size_t n = star.dim();
  std::size_t m = validate_family(l, n, star.field(), "representation l");
  require_dim(validate_family(r, n, star.field(), "representation r"), m, "representation l and r");
  require_theta(n, m, theta);
  Field f = star.field();
  Checker ck("pairs");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ck.count();
      Vec u = Vec::basis(f, m, i), v = Vec::basis(f, m, j);
      Vec tu = theta.column(i), tv = theta.column(j);
      Vec rhs = theta.apply(family_at(l, tu).apply(v) + family_at(r, tv).apply(u));
      if (!ck.expect("o-operator", {i, j}, apply_mul(star, tu, tv), rhs)) return ck.finish();
    }
  return ck.finish();
}

AxiomReport check_o_operator(const OOperatorCandidate& c) {
  return check_o_operator(c.rep.alg().star(), c.rep.l(), c.rep.r(), c.theta);
}

AxiomReport check_rota_baxter(const MulTensor& star, const Matrix& rb) {
  std::size_t n = star.dim();
  require_theta(n, n, rb);
  Field f = star.field();
  Checker ck("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j);
      Vec rx = rb.apply(x), ry = rb.apply(y);
      Vec rhs = rb.apply(apply_mul(star, rx, y) + apply_mul(star, x, ry));
      if (!ck.expect("rota-baxter", {i, j}, apply_mul(star, rx, ry), rhs)) return ck.finish();
    }
  return ck.finish();
}

SemidirectSolution solution_from_o_operator(const OOperatorCandidate& c) {
  std::size_t n = c.rep.alg().dim(), m = c.rep.vdim();
  require_theta(n, m, c.theta);
  Representation dual = dual_rep_raw(c.rep);
  MulTensor big = semidirect_raw(c.rep.alg().star(), dual.l(), dual.r());
  Matrix r(c.theta.field(), n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      r(i, n + j) = c.theta(i, j);
      r(n + j, i) = -c.theta(i, j);
    }
  return {AdmPoissonAlgebra::raw(std::move(big)), RTensor{r}};
}

std::array<Vec, 3> pre_adm_terms(const PreAdmPoisson& p, const Vec& x, const Vec& y, const Vec& z) {
  auto S = [&](const Vec& a, const Vec& b) { return apply_mul(p.succ, a, b); };
  auto Pr = [&](const Vec& a, const Vec& b) { return apply_mul(p.prec, a, b); };
  Scalar t = third(p.succ.field());
  Vec a = S(x, S(y, z)) - S(S(x, y), z) - S(Pr(x, y), z) +
          t * (S(x, Pr(z, y)) - Pr(z, S(x, y)) - Pr(z, Pr(x, y)) - S(y, S(x, z)) + S(y, Pr(z, x)));
  Vec b = Pr(S(x, z), y) - S(x, Pr(z, y)) +
          t * (S(y, S(x, z)) - S(x, S(y, z)) + Pr(z, Pr(x, y)) + Pr(z, S(x, y)) - Pr(z, S(y, x)) - Pr(z, Pr(y, x)));
  Vec c = Pr(Pr(z, x), y) - Pr(z, S(x, y)) - Pr(z, Pr(x, y)) +
          t * (S(y, Pr(z, x)) - Pr(z, S(y, x)) - Pr(z, Pr(y, x)) + S(x, Pr(z, y)) - S(x, S(y, z)));
  return {a, b, c};
}

namespace {

void require_pair_dims(const MulTensor& a, const MulTensor& b, const char* what) {
  require_dim(a.dim(), b.dim(), what);
  require_same_field(a.field(), b.field(), what);
}

}  // namespace

AxiomReport check_pre_adm_poisson(const PreAdmPoisson& p) {
  require_pair_dims(p.succ, p.prec, "pre-adm-Poisson");
  std::size_t n = p.dim();
  Field f = p.succ.field();
  static const char* const names[3] = {"pre-adm-1", "pre-adm-2", "pre-adm-3"};
  Checker ck("triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ck.count();
        auto terms = pre_adm_terms(p, Vec::basis(f, n, i), Vec::basis(f, n, j), Vec::basis(f, n, k));
        for (int q = 0; q < 3; ++q)
          if (!ck.expect_zero(names[q], {i, j, k}, terms[q])) return ck.finish();
      }
  return ck.finish();
}

AdmPoissonAlgebra subadjacent(const PreAdmPoisson& p) {
  AxiomReport r = check_pre_adm_poisson(p);
  if (!r.holds) invalid("not a pre-adm-Poisson algebra", r);
  return AdmPoissonAlgebra::raw(p.succ + p.prec);
}

Representation pre_rep_raw(const PreAdmPoisson& p) {
  require_pair_dims(p.succ, p.prec, "pre-adm-Poisson");
  return Representation::raw(AdmPoissonAlgebra::raw(p.succ + p.prec), left_family(p.succ), right_family(p.prec));
}

Representation pre_rep(const PreAdmPoisson& p) {
  AxiomReport r = check_pre_adm_poisson(p);
  if (!r.holds) invalid("not a pre-adm-Poisson algebra", r);
  return pre_rep_raw(p);
}

AxiomReport check_pre_poisson(const PrePoisson& q) {
  require_pair_dims(q.dot, q.star, "pre-Poisson");
  std::size_t n = q.dim();
  Field f = q.dot.field();
  auto d = [&](const Vec& a, const Vec& b) { return apply_mul(q.dot, a, b); };
  auto s = [&](const Vec& a, const Vec& b) { return apply_mul(q.star, a, b); };
  Checker ck("triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ck.count();
        Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j), z = Vec::basis(f, n, k);
        if (!ck.expect("zinbiel", {i, j, k}, d(x, d(y, z)), d(d(y, x), z) + d(d(x, y), z))) return ck.finish();
        if (!ck.expect("pre-lie", {i, j, k}, s(x, s(y, z)) - s(s(x, y), z), s(y, s(x, z)) - s(s(y, x), z)))
          return ck.finish();
        if (!ck.expect("pre-poisson-1", {i, j, k}, d(s(x, y) - s(y, x), z), s(x, d(y, z)) - d(y, s(x, z))))
          return ck.finish();
        if (!ck.expect("pre-poisson-2", {i, j, k}, s(d(x, y) + d(y, x), z), d(x, s(y, z)) + d(y, s(x, z))))
          return ck.finish();
      }
  MulTensor circ = q.dot + opposite(q.dot), bracket = q.star - opposite(q.star);
  ck.absorb(check_poisson(bracket, circ), "poisson.");
  return ck.finish();
}

PrePoisson pre_to_prepoisson_raw(const PreAdmPoisson& p) {
  require_pair_dims(p.succ, p.prec, "pre-adm-Poisson");
  Scalar h = half(p.succ.field());
  MulTensor po = opposite(p.prec);
  return {scale(h, p.succ + po), scale(h, p.succ - po)};
}

PreAdmPoisson prepoisson_to_pre_raw(const PrePoisson& q) {
  require_pair_dims(q.dot, q.star, "pre-Poisson");
  return {q.dot + q.star, opposite(q.dot) - opposite(q.star)};
}

PrePoisson pre_to_prepoisson(const PreAdmPoisson& p) {
  AxiomReport r = check_pre_adm_poisson(p);
  if (!r.holds) invalid("not a pre-adm-Poisson algebra", r);
  return pre_to_prepoisson_raw(p);
}

PreAdmPoisson prepoisson_to_pre(const PrePoisson& q) {
  AxiomReport r = check_pre_poisson(q);
  if (!r.holds) invalid("not a pre-Poisson algebra", r);
  return prepoisson_to_pre_raw(q);
}

PreAdmPoisson induced_pre_from_o_operator(const OOperatorCandidate& c) {
  AxiomReport ok = check_o_operator(c);
  if (!ok.holds) invalid("not an O-operator", ok);
  std::size_t m = c.rep.vdim();
  Field f = c.theta.field();
  PreAdmPoisson out{MulTensor(f, m), MulTensor(f, m)};
  for (std::size_t j = 0; j < m; ++j) {
    Matrix lj = c.rep.l_at(c.theta.column(j)), rj = c.rep.r_at(c.theta.column(j));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t w = 0; w < m; ++w) {
        out.succ(j, k, w) = lj(w, k);  // v_j > v_k = l(theta v_j) v_k
        out.prec(k, j, w) = rj(w, k);  // v_k < v_j = r(theta v_j) v_k
      }
  }
  return out;
}

SemidirectSolution canonical_solution(const PreAdmPoisson& p) {
  Representation rep = pre_rep(p);
  std::size_t n = p.dim();
  return solution_from_o_operator({rep, Matrix::identity(p.succ.field(), n)});
}

PreAdmPoisson compatible_pre_from_invertible_o(const OOperatorCandidate& c) {
  std::size_t n = c.rep.alg().dim();
  require_theta(n, n, c.theta);
  std::optional<Matrix> inv = inverse(c.theta);
  if (!inv) throw InvalidInput("theta is not invertible");
  AxiomReport ok = check_o_operator(c);
  if (!ok.holds) invalid("not an O-operator", ok);
  Field f = c.theta.field();
  PreAdmPoisson out{MulTensor(f, n), MulTensor(f, n)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix s = c.theta * c.rep.l_at(x) * *inv;  // y -> x > y
    Matrix pr = c.theta * c.rep.r_at(x) * *inv;  // y -> y < x
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.succ(i, j, k) = s(k, j);
        out.prec(j, i, k) = pr(k, j);
      }
  }
  return out;
}

PreAdmPoisson pre_from_symplectic(const MulTensor& star, const Matrix& w) {
  std::size_t n = star.dim();
  require_theta(n, n, w);
  std::optional<Matrix> winv = inverse(w);
  if (!winv) throw InvalidInput("omega is degenerate");
  AxiomReport ok = cyclic_form_check(star, RTensor{*winv});
  if (!ok.holds) invalid("omega does not satisfy the cyclic identity", ok);
  Field f = star.field();
  Matrix wt = w.transpose(), wti = winv->transpose();
  PreAdmPoisson out{MulTensor(f, n), MulTensor(f, n)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix s = wti * right_mult(star, x).transpose() * wt;  // y -> x > y
    Matrix pr = wti * left_mult(star, x).transpose() * wt;  // y -> y < x
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.succ(i, j, k) = s(k, j);
        out.prec(j, i, k) = pr(k, j);
      }
  }
  return out;
}

}  // namespace admp
