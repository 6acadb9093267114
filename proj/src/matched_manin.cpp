#include "admp/matched_manin.hpp"

#include "admp/linalg.hpp"

namespace admp {

namespace {

// Identities 1..3 with x, y in X, a in Y; lx, rx : X -> End(Y), ly, ry : Y -> End(X).
bool mixed_identities(Checker& ck, const MulTensor& sx, const Family& lx, const Family& rx, const Family& ly,
                      const Family& ry, std::size_t ny, const char* const names[3]) {
  Field f = sx.field();
  std::size_t nx = sx.dim();
  Scalar t = third(f);
  auto s = [&](const Vec& u, const Vec& v) { return apply_mul(sx, u, v); };
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t q = 0; q < ny; ++q) {
        ck.count();
        Vec x = Vec::basis(f, nx, i), y = Vec::basis(f, nx, j), a = Vec::basis(f, ny, q);
        Matrix La = family_at(ly, a), Ra = family_at(ry, a);
        Vec xy = s(x, y), yx = s(y, x);
        Vec lxa = lx[i].apply(a), rxa = rx[i].apply(a), lya = lx[j].apply(a), rya = rx[j].apply(a);
        auto R2 = [&](const Vec& b) { return family_at(ry, b); };
        auto L2 = [&](const Vec& b) { return family_at(ly, b); };

        Vec rhs1 = R2(lya).apply(x) + s(x, Ra.apply(y)) +
                   t * (R2(rya).apply(x) + s(x, La.apply(y)) - La.apply(xy) - s(y, Ra.apply(x)) -
                        R2(lxa).apply(y) + s(y, La.apply(x)) + R2(rxa).apply(y));
        if (!ck.expect(names[0], {i, j, q}, Ra.apply(xy), rhs1)) return false;

        Vec rhs2 = s(La.apply(x), y) + L2(rxa).apply(y) +
                   t * (s(y, La.apply(x)) - La.apply(yx) + R2(rxa).apply(y) + s(x, La.apply(y)) +
                        R2(rya).apply(x) - s(x, Ra.apply(y)) - R2(lya).apply(x));
        if (!ck.expect(names[1], {i, j, q}, La.apply(xy), rhs2)) return false;

        Vec rhs3 = s(x, La.apply(y)) - L2(lxa).apply(y) + R2(rya).apply(x) +
                   t * (s(x, Ra.apply(y)) + R2(lya).apply(x) - s(y, Ra.apply(x)) - R2(lxa).apply(y) -
                        La.apply(xy) + La.apply(yx));
        if (!ck.expect(names[2], {i, j, q}, s(Ra.apply(x), y), rhs3)) return false;
      }
  return true;
}

void validate_shapes(const MatchedPairData& mp) {
  std::size_t n1 = mp.p1.dim(), n2 = mp.p2.dim();
  require_same_field(mp.p1.field(), mp.p2.field(), "matched pair");
  auto need = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want)
      throw DimensionMismatch(std::string(what) + ": matrices have size " + std::to_string(got) + ", expected " +
                              std::to_string(want));
  };
  need(validate_family(mp.l1, n1, mp.p1.field(), "matched pair l1"), n2, "matched pair l1");
  need(validate_family(mp.r1, n1, mp.p1.field(), "matched pair r1"), n2, "matched pair r1");
  need(validate_family(mp.l2, n2, mp.p1.field(), "matched pair l2"), n1, "matched pair l2");
  need(validate_family(mp.r2, n2, mp.p1.field(), "matched pair r2"), n1, "matched pair r2");
}

}  // namespace

AxiomReport check_matched_pair(const MatchedPairData& mp) {
  validate_shapes(mp);
  Checker ck("cases");
  if (!ck.absorb(check_adm_poisson(mp.p1.star()), "p1.")) return ck.finish();
  if (!ck.absorb(check_adm_poisson(mp.p2.star()), "p2.")) return ck.finish();
  if (!ck.absorb(check_representation(mp.p1.star(), mp.l1, mp.r1), "rep1.")) return ck.finish();
  if (!ck.absorb(check_representation(mp.p2.star(), mp.l2, mp.r2), "rep2.")) return ck.finish();
  static const char* const first[3] = {"matched-pair-1", "matched-pair-2", "matched-pair-3"};
  static const char* const second[3] = {"matched-pair-4", "matched-pair-5", "matched-pair-6"};
  if (!mixed_identities(ck, mp.p1.star(), mp.l1, mp.r1, mp.l2, mp.r2, mp.p2.dim(), first)) return ck.finish();
  mixed_identities(ck, mp.p2.star(), mp.l2, mp.r2, mp.l1, mp.r1, mp.p1.dim(), second);
  return ck.finish();
}

MulTensor bowtie_raw(const MatchedPairData& mp) {
  validate_shapes(mp);
  std::size_t n1 = mp.p1.dim(), n2 = mp.p2.dim();
  MulTensor t(mp.p1.field(), n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) t(i, j, k) = mp.p1.star()(i, j, k);
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t c = 0; c < n2; ++c) t(n1 + a, n1 + b, n1 + c) = mp.p2.star()(a, b, c);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t k = 0; k < n1; ++k) {
        t(i, n1 + a, k) = mp.r2[a](k, i);
        t(n1 + a, i, k) = mp.l2[a](k, i);
      }
      for (std::size_t c = 0; c < n2; ++c) {
        t(i, n1 + a, n1 + c) = mp.l1[i](c, a);
        t(n1 + a, i, n1 + c) = mp.r1[i](c, a);
      }
    }
  return t;
}

AdmPoissonAlgebra bowtie(const MatchedPairData& mp) {
  AxiomReport r = check_matched_pair(mp);
  if (!r.holds) throw InvalidInput("not a matched pair: " + format_failure(*r.witness));
  return AdmPoissonAlgebra::raw(bowtie_raw(mp));
}

AxiomReport check_invariant_form(const MulTensor& star, const BilinearForm& b, FormRequirements req) {
  std::size_t n = star.dim();
  if (b.gram.rows() != n || b.gram.cols() != n)
    throw DimensionMismatch("bilinear form must be " + std::to_string(n) + "x" + std::to_string(n));
  require_same_field(star.field(), b.gram.field(), "bilinear form");
  Field f = star.field();
  auto form = [&](const Vec& x, const Vec& y) {
    Vec gy = b.gram.apply(y);
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * gy[i];
    return acc;
  };
  Checker ck("triples");
  if (req.symmetric)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!ck.expect("symmetry", {i, j}, b.gram(i, j), b.gram(j, i))) return ck.finish();
  if (req.nondegenerate) {
    Scalar det = determinant(b.gram);
    if (det.is_zero()) {
      ck.fail(Witness{"nondegeneracy", {}, Value::of(det), Value::of(Scalar::zero(f))});
      return ck.finish();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ck.count();
        Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j), z = Vec::basis(f, n, k);
        if (!ck.expect("invariance", {i, j, k}, form(apply_mul(star, x, y), z), form(x, apply_mul(star, y, z))))
          return ck.finish();
      }
  return ck.finish();
}

BilinearForm standard_form(std::size_t n, Field f) {
  Matrix g(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar::one(f);
    g(n + i, i) = Scalar::one(f);
  }
  return {g};
}

MatchedPairData manin_data(const MulTensor& p, const MulTensor& pstar) {
  require_dim(p.dim(), pstar.dim(), "Manin double");
  require_same_field(p.field(), pstar.field(), "Manin double");
  auto neg_dual = [](const Family& f) {
    Family out = neg_dual_endo_family(f);
    for (auto& m : out) m = -m;
    return out;
  };
  // -rho* = rho^T.
  return MatchedPairData{AdmPoissonAlgebra::raw(p),
                         AdmPoissonAlgebra::raw(pstar),
                         neg_dual(right_family(p)),
                         neg_dual(left_family(p)),
                         neg_dual(right_family(pstar)),
                         neg_dual(left_family(pstar))};
}

ManinDouble manin_double(const MulTensor& p, const MulTensor& pstar) {
  MatchedPairData mp = manin_data(p, pstar);
  return ManinDouble{bowtie_raw(mp), check_matched_pair(mp)};
}

AxiomReport check_standard_manin_triple(const MulTensor& d, std::size_t n) {
  if (d.dim() != 2 * n) throw DimensionMismatch("Manin triple: algebra must have dimension 2n");
  Checker ck("cases");
  if (!ck.absorb(check_adm_poisson(d))) return ck.finish();
  Field f = d.field();
  // Products within one summand stay in that summand.
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      bool first = i < n;
      if ((j < n) != first) continue;
      ck.count();
      for (std::size_t k = 0; k < 2 * n; ++k)
        if ((k < n) != first && !d(i, j, k).is_zero()) {
          ck.fail(Witness{first ? "subalgebra-p" : "subalgebra-pstar", {i, j, k}, Value::of(d(i, j, k)),
                          Value::of(Scalar::zero(f))});
          return ck.finish();
        }
    }
  ck.absorb(check_invariant_form(d, standard_form(n, f), {true, true}));
  return ck.finish();
}

}  // namespace admp
