#include <gtest/gtest.h>

#include "admp/linalg.hpp"
#include "admp/search.hpp"
#include "support.hpp"

using namespace admp;
using namespace admp::testing;

namespace {

MulTensor unit1() { return tensor_of(gf5(), 1, {1}); }

// (x>y + x<y) * z style residual of the sub-adjacent product, computed directly.
Vec c1_residual(const MulTensor& m, const Vec& x, const Vec& y, const Vec& z) {
  auto s = [&](const Vec& a, const Vec& b) { return apply_mul(m, a, b); };
  Vec inner = s(z, s(x, y)) - s(x, s(z, y)) + s(y, s(x, z)) - s(y, s(z, x));
  return s(s(x, y), z) - s(x, s(y, z)) + third(m.field()) * inner;
}

std::vector<PreAdmPoisson> raw_pairs_dim1() {
  std::vector<PreAdmPoisson> out;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) out.push_back({tensor_of(gf5(), 1, {a}), tensor_of(gf5(), 1, {b})});
  return out;
}

std::vector<PreAdmPoisson> valid_pres_dim2() {
  SearchSpec spec;
  spec.target = SearchTarget::pre_adm_poisson;
  spec.dim = 2;
  spec.via_rota_baxter = true;
  spec.nonzero_only = true;
  std::vector<PreAdmPoisson> out;
  for (const AlgebraFile& f : search_all(spec)) out.push_back({*f.op("succ"), *f.op("prec")});
  return out;
}

}  // namespace

TEST(OOperator, UnitAlgebraAdjointOnlyZero) {
  // t^2 e1 = theta(2 t^2 v) forces t = 0.
  MulTensor m = unit1();
  for (int t = 0; t < 5; ++t)
    EXPECT_EQ(check_o_operator(m, left_family(m), right_family(m), matrix_of(gf5(), 1, 1, {t})).holds, t == 0);
}

TEST(OOperator, RotaBaxterIsAdjointOOperator) {
  for (const MulTensor& m : catalog1())
    for (int t = 0; t < 5; ++t) {
      Matrix R = matrix_of(gf5(), 1, 1, {t});
      EXPECT_EQ(check_rota_baxter(m, R).holds, check_o_operator(m, left_family(m), right_family(m), R).holds);
    }
  Rng rng(61);
  const auto& cat = catalog2();
  int positives = 0;
  for (int s = 0; s < 1500; ++s) {
    const MulTensor& m = cat[rng() % cat.size()];
    Matrix R = random_matrix(gf5(), 2, 2, rng);
    bool rb = check_rota_baxter(m, R).holds;
    positives += rb;
    EXPECT_EQ(rb, check_o_operator(m, left_family(m), right_family(m), R).holds);
  }
  EXPECT_GT(positives, 10);
}

TEST(OOperator, SolutionLayoutAndEquivalence) {
  for (const MulTensor& m : catalog1())
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        Family l{matrix_of(gf5(), 1, 1, {a})}, r{matrix_of(gf5(), 1, 1, {b})};
        if (!check_representation(m, l, r).holds) continue;
        for (int t = 0; t < 5; ++t) {
          OOperatorCandidate c{Representation(AdmPoissonAlgebra(m), l, r), matrix_of(gf5(), 1, 1, {t})};
          SemidirectSolution sol = solution_from_o_operator(c);
          EXPECT_EQ(sol.r.coeff(0, 1), S(gf5(), t));
          EXPECT_EQ(sol.r.coeff(1, 0), S(gf5(), -t));
          EXPECT_TRUE(sol.r.is_skew());
          EXPECT_EQ(check_o_operator(c).holds, check_ybe(sol.algebra, sol.r, YbeKind::adm_pybe).holds);
        }
      }
}

TEST(OOperator, SearchSeededInstanceInducesHomomorphism) {
  AlgebraFile base;
  base.field = gf5();
  base.dim = 2;
  MulTensor m(gf5(), 2);
  m(0, 0, 0) = m(0, 1, 1) = m(1, 0, 1) = S(gf5(), 1);
  base.set_op("star", m);
  SearchSpec spec;
  spec.target = SearchTarget::o_operator;
  spec.base = base;
  spec.nonzero_only = true;
  auto hits = search_all(spec);
  ASSERT_FALSE(hits.empty());
  for (const AlgebraFile& f : hits) {
    Family l = resolve_family(*f.family("l"), 2, gf5()), r = resolve_family(*f.family("r"), 2, gf5());
    OOperatorCandidate c{Representation(AdmPoissonAlgebra(m), l, r), *f.map("theta")};
    PreAdmPoisson pre = induced_pre_from_o_operator(c);
    EXPECT_TRUE(check_pre_adm_poisson(pre).holds);
    MulTensor v = subadjacent(pre).star();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Vec u = Vec::basis(gf5(), 2, i), w = Vec::basis(gf5(), 2, j);
        EXPECT_EQ(c.theta.apply(apply_mul(v, u, w)), apply_mul(m, c.theta.apply(u), c.theta.apply(w)));
      }
  }
}

TEST(PreAdmPoisson, CorrectedResidualIdentity) {
  // c1 residual of the sum = -A(x,y,z) + B(x,z,y) + C(y,z,x) for arbitrary raw pairs.
  Rng rng(62);
  for (int s = 0; s < 40; ++s) {
    std::size_t n = 1 + s % 3;
    PreAdmPoisson p{random_tensor(Q(), n, rng), random_tensor(Q(), n, rng)};
    MulTensor sum = p.succ + p.prec;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec x = Vec::basis(Q(), n, i), y = Vec::basis(Q(), n, j), z = Vec::basis(Q(), n, k);
          Vec expect = pre_adm_terms(p, x, z, y)[1] + pre_adm_terms(p, y, z, x)[2] - pre_adm_terms(p, x, y, z)[0];
          EXPECT_EQ(c1_residual(sum, x, y, z), expect);
        }
  }
}

TEST(PreAdmPoisson, ExhaustiveDimensionOne) {
  for (const PreAdmPoisson& p : raw_pairs_dim1()) {
    bool pre = check_pre_adm_poisson(p).holds;
    if (pre) EXPECT_TRUE(check_adm_poisson(subadjacent(p).star()).holds);
    EXPECT_EQ(pre, check_representation(pre_rep_raw(p)).holds);
    EXPECT_EQ(pre, check_pre_poisson(pre_to_prepoisson_raw(p)).holds);
  }
}

TEST(PreAdmPoisson, SampledDimensionTwo) {
  Rng rng(63);
  auto valid = valid_pres_dim2();
  int positives = 0;
  for (int s = 0; s < 400; ++s) {
    PreAdmPoisson p = s % 2 ? valid[rng() % valid.size()]
                            : PreAdmPoisson{random_tensor(gf5(), 2, rng), random_tensor(gf5(), 2, rng)};
    bool pre = check_pre_adm_poisson(p).holds;
    positives += pre;
    EXPECT_EQ(pre, check_representation(pre_rep_raw(p)).holds);
    EXPECT_EQ(pre, check_pre_poisson(pre_to_prepoisson_raw(p)).holds);
    PreAdmPoisson back = prepoisson_to_pre_raw(pre_to_prepoisson_raw(p));
    EXPECT_EQ(back.succ, p.succ);
    EXPECT_EQ(back.prec, p.prec);
  }
  EXPECT_GE(positives, 200);
}

TEST(PreAdmPoisson, IdentityIsOOperatorOnPreRep) {
  for (const PreAdmPoisson& p : valid_pres_dim2()) {
    Representation rep = pre_rep(p);
    EXPECT_TRUE(check_o_operator(OOperatorCandidate{rep, Matrix::identity(gf5(), 2)}).holds);
  }
}

TEST(PreAdmPoisson, CanonicalSolution) {
  PreAdmPoisson zero{MulTensor(gf5(), 1), MulTensor(gf5(), 1)};
  SemidirectSolution sol = canonical_solution(zero);
  EXPECT_TRUE(sol.algebra.star().is_zero());
  EXPECT_EQ(sol.r.coeff(0, 1), S(gf5(), 1));
  EXPECT_EQ(sol.r.coeff(1, 0), S(gf5(), -1));
  EXPECT_TRUE(ybe_operator(sol.algebra.star(), sol.r, YbeOperator::P).is_zero());
  auto valid = valid_pres_dim2();
  for (std::size_t i = 0; i < valid.size(); i += 11) {
    SemidirectSolution s = canonical_solution(valid[i]);
    EXPECT_TRUE(operator_form_check(s.algebra.star(), s.r).holds);
    EXPECT_TRUE(cyclic_form_check(s.algebra.star(), s.r).holds);
  }
}

TEST(PreAdmPoisson, CompatibleStructuresFromInvertibleOperators) {
  int used = 0;
  for (const MulTensor& m : catalog2()) {
    AdmPoissonAlgebra a(m);
    // Invertible Rota-Baxter operators and nondegenerate skew solutions both give compatible structures.
    for (std::uint64_t idx = 0; idx < 625; idx += 7) {
      Matrix R = matrix_of(gf5(), 2, 2, digits(idx, 4, 5));
      if (!inverse(R) || !check_rota_baxter(m, R).holds) continue;
      PreAdmPoisson p = compatible_pre_from_invertible_o({adjoint_rep(a), R});
      EXPECT_TRUE(check_pre_adm_poisson(p).holds);
      EXPECT_EQ(subadjacent(p).star(), m);
      ++used;
    }
    for (long t = 1; t < 5; ++t) {
      Matrix r(gf5(), 2, 2);
      r(0, 1) = S(gf5(), t);
      r(1, 0) = S(gf5(), -t);
      if (!cyclic_form_check(m, RTensor{r}).holds) continue;
      PreAdmPoisson p = pre_from_symplectic(m, *inverse(r));
      EXPECT_TRUE(check_pre_adm_poisson(p).holds);
      EXPECT_EQ(subadjacent(p).star(), m);
      ++used;
    }
  }
  EXPECT_GT(used, 50);
}
