#include "admp/representations.hpp"

namespace admp {

std::size_t validate_family(const Family& f, std::size_t n, Field field, const char* what) {
  if (f.size() != n)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(n) + " matrices, got " +
                            std::to_string(f.size()));
  std::size_t m = f.empty() ? 0 : f[0].rows();
  for (const Matrix& a : f) {
    if (a.rows() != m || a.cols() != m)
      throw DimensionMismatch(std::string(what) + ": matrices must all be " + std::to_string(m) + "x" +
                              std::to_string(m));
    require_same_field(a.field(), field, what);
  }
  return m;
}

namespace {

struct RepShape {
  std::size_t n, m;
};

RepShape shape_of(const MulTensor& star, const Family& l, const Family& r) {
  std::size_t n = star.dim();
  std::size_t m = validate_family(l, n, star.field(), "representation l");
  std::size_t m2 = validate_family(r, n, star.field(), "representation r");
  require_dim(m, m2, "representation l and r");
  return {n, m};
}

}  // namespace

AxiomReport check_representation(const MulTensor& star, const Family& l, const Family& r) {
  auto [n, m] = shape_of(star, l, r);
  (void)m;
  Field f = star.field();
  Scalar t = third(f);
  Checker ck("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec xy = apply_mul(star, Vec::basis(f, n, i), Vec::basis(f, n, j));
      Vec yx = apply_mul(star, Vec::basis(f, n, j), Vec::basis(f, n, i));
      const Matrix &lx = l[i], &ly = l[j], &rx = r[i], &ry = r[j];
      Matrix lxy = family_at(l, xy), rxy = family_at(r, xy), ryx = family_at(r, yx);
      if (!ck.expect("rep-l-product", {i, j}, lxy, lx * ly - t * (rxy - lx * ry + ly * lx - ly * rx)))
        return ck.finish();
      if (!ck.expect("rep-r-l", {i, j}, ry * lx, lx * ry - t * (ly * lx - lx * ly + rxy - ryx)))
        return ck.finish();
      if (!ck.expect("rep-r-r", {i, j}, ry * rx, rxy - t * (ly * rx + lx * ry - lx * ly - ryx)))
        return ck.finish();
    }
  return ck.finish();
}

AxiomReport check_representation(const Representation& rep) {
  return check_representation(rep.alg().star(), rep.l(), rep.r());
}

AxiomReport check_rep_property(const MulTensor& star, const Family& l, const Family& r) {
  auto [n, m] = shape_of(star, l, r);
  (void)m;
  Field f = star.field();
  Checker ck("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec xy = apply_mul(star, Vec::basis(f, n, i), Vec::basis(f, n, j));
      Vec yx = apply_mul(star, Vec::basis(f, n, j), Vec::basis(f, n, i));
      if (!ck.expect("rep-weak-associativity", {i, j}, family_at(l, xy) + r[i] * r[j],
                     l[i] * l[j] + family_at(r, yx)))
        break;
    }
  return ck.finish();
}

Representation::Representation(AdmPoissonAlgebra alg, Family l, Family r, bool check)
    : alg_(std::move(alg)), l_(std::move(l)), r_(std::move(r)) {
  vdim_ = shape_of(alg_.star(), l_, r_).m;
  if (check) {
    AxiomReport rep = check_representation(alg_.star(), l_, r_);
    if (!rep.holds) throw InvalidInput("not a representation: " + format_failure(*rep.witness));
  }
}

Representation::Representation(AdmPoissonAlgebra alg, Family l, Family r)
    : Representation(std::move(alg), std::move(l), std::move(r), true) {}

Representation Representation::raw(AdmPoissonAlgebra alg, Family l, Family r) {
  return Representation(std::move(alg), std::move(l), std::move(r), false);
}

Representation adjoint_rep(const AdmPoissonAlgebra& a) {
  return Representation::raw(a, left_family(a.star()), right_family(a.star()));
}

Representation dual_rep_raw(const Representation& rep) {
  // With rho*(x) = -rho(x)^T, the pair (-r*, -l*) is (r^T, l^T).
  auto negate = [](Family f) {
    for (auto& m : f) m = -m;
    return f;
  };
  return Representation::raw(rep.alg(), negate(neg_dual_endo_family(rep.r())),
                             negate(neg_dual_endo_family(rep.l())));
}

Representation dual_rep(const Representation& rep) {
  AxiomReport r = check_representation(rep);
  if (!r.holds) throw InvalidInput("dual_rep needs a representation: " + format_failure(*r.witness));
  return dual_rep_raw(rep);
}

MulTensor semidirect_raw(const MulTensor& star, const Family& l, const Family& r) {
  auto [n, m] = shape_of(star, l, r);
  MulTensor t(star.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = star(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        t(i, n + v, n + w) = l[i](w, v);
        t(n + v, i, n + w) = r[i](w, v);
      }
  return t;
}

AdmPoissonAlgebra semidirect(const Representation& rep) {
  return AdmPoissonAlgebra(semidirect_raw(rep.alg().star(), rep.l(), rep.r()));
}

namespace {

std::pair<Family, Family> to_adm_families(const Family& sb, const Family& sc) {
  Family l, r;
  for (std::size_t i = 0; i < sb.size(); ++i) {
    l.push_back(sc[i] + sb[i]);
    r.push_back(sc[i] - sb[i]);
  }
  return {l, r};
}

}  // namespace

AxiomReport check_poisson_representation(const PoissonRepresentation& prep) {
  const PoissonAlgebra& p = prep.palg;
  validate_family(prep.s_bracket, p.dim(), p.field(), "Poisson representation bracket part");
  validate_family(prep.s_circ, p.dim(), p.field(), "Poisson representation circ part");
  auto [l, r] = to_adm_families(prep.s_bracket, prep.s_circ);
  return check_representation(depolarize_raw(p.bracket(), p.circ()), l, r);
}

PoissonRepresentation rep_to_poisson_rep(const Representation& rep) {
  AxiomReport ok = check_representation(rep);
  if (!ok.holds) throw InvalidInput("not a representation: " + format_failure(*ok.witness));
  Scalar h = half(rep.alg().field());
  PoissonRepresentation out{polarize(rep.alg()), rep.vdim(), {}, {}};
  for (std::size_t i = 0; i < rep.l().size(); ++i) {
    out.s_bracket.push_back(h * (rep.l()[i] - rep.r()[i]));
    out.s_circ.push_back(h * (rep.l()[i] + rep.r()[i]));
  }
  return out;
}

Representation poisson_rep_to_rep(const PoissonRepresentation& prep) {
  AxiomReport ok = check_poisson_representation(prep);
  if (!ok.holds) throw InvalidInput("not a Poisson representation: " + format_failure(*ok.witness));
  auto [l, r] = to_adm_families(prep.s_bracket, prep.s_circ);
  return Representation::raw(depolarize(prep.palg), std::move(l), std::move(r));
}

}  // namespace admp
