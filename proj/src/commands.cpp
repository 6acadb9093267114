#include "admp/commands.hpp"

#include "admp/o_operators.hpp"

namespace admp {

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {
      "adm-poisson", "poisson", "rep",  "matched-pair", "invariant-form", "bialgebra",   "poisson-bialgebra",
      "adm-pybe",    "cybe",    "aybe", "pybe",         "con1",           "eqv1",        "eqv2",
      "eqv3",        "cosp",    "cosp2", "o-operator",  "rota-baxter",    "pre-adm",     "pre-poisson",
      "operator-form", "cyclic-form"};
  return names;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "polarize", "depolarize", "semidirect",   "bowtie",       "manin-double", "coboundary-alpha", "split",
      "merge",    "solution-from-o", "induced-pre", "subadjacent", "canonical-solution", "dual-rep", "adjoint-rep"};
  return names;
}

namespace {

const MulTensor& need_op(const AlgebraFile& f, const char* name) {
  const MulTensor* m = f.op(name);
  if (!m) throw InvalidInput(std::string("missing operation '") + name + "'");
  return *m;
}

const Matrix& need_map(const AlgebraFile& f, const char* name) {
  const Matrix* m = f.map(name);
  if (!m) throw InvalidInput(std::string("missing map '") + name + "'");
  return *m;
}

RTensor need_r(const AlgebraFile& f, std::size_t n) {
  const NamedTensor* t = f.tensor("r");
  if (!t) return RTensor{Matrix(f.field, n, n)};  // absent r is zero
  if (t->rank != 2) throw InvalidInput("tensor 'r' must have rank 2");
  if (t->t2.rows() != n) throw DimensionMismatch("tensor 'r' has the wrong dimension");
  return RTensor{t->t2};
}

Comultiplication need_comul(const AlgebraFile& f, const char* name) {
  const NamedTensor* t = f.tensor(name);
  if (!t) throw InvalidInput(std::string("missing tensor '") + name + "'");
  if (t->rank != 3) throw InvalidInput(std::string("tensor '") + name + "' must have rank 3");
  Comultiplication c(f.field, t->t3.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) c(i, j, k) = t->t3(i, j, k);
  return c;
}

Tensor3 as_tensor3(const Cube& c) {
  Tensor3 t(c.field(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) t(i, j, k) = c(i, j, k);
  return t;
}

Family need_family(const AlgebraFile& f, const char* name, std::size_t n, std::optional<std::size_t> m = {}) {
  const NamedFamily* fam = f.family(name);
  if (!fam) {
    if (!m) throw InvalidInput(std::string("missing representation family '") + name + "'");
    return Family(n, Matrix(f.field, *m, *m));
  }
  return resolve_family(*fam, n, f.field, m);
}

// A representation of `star` given by families l and r; one may be omitted (zero).
std::pair<Family, Family> need_rep(const AlgebraFile& f, const MulTensor& star) {
  const NamedFamily *l = f.family("l"), *r = f.family("r");
  if (!l && !r) throw InvalidInput("missing representation families 'l' and 'r'");
  const NamedFamily* some = (l && !l->entries.empty()) ? l : r;
  std::optional<std::size_t> m;
  if (some && !some->entries.empty()) m = some->entries.begin()->second.rows();
  if (!m) throw InvalidInput("cannot infer the representation space dimension");
  return {need_family(f, "l", star.dim(), m), need_family(f, "r", star.dim(), m)};
}

MatchedPairData need_matched_pair(const AlgebraFile& f) {
  const MulTensor &s1 = need_op(f, "star1"), &s2 = need_op(f, "star2");
  std::size_t n1 = s1.dim(), n2 = s2.dim();
  return MatchedPairData{AdmPoissonAlgebra::raw(s1), AdmPoissonAlgebra::raw(s2),
                         need_family(f, "l1", n1, n2), need_family(f, "r1", n1, n2),
                         need_family(f, "l2", n2, n1), need_family(f, "r2", n2, n1)};
}

AlgebraFile blank(const AlgebraFile& f, std::size_t dim) {
  AlgebraFile out;
  out.field = f.field;
  out.dim = dim;
  return out;
}

Matrix theta_of(const AlgebraFile& f, std::size_t n, std::size_t m) {
  const Matrix& t = need_map(f, "theta");
  if (t.rows() != n || t.cols() != m)
    throw DimensionMismatch("map 'theta' must be " + std::to_string(n) + "x" + std::to_string(m));
  return t;
}

}  // namespace

std::size_t predicate_dim(const std::string& predicate, const AlgebraFile& f) {
  if (predicate == "matched-pair") {
    const MulTensor *a = f.op("star1"), *b = f.op("star2");
    if (a && b) return a->dim() + b->dim();
  }
  return f.dim;
}

AxiomReport evaluate_predicate(const std::string& p, const AlgebraFile& f, const CheckOptions& opt) {
  if (p == "adm-poisson") return check_adm_poisson(need_op(f, "star"));
  if (p == "poisson") return check_poisson(need_op(f, "bracket"), need_op(f, "circ"));
  if (p == "rep") {
    const MulTensor& s = need_op(f, "star");
    auto [l, r] = need_rep(f, s);
    return check_representation(s, l, r);
  }
  if (p == "matched-pair") return check_matched_pair(need_matched_pair(f));
  if (p == "invariant-form")
    return check_invariant_form(need_op(f, "star"), BilinearForm{need_map(f, "B")},
                                {opt.symmetric, opt.nondegenerate});
  if (p == "bialgebra") return check_adm_bialgebra(need_op(f, "star"), need_comul(f, "alpha"));
  if (p == "poisson-bialgebra")
    return check_poisson_bialgebra(need_op(f, "bracket"), need_op(f, "circ"),
                                   {need_comul(f, "delta"), need_comul(f, "Delta")});
  if (p == "adm-pybe") {
    const MulTensor& s = need_op(f, "star");
    return check_ybe(AdmPoissonAlgebra::raw(s), need_r(f, s.dim()), YbeKind::adm_pybe);
  }
  if (p == "cybe" || p == "aybe" || p == "pybe") {
    PoissonAlgebra pa = PoissonAlgebra::raw(need_op(f, "bracket"), need_op(f, "circ"));
    YbeKind k = p == "cybe" ? YbeKind::cybe : p == "aybe" ? YbeKind::aybe : YbeKind::pybe;
    return check_ybe(pa, need_r(f, pa.dim()), k);
  }
  if (auto c = coboundary_condition_from_string(p)) {
    const MulTensor& s = need_op(f, "star");
    return check_coboundary_condition(s, need_r(f, s.dim()), *c);
  }
  if (p == "o-operator") {
    const MulTensor& s = need_op(f, "star");
    auto [l, r] = need_rep(f, s);
    std::size_t m = l.empty() ? 0 : l[0].rows();
    return check_o_operator(s, l, r, theta_of(f, s.dim(), m));
  }
  if (p == "rota-baxter") return check_rota_baxter(need_op(f, "star"), need_map(f, "R"));
  if (p == "pre-adm") return check_pre_adm_poisson({need_op(f, "succ"), need_op(f, "prec")});
  if (p == "pre-poisson") return check_pre_poisson({need_op(f, "dot"), need_op(f, "star")});
  if (p == "operator-form") {
    const MulTensor& s = need_op(f, "star");
    return operator_form_check(s, need_r(f, s.dim()));
  }
  if (p == "cyclic-form") {
    const MulTensor& s = need_op(f, "star");
    return cyclic_form_check(s, need_r(f, s.dim()));
  }
  throw InvalidInput("unknown predicate '" + p + "'");
}

BuildResult build_construction(const std::string& c, const AlgebraFile& f) {
  BuildResult res;
  AlgebraFile& out = res.file;
  if (c == "polarize") {
    PoissonAlgebra p = polarize(AdmPoissonAlgebra::raw(need_op(f, "star")));
    out = blank(f, p.dim());
    out.set_op("bracket", p.bracket());
    out.set_op("circ", p.circ());
  } else if (c == "depolarize") {
    AdmPoissonAlgebra a = depolarize(PoissonAlgebra::raw(need_op(f, "bracket"), need_op(f, "circ")));
    out = blank(f, a.dim());
    out.set_op("star", a.star());
  } else if (c == "semidirect") {
    const MulTensor& s = need_op(f, "star");
    auto [l, r] = need_rep(f, s);
    AdmPoissonAlgebra a = semidirect(Representation(AdmPoissonAlgebra::raw(s), l, r));
    out = blank(f, a.dim());
    out.set_op("star", a.star());
  } else if (c == "bowtie") {
    AdmPoissonAlgebra a = bowtie(need_matched_pair(f));
    out = blank(f, a.dim());
    out.set_op("star", a.star());
  } else if (c == "manin-double") {
    const MulTensor& s = need_op(f, "star");
    MulTensor pstar = f.op("pstar") ? *f.op("pstar") : dual_structure(need_comul(f, "alpha"));
    ManinDouble d = manin_double(s, pstar);
    if (!d.report.holds) res.failed = d.report;
    out = blank(f, d.algebra.dim());
    out.set_op("star", d.algebra);
  } else if (c == "coboundary-alpha") {
    const MulTensor& s = need_op(f, "star");
    RTensor r = need_r(f, s.dim());
    out = blank(f, s.dim());
    out.set_op("star", s);
    out.set_tensor("r", r.coeff);
    out.set_tensor("alpha", as_tensor3(coboundary_alpha(s, r)));
  } else if (c == "split") {
    PoissonComultiplicationPair pr = split_comultiplication(need_comul(f, "alpha"));
    out = blank(f, pr.delta.dim());
    out.set_tensor("delta", as_tensor3(pr.delta));
    out.set_tensor("Delta", as_tensor3(pr.Delta));
  } else if (c == "merge") {
    PoissonComultiplicationPair pr{need_comul(f, "delta"), need_comul(f, "Delta")};
    validate_pair(pr);
    Comultiplication a = merge_comultiplication(pr);
    out = blank(f, a.dim());
    out.set_tensor("alpha", as_tensor3(a));
  } else if (c == "solution-from-o" || c == "induced-pre") {
    const MulTensor& s = need_op(f, "star");
    auto [l, r] = need_rep(f, s);
    std::size_t m = l[0].rows();
    OOperatorCandidate cand{Representation::raw(AdmPoissonAlgebra::raw(s), l, r), theta_of(f, s.dim(), m)};
    if (c == "solution-from-o") {
      SemidirectSolution sol = solution_from_o_operator(cand);
      out = blank(f, sol.algebra.dim());
      out.set_op("star", sol.algebra.star());
      out.set_tensor("r", sol.r.coeff);
    } else {
      PreAdmPoisson p = induced_pre_from_o_operator(cand);
      out = blank(f, p.dim());
      out.set_op("succ", p.succ);
      out.set_op("prec", p.prec);
    }
  } else if (c == "subadjacent") {
    AdmPoissonAlgebra a = subadjacent({need_op(f, "succ"), need_op(f, "prec")});
    out = blank(f, a.dim());
    out.set_op("star", a.star());
  } else if (c == "canonical-solution") {
    SemidirectSolution sol = canonical_solution({need_op(f, "succ"), need_op(f, "prec")});
    out = blank(f, sol.algebra.dim());
    out.set_op("star", sol.algebra.star());
    out.set_tensor("r", sol.r.coeff);
  } else if (c == "dual-rep" || c == "adjoint-rep") {
    const MulTensor& s = need_op(f, "star");
    Representation rep = c == "adjoint-rep" ? adjoint_rep(AdmPoissonAlgebra(s)) : [&] {
      auto [l, r] = need_rep(f, s);
      return dual_rep(Representation::raw(AdmPoissonAlgebra::raw(s), l, r));
    }();
    out = blank(f, s.dim());
    out.set_op("star", s);
    out.set_family("l", rep.l());
    out.set_family("r", rep.r());
  } else {
    throw InvalidInput("unknown construction '" + c + "'");
  }
  return res;
}

}  // namespace admp
