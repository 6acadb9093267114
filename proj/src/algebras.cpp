#include "admp/algebras.hpp"

namespace admp {

Scalar third(Field f) { return Scalar::one(f) / Scalar::from_int(f, 3); }
Scalar half(Field f) { return Scalar::one(f) / Scalar::from_int(f, 2); }

namespace {

struct Basis {
  Field f;
  std::size_t n;
  Vec operator()(std::size_t i) const { return Vec::basis(f, n, i); }
};

}  // namespace

AxiomReport check_adm_poisson(const MulTensor& m) {
  std::size_t n = m.dim();
  Basis e{m.field(), n};
  Scalar t = third(m.field());
  auto s = [&](const Vec& x, const Vec& y) { return apply_mul(m, x, y); };
  Checker ck("triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        Vec xy = s(x, y);
        Vec lhs = s(xy, z);
        Vec inner = s(z, xy) - s(x, s(z, y)) + s(y, s(x, z)) - s(y, s(z, x));
        Vec rhs = s(x, s(y, z)) - t * inner;
        ck.count();
        if (!ck.expect("adm-poisson", {i, j, k}, lhs, rhs)) return ck.finish();
      }
  return ck.finish();
}

AxiomReport check_weak_associativity(const MulTensor& m) {
  std::size_t n = m.dim();
  Basis e{m.field(), n};
  auto s = [&](const Vec& x, const Vec& y) { return apply_mul(m, x, y); };
  Checker ck("triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        ck.count();
        if (!ck.expect("weak-associativity", {i, j, k}, s(s(x, y), z) - s(x, s(y, z)),
                       s(z, s(y, x)) - s(s(z, y), x)))
          return ck.finish();
      }
  return ck.finish();
}

namespace {

bool antisymmetry(Checker& ck, const MulTensor& b, const Basis& e) {
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      if (!ck.expect("antisymmetry", {i, j}, apply_mul(b, e(i), e(j)), -Scalar::one(e.f) * apply_mul(b, e(j), e(i))))
        return false;
  return true;
}

bool jacobi(Checker& ck, const MulTensor& b, const Basis& e) {
  auto br = [&](const Vec& x, const Vec& y) { return apply_mul(b, x, y); };
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      for (std::size_t k = 0; k < e.n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        if (!ck.expect_zero("jacobi", {i, j, k}, br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))))
          return false;
      }
  return true;
}

bool commutativity(Checker& ck, const MulTensor& c, const Basis& e) {
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      if (!ck.expect("commutativity", {i, j}, apply_mul(c, e(i), e(j)), apply_mul(c, e(j), e(i)))) return false;
  return true;
}

bool associativity(Checker& ck, const MulTensor& c, const Basis& e) {
  auto o = [&](const Vec& x, const Vec& y) { return apply_mul(c, x, y); };
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      for (std::size_t k = 0; k < e.n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        if (!ck.expect("associativity", {i, j, k}, o(o(x, y), z), o(x, o(y, z)))) return false;
      }
  return true;
}

void count_triples(Checker& ck, std::size_t n) {
  for (std::size_t q = 0; q < n * n * n; ++q) ck.count();
}

}  // namespace

AxiomReport check_lie(const MulTensor& bracket) {
  Basis e{bracket.field(), bracket.dim()};
  Checker ck("triples");
  count_triples(ck, e.n);
  if (antisymmetry(ck, bracket, e)) jacobi(ck, bracket, e);
  return ck.finish();
}

AxiomReport check_commutative_associative(const MulTensor& circ) {
  Basis e{circ.field(), circ.dim()};
  Checker ck("triples");
  count_triples(ck, e.n);
  if (commutativity(ck, circ, e)) associativity(ck, circ, e);
  return ck.finish();
}

AxiomReport check_poisson(const MulTensor& bracket, const MulTensor& circ) {
  require_dim(bracket.dim(), circ.dim(), "Poisson operations");
  require_same_field(bracket.field(), circ.field(), "Poisson operations");
  Basis e{bracket.field(), bracket.dim()};
  Checker ck("triples");
  count_triples(ck, e.n);
  if (!antisymmetry(ck, bracket, e) || !jacobi(ck, bracket, e)) return ck.finish();
  if (!commutativity(ck, circ, e) || !associativity(ck, circ, e)) return ck.finish();
  auto br = [&](const Vec& x, const Vec& y) { return apply_mul(bracket, x, y); };
  auto o = [&](const Vec& x, const Vec& y) { return apply_mul(circ, x, y); };
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      for (std::size_t k = 0; k < e.n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        if (!ck.expect("leibniz", {i, j, k}, br(x, o(y, z)), o(br(x, y), z) + o(y, br(x, z))))
          return ck.finish();
      }
  return ck.finish();
}

std::pair<MulTensor, MulTensor> polarize_raw(const MulTensor& star) {
  Scalar h = half(star.field());
  MulTensor op = opposite(star);
  return {scale(h, star - op), scale(h, star + op)};
}

MulTensor depolarize_raw(const MulTensor& bracket, const MulTensor& circ) { return circ + bracket; }

AdmPoissonAlgebra::AdmPoissonAlgebra(MulTensor star) : star_(std::move(star)) {
  AxiomReport r = check_adm_poisson(star_);
  if (!r.holds) throw InvalidInput("not an adm-Poisson algebra: " + format_failure(*r.witness));
}

AdmPoissonAlgebra AdmPoissonAlgebra::raw(MulTensor star) { return AdmPoissonAlgebra(std::move(star), Unchecked{}); }

PoissonAlgebra::PoissonAlgebra(MulTensor bracket, MulTensor circ)
    : bracket_(std::move(bracket)), circ_(std::move(circ)) {
  AxiomReport r = check_poisson(bracket_, circ_);
  if (!r.holds) throw InvalidInput("not a Poisson algebra: " + format_failure(*r.witness));
}

PoissonAlgebra PoissonAlgebra::raw(MulTensor bracket, MulTensor circ) {
  return PoissonAlgebra(std::move(bracket), std::move(circ), Unchecked{});
}

PoissonAlgebra polarize(const AdmPoissonAlgebra& a) {
  AxiomReport r = check_adm_poisson(a.star());
  if (!r.holds) throw InvalidInput("polarize needs an adm-Poisson algebra: " + format_failure(*r.witness));
  auto [b, c] = polarize_raw(a.star());
  return PoissonAlgebra::raw(std::move(b), std::move(c));
}

AdmPoissonAlgebra depolarize(const PoissonAlgebra& p) {
  AxiomReport r = check_poisson(p.bracket(), p.circ());
  if (!r.holds) throw InvalidInput("depolarize needs a Poisson algebra: " + format_failure(*r.witness));
  return AdmPoissonAlgebra::raw(depolarize_raw(p.bracket(), p.circ()));
}

}  // namespace admp
