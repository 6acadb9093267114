#include "admp/bialgebras.hpp"

#include <stdexcept>

namespace admp {

MulTensor dual_structure(const Comultiplication& c) {
  std::size_t n = c.dim();
  MulTensor d(c.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(j, k, i) = c(i, j, k);
  return d;
}

Comultiplication comultiplication_of(const MulTensor& dual) {
  std::size_t n = dual.dim();
  Comultiplication c(dual.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = dual(j, k, i);
  return c;
}

Tensor3 id_tensor_comul(const Comultiplication& a, const Matrix& t) {
  std::size_t n = a.dim();
  Tensor3 out(a.field(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (t(j, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) out(j, l, m) += t(j, k) * a(k, l, m);
    }
  return out;
}

Tensor3 comul_tensor_id(const Comultiplication& a, const Matrix& t) {
  std::size_t n = a.dim();
  Tensor3 out(a.field(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (t(j, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) out(l, m, k) += t(j, k) * a(j, l, m);
    }
  return out;
}

AxiomReport check_coalgebra_direct(const Comultiplication& c) {
  std::size_t n = c.dim();
  Field f = c.field();
  Scalar t = third(f);
  Checker ck("elements");
  for (std::size_t i = 0; i < n; ++i) {
    ck.count();
    Matrix ax = c.at(Vec::basis(f, n, i));
    Tensor3 a = id_tensor_comul(c, ax), b = comul_tensor_id(c, ax);
    Tensor3 lhs = a + t * (tau23(a) + tau12(tau23(a)));
    Tensor3 rhs = b + t * (tau12(a) + tau23(tau12(a)));
    if (!ck.expect("coalgebra", {i}, lhs, rhs)) break;
  }
  return ck.finish();
}

AxiomReport check_coalgebra(const Comultiplication& c) {
  AxiomReport direct = check_coalgebra_direct(c);
  bool dual = check_adm_poisson(dual_structure(c)).holds;
  if (direct.holds != dual) throw std::logic_error("coalgebra check: direct and dual verdicts disagree");
  return direct;
}

AxiomReport check_bialgebra_condition(const MulTensor& star, const Comultiplication& c, int which) {
  require_dim(star.dim(), c.dim(), "bialgebra");
  require_same_field(star.field(), c.field(), "bialgebra");
  if (which < 1 || which > 3) throw InvalidInput("bialgebra condition must be 1, 2 or 3");
  std::size_t n = star.dim();
  Field f = star.field();
  Scalar t = third(f);
  Matrix id = Matrix::identity(f, n);
  const char* names[] = {"bialgebra-1", "bialgebra-2", "bialgebra-3"};
  Checker ck("pairs");
  auto ox = [](const Matrix& a, const Matrix& b, const Matrix& m) { return tensor2_apply(a, b, m); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j);
      Matrix Lx = left_mult(star, x), Ly = left_mult(star, y), Rx = right_mult(star, x), Ry = right_mult(star, y);
      Matrix ax = c.at(x), ay = c.at(y), axy = c.at(apply_mul(star, x, y)), ayx = c.at(apply_mul(star, y, x));
      Matrix lxay = ox(Lx, id, ay), lyax = ox(Ly, id, ax);
      Matrix lhs, rhs;
      if (which == 1 || which == 2) {
        lhs = axy - ox(Ry, id, ax) - ox(id, Lx, ay);
        rhs = which == 1 ? t * (lyax - ox(id, Ly, ax) + lxay - ox(Rx, id, ay) + tau(lxay + lyax - axy))
                         : t * (tau(lxay + lyax - ox(Ry, id, ax) - ox(id, Lx, ay)) - ayx + lxay + lyax);
      } else {
        lhs = ox(id, Ry, ax) - lyax + tau(ox(id, Rx, ay) - lxay);
        rhs = t * (ox(Ry, id, ax) - ox(id, Ly, ax) + ox(id, Lx, ay) - ox(Rx, id, ay) + tau(ayx - axy));
      }
      if (!ck.expect(names[which - 1], {i, j}, lhs, rhs)) return ck.finish();
    }
  return ck.finish();
}

AxiomReport check_adm_bialgebra(const MulTensor& star, const Comultiplication& c) {
  require_dim(star.dim(), c.dim(), "bialgebra");
  require_same_field(star.field(), c.field(), "bialgebra");
  Checker ck("pairs");
  if (!ck.absorb(check_adm_poisson(star), "algebra.")) return ck.finish();
  if (!ck.absorb(check_coalgebra(c))) return ck.finish();
  AxiomReport out;
  for (int k = 1; k <= 3; ++k) {
    out = check_bialgebra_condition(star, c, k);
    if (!out.holds) return out;
  }
  return out;
}

AxiomReport check_bialgebra_matched_pair(const MulTensor& star, const Comultiplication& c) {
  return check_matched_pair(manin_data(star, dual_structure(c)));
}

AxiomReport check_bialgebra_manin(const MulTensor& star, const Comultiplication& c) {
  ManinDouble d = manin_double(star, dual_structure(c));
  return check_standard_manin_triple(d.algebra, star.dim());
}

void validate_pair(const PoissonComultiplicationPair& pair) {
  const Comultiplication &d = pair.delta, &D = pair.Delta;
  require_dim(d.dim(), D.dim(), "Poisson comultiplication pair");
  require_same_field(d.field(), D.field(), "Poisson comultiplication pair");
  std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (d(i, j, k) != -d(i, k, j)) throw InvalidInput("delta is not anti-cocommutative");
        if (D(i, j, k) != D(i, k, j)) throw InvalidInput("Delta is not cocommutative");
      }
}

AxiomReport check_poisson_bialgebra(const MulTensor& bracket, const MulTensor& circ,
                                    const PoissonComultiplicationPair& pair) {
  validate_pair(pair);
  require_dim(bracket.dim(), pair.delta.dim(), "Poisson bialgebra");
  require_dim(circ.dim(), pair.delta.dim(), "Poisson bialgebra");
  const Comultiplication &d = pair.delta, &D = pair.Delta;
  std::size_t n = d.dim();
  Field f = d.field();
  Matrix id = Matrix::identity(f, n);
  auto ox = [](const Matrix& a, const Matrix& b, const Matrix& m) { return tensor2_apply(a, b, m); };

  Checker ck("pairs");
  if (!ck.absorb(check_lie(dual_structure(d)), "dual-delta.")) return ck.finish();
  if (!ck.absorb(check_commutative_associative(dual_structure(D)), "dual-Delta.")) return ck.finish();
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = Vec::basis(f, n, i);
    Matrix dx = d.at(x), Dx = D.at(x);
    Tensor3 lhs = id_tensor_comul(D, dx);
    Tensor3 rhs = comul_tensor_id(d, Dx) + tau12(id_tensor_comul(d, Dx));
    if (!ck.expect("co-leibniz", {i}, lhs, rhs)) return ck.finish();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ck.count();
      Vec x = Vec::basis(f, n, i), y = Vec::basis(f, n, j);
      Matrix adx = left_mult(bracket, x), ady = left_mult(bracket, y);
      Matrix Lx = left_mult(circ, x), Ly = left_mult(circ, y), Ry = right_mult(circ, y);
      Matrix dx = d.at(x), dy = d.at(y), Dx = D.at(x), Dy = D.at(y);
      Vec bxy = apply_mul(bracket, x, y), cxy = apply_mul(circ, x, y);
      if (!ck.expect("cocycle", {i, j}, d.at(bxy),
                     ox(adx, id, dy) + ox(id, adx, dy) - ox(ady, id, dx) - ox(id, ady, dx)))
        return ck.finish();
      if (!ck.expect("infinitesimal", {i, j}, D.at(cxy), ox(id, Lx, Dy) + ox(Ry, id, Dx))) return ck.finish();
      if (!ck.expect("compat-delta", {i, j}, d.at(cxy),
                     ox(Lx, id, dy) + ox(Ly, id, dx) + ox(id, adx, Dy) + ox(id, ady, Dx)))
        return ck.finish();
      if (!ck.expect("compat-Delta", {i, j}, D.at(bxy),
                     ox(adx, id, Dy) + ox(id, adx, Dy) + ox(Ly, id, dx) - ox(id, Ly, dx)))
        return ck.finish();
    }
  return ck.finish();
}

PoissonComultiplicationPair split_comultiplication(const Comultiplication& c) {
  std::size_t n = c.dim();
  Scalar h = half(c.field());
  PoissonComultiplicationPair out{Comultiplication(c.field(), n), Comultiplication(c.field(), n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.delta(i, j, k) = h * (c(i, j, k) - c(i, k, j));
        out.Delta(i, j, k) = h * (c(i, j, k) + c(i, k, j));
      }
  return out;
}

Comultiplication merge_comultiplication(const PoissonComultiplicationPair& pair) {
  require_dim(pair.delta.dim(), pair.Delta.dim(), "merge");
  std::size_t n = pair.delta.dim();
  Comultiplication c(pair.delta.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = pair.delta(i, j, k) + pair.Delta(i, j, k);
  return c;
}

}  // namespace admp
