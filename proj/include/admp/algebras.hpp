// Adm-Poisson and Poisson algebras given by structure constants.
#pragma once

#include <utility>

#include "admp/report.hpp"

namespace admp {

// One operation * with
// (x*y)*z = x*(y*z) - 1/3(-x*(z*y) + z*(x*y) + y*(x*z) - y*(z*x)).
class AdmPoissonAlgebra {
 public:
  // Throws InvalidInput when the identity fails.
  explicit AdmPoissonAlgebra(MulTensor star);
  static AdmPoissonAlgebra raw(MulTensor star);

  const MulTensor& star() const { return star_; }
  std::size_t dim() const { return star_.dim(); }
  Field field() const { return star_.field(); }
  Vec mul(const Vec& x, const Vec& y) const { return apply_mul(star_, x, y); }
  Matrix L(const Vec& x) const { return left_mult(star_, x); }
  Matrix R(const Vec& x) const { return right_mult(star_, x); }

 private:
  struct Unchecked {};
  AdmPoissonAlgebra(MulTensor star, Unchecked) : star_(std::move(star)) {}
  MulTensor star_;
};

// A Lie bracket and a commutative associative product tied by the Leibniz rule.
class PoissonAlgebra {
 public:
  PoissonAlgebra(MulTensor bracket, MulTensor circ);
  static PoissonAlgebra raw(MulTensor bracket, MulTensor circ);

  const MulTensor& bracket() const { return bracket_; }
  const MulTensor& circ() const { return circ_; }
  std::size_t dim() const { return bracket_.dim(); }
  Field field() const { return bracket_.field(); }

 private:
  struct Unchecked {};
  PoissonAlgebra(MulTensor b, MulTensor c, Unchecked) : bracket_(std::move(b)), circ_(std::move(c)) {}
  MulTensor bracket_, circ_;
};

AxiomReport check_adm_poisson(const MulTensor& m);
// (x*y)*z - x*(y*z) = z*(y*x) - (z*y)*x, a consequence of the adm-Poisson identity.
AxiomReport check_weak_associativity(const MulTensor& m);
AxiomReport check_poisson(const MulTensor& bracket, const MulTensor& circ);

// Lie algebra only (antisymmetry and Jacobi).
AxiomReport check_lie(const MulTensor& bracket);
// Commutative and associative.
AxiomReport check_commutative_associative(const MulTensor& circ);

// x o y = 1/2(x*y + y*x), [x,y] = 1/2(x*y - y*x); returns (bracket, circ).
std::pair<MulTensor, MulTensor> polarize_raw(const MulTensor& star);
// x*y = x o y + [x,y].
MulTensor depolarize_raw(const MulTensor& bracket, const MulTensor& circ);

PoissonAlgebra polarize(const AdmPoissonAlgebra& a);
AdmPoissonAlgebra depolarize(const PoissonAlgebra& p);

// 1/3 and 1/2 in the field of f.
Scalar third(Field f);
Scalar half(Field f);

}  // namespace admp
