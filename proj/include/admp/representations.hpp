// Representations (l, r, V) of adm-Poisson algebras and their constructions.
#pragma once

#include "admp/algebras.hpp"

namespace admp {

// l[i] = l(e_i), r[i] = r(e_i), each vdim x vdim.
class Representation {
 public:
  // Validates shapes and the representation identities.
  Representation(AdmPoissonAlgebra alg, Family l, Family r);
  // Validates shapes only.
  static Representation raw(AdmPoissonAlgebra alg, Family l, Family r);

  const AdmPoissonAlgebra& alg() const { return alg_; }
  std::size_t vdim() const { return vdim_; }
  const Family& l() const { return l_; }
  const Family& r() const { return r_; }
  Matrix l_at(const Vec& x) const { return family_at(l_, x); }
  Matrix r_at(const Vec& x) const { return family_at(r_, x); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.alg_.star() == b.alg_.star() && a.l_ == b.l_ && a.r_ == b.r_;
  }

 private:
  Representation(AdmPoissonAlgebra alg, Family l, Family r, bool check);
  AdmPoissonAlgebra alg_;
  std::size_t vdim_ = 0;
  Family l_, r_;
};

// A Poisson-algebra representation stored as (S_[,], S_o). Valid iff its
// image (S_[,] + S_o, S_o - S_[,]) is a representation of the depolarized algebra.
struct PoissonRepresentation {
  PoissonAlgebra palg;
  std::size_t vdim = 0;
  Family s_bracket, s_circ;
};

// Shape checks shared by all family-valued inputs; throws DimensionMismatch.
std::size_t validate_family(const Family& f, std::size_t n, Field field, const char* what);

AxiomReport check_representation(const MulTensor& star, const Family& l, const Family& r);
AxiomReport check_representation(const Representation& rep);
// l(x*y) + r(x)r(y) = l(x)l(y) + r(y*x), implied by the representation identities.
AxiomReport check_rep_property(const MulTensor& star, const Family& l, const Family& r);

Representation adjoint_rep(const AdmPoissonAlgebra& a);
// (l, r) -> (r^T, l^T), i.e. (-r*, -l*) with rho*(x) = -rho(x)^T.
Representation dual_rep(const Representation& rep);
Representation dual_rep_raw(const Representation& rep);

// (x+u)*(y+v) = x*y + l(x)v + r(y)u on P + V, basis of P first.
MulTensor semidirect_raw(const MulTensor& star, const Family& l, const Family& r);
AdmPoissonAlgebra semidirect(const Representation& rep);

AxiomReport check_poisson_representation(const PoissonRepresentation& prep);
PoissonRepresentation rep_to_poisson_rep(const Representation& rep);
Representation poisson_rep_to_rep(const PoissonRepresentation& prep);

}  // namespace admp
