// O-operators, Rota-Baxter operators and pre-adm-Poisson algebras.
#pragma once

#include <array>

#include "admp/yang_baxter.hpp"

namespace admp {

// theta : V -> P with theta(v_j) = sum_i theta(i,j) e_i (rows indexed by P).
struct OOperatorCandidate {
  Representation rep;  // over the algebra, acting on V
  Matrix theta;        // n x m
};

// theta(u)*theta(v) = theta(l(theta u)v + r(theta v)u) on basis pairs of V.
AxiomReport check_o_operator(const MulTensor& star, const Family& l, const Family& r, const Matrix& theta);
AxiomReport check_o_operator(const OOperatorCandidate& c);
// R(x)*R(y) = R(R(x)*y + x*R(y)).
AxiomReport check_rota_baxter(const MulTensor& star, const Matrix& rb);

struct SemidirectSolution {
  AdmPoissonAlgebra algebra;  // P semidirect V* under the dual representation
  RTensor r;
};
// r = theta - tau(theta) with theta = sum theta(i,j) e_i (x) v_j*; basis of P first.
SemidirectSolution solution_from_o_operator(const OOperatorCandidate& c);

struct PreAdmPoisson {
  MulTensor succ, prec;
  std::size_t dim() const { return succ.dim(); }
};

// The three defining expressions at (x, y, z); all vanish iff the structure is valid.
std::array<Vec, 3> pre_adm_terms(const PreAdmPoisson& p, const Vec& x, const Vec& y, const Vec& z);
AxiomReport check_pre_adm_poisson(const PreAdmPoisson& p);

// x*y = x>y + x<y.
AdmPoissonAlgebra subadjacent(const PreAdmPoisson& p);
// (L_>, R_<) over the sub-adjacent algebra.
Representation pre_rep_raw(const PreAdmPoisson& p);
Representation pre_rep(const PreAdmPoisson& p);

// Left Zinbiel product `dot` and left pre-Lie product `star`.
struct PrePoisson {
  MulTensor dot, star;
  std::size_t dim() const { return dot.dim(); }
};

// Zinbiel, pre-Lie and both compatibility identities, then the associated
// Poisson algebra (x o y = x.y + y.x, [x,y] = x*y - y*x), prefixed "poisson.".
AxiomReport check_pre_poisson(const PrePoisson& q);
// x.y = 1/2(x>y + y<x), x*y = 1/2(x>y - y<x).
PrePoisson pre_to_prepoisson_raw(const PreAdmPoisson& p);
// x>y = x.y + x*y, x<y = y.x - y*x.
PreAdmPoisson prepoisson_to_pre_raw(const PrePoisson& q);
PrePoisson pre_to_prepoisson(const PreAdmPoisson& p);
PreAdmPoisson prepoisson_to_pre(const PrePoisson& q);

// u>v = l(theta u)v, u<v = r(theta v)u on V; requires a valid O-operator.
PreAdmPoisson induced_pre_from_o_operator(const OOperatorCandidate& c);
// r = sum e_i (x) e_i* - e_i* (x) e_i in the sub-adjacent algebra semidirect A*.
SemidirectSolution canonical_solution(const PreAdmPoisson& p);

// For an invertible O-operator: x>y = theta(l(x) theta^-1 y), x<y = theta(r(y) theta^-1 x).
PreAdmPoisson compatible_pre_from_invertible_o(const OOperatorCandidate& c);
// For a skew nondegenerate omega (gram w) satisfying the cyclic identity:
// omega(x>y, z) = omega(y, z*x) and omega(x<y, z) = omega(x, y*z).
PreAdmPoisson pre_from_symplectic(const MulTensor& star, const Matrix& w);

}  // namespace admp
