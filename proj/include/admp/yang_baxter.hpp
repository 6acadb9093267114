// r-tensors, Yang-Baxter operators and the coboundary constructions built from them.
#pragma once

#include <optional>

#include "admp/bialgebras.hpp"

namespace admp {

// r = sum coeff(i,j) e_i (x) e_j.
struct RTensor {
  Matrix coeff;

  std::size_t dim() const { return coeff.rows(); }
  Field field() const { return coeff.field(); }
  RTensor transposed() const { return {coeff.transpose()}; }
  RTensor skew_part() const;       // 1/2(r - tau r)
  RTensor symmetric_part() const;  // 1/2(r + tau r)
  bool is_skew() const;
  bool is_symmetric() const;
  // r#(u*) = sum_ij coeff(i,j) u_i e_j, i.e. coeff^T applied to dual coordinates.
  Matrix sharp() const { return coeff.transpose(); }
  friend bool operator==(const RTensor& a, const RTensor& b) { return a.coeff == b.coeff; }
};

enum class YbeOperator { P, Q, A, C };

// P, Q and A use the given product with the sign pattern
//   P, A: r23.r12 - r13.r23 - r12.r13     Q: r12.r23 - r23.r13 - r13.r12
// and C treats the product as a bracket: [r23,r12] + [r23,r13] + [r13,r12].
Tensor3 ybe_operator(const MulTensor& m, const RTensor& r, YbeOperator which);

enum class YbeKind { adm_pybe, cybe, aybe, pybe };

// The adm-Poisson equation P(r) = 0. Other kinds throw InvalidInput.
AxiomReport check_ybe(const AdmPoissonAlgebra& a, const RTensor& r, YbeKind kind);
// cybe: C(r) = 0 over the bracket; aybe: A(r) = 0 over circ; pybe: both. adm_pybe throws.
AxiomReport check_ybe(const PoissonAlgebra& p, const RTensor& r, YbeKind kind);

// alpha(x) = (id (x) L(x) - R(x) (x) id) r.
Comultiplication coboundary_alpha(const MulTensor& star, const RTensor& r);

enum class CoboundaryCondition { eqv1, eqv2, eqv3, cosp, con1, cosp2, corollary1a, corollary1b };
std::string to_string(CoboundaryCondition c);
std::optional<CoboundaryCondition> coboundary_condition_from_string(const std::string& s);

AxiomReport check_coboundary_condition(const MulTensor& star, const RTensor& r, CoboundaryCondition which);

// The correction terms of the cosp identity for one x, each a Tensor3.
// With s = r + tau r and K(y) = (L(y) (x) id - id (x) R(y)) s:
//   a: sum r_pq  R(x)e_p (x) K(e_q)
//   b: sum r_pq  (id (x) R(x) (x) id)(tau (x) id)(e_p (x) K(e_q))
//   c: sum r_pq  u + (id (x) tau)u,   u = (L(e_p) (x) id)K(x) (x) e_q
//   d: sum r_pq  v + (tau (x) id)v,   v = e_p (x) K(x * e_q)
//   e: sum r_pq  e_p (x) (R(e_q) (x) id)K(x)
//   f: sum r_pq  (R(e_p) (x) id)K(x) (x) e_q
struct CospTerms {
  Tensor3 a, b, c, d, e, f;
};
CospTerms cosp_terms(const MulTensor& star, const RTensor& r, const Vec& x);
// Full left-hand side of the cosp identity at x.
Tensor3 cosp_value(const MulTensor& star, const RTensor& r, const Vec& x);

// Five conditions characterising coboundary Poisson bialgebras on a Poisson algebra.
AxiomReport check_coboundary_poisson_conditions(const MulTensor& bracket, const MulTensor& circ, const RTensor& r);
// delta(x) = (ad x (x) id + id (x) ad x) r, Delta(x) = (id (x) L(x) - L(x) (x) id) r.
PoissonComultiplicationPair coboundary_poisson_pair(const MulTensor& bracket, const MulTensor& circ,
                                                    const RTensor& r);

// r#a* * r#b* = r#(R(r#a*)^T b* + L(r#b*)^T a*) for skew r; throws if r is not skew.
AxiomReport operator_form_check(const MulTensor& star, const RTensor& r);
// omega(x*y,z) + omega(y*z,x) + omega(z*x,y) = 0 with gram(omega) = coeff^-1.
// Throws InvalidInput if r is not skew or is degenerate.
AxiomReport cyclic_form_check(const MulTensor& star, const RTensor& r);

struct CoboundaryCorrespondence {
  bool is_coboundary_poisson = false;
  std::optional<RTensor> r1;
};
// Solves (id (x) L(x) - R(x) (x) id)(s - r1) = 0 and (L(x) (x) id - id (x) R(x))(s + r1) = 0
// for r1, s = r + tau r. Free variables are set to zero.
CoboundaryCorrespondence coboundary_correspondence(const MulTensor& star, const RTensor& r);

}  // namespace admp
