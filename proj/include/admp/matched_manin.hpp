// Matched pairs, bowtie sums, invariant bilinear forms and Manin doubles.
#pragma once

#include "admp/representations.hpp"

namespace admp {

// l1, r1 : P1 -> End(P2) (n1 matrices of size n2); l2, r2 : P2 -> End(P1).
struct MatchedPairData {
  AdmPoissonAlgebra p1, p2;
  Family l1, r1, l2, r2;
};

// Checks both algebras, both representations (identities prefixed "p1.", "p2.",
// "rep1.", "rep2.") and the six mixed identities matched-pair-1..6.
// matched-pair-1..3 report indices (x, y, a) with x, y in P1, a in P2;
// matched-pair-4..6 report (a, b, x) with a, b in P2, x in P1.
AxiomReport check_matched_pair(const MatchedPairData& mp);

// (x+a)*(y+b) = x*y + r2(b)x + l2(a)y + l1(x)b + r1(y)a + a*b; basis of P1 first.
MulTensor bowtie_raw(const MatchedPairData& mp);
// Validates the matched pair first.
AdmPoissonAlgebra bowtie(const MatchedPairData& mp);

struct BilinearForm {
  Matrix gram;  // B(e_i, e_j) = gram(i, j)
  std::size_t dim() const { return gram.rows(); }
};

struct FormRequirements {
  bool symmetric = false;
  bool nondegenerate = false;
};

// B(x*y, z) = B(x, y*z) on basis triples, plus the requested flags.
AxiomReport check_invariant_form(const MulTensor& star, const BilinearForm& b, FormRequirements req = {});

// gram [[0, I], [I, 0]] on P + P*.
BilinearForm standard_form(std::size_t n, Field f);

// Matched-pair data (P, P*, -R_P*, -L_P*, -R_P**, -L_P**) with rho* = -rho^T.
MatchedPairData manin_data(const MulTensor& p, const MulTensor& pstar);

struct ManinDouble {
  MulTensor algebra;   // bowtie of the Manin data, dim 2n
  AxiomReport report;  // check_matched_pair of the data
};
ManinDouble manin_double(const MulTensor& p, const MulTensor& pstar);

// The double is adm-Poisson, P and P* are subalgebras and the standard form is invariant.
AxiomReport check_standard_manin_triple(const MulTensor& d, std::size_t n);

}  // namespace admp
