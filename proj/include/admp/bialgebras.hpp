// Comultiplications, adm-Poisson bialgebras and Poisson bialgebras.
#pragma once

#include "admp/matched_manin.hpp"

namespace admp {

// c'(j,k,i) = a(i,j,k): the product on P* dual to alpha.
MulTensor dual_structure(const Comultiplication& c);
// Inverse relabelling of dual_structure.
Comultiplication comultiplication_of(const MulTensor& dual);

// (id (x) alpha) t and (alpha (x) id) t for a rank-2 tensor t.
Tensor3 id_tensor_comul(const Comultiplication& a, const Matrix& t);
Tensor3 comul_tensor_id(const Comultiplication& a, const Matrix& t);

// The coassociativity-type identity on each e_i, checked directly.
AxiomReport check_coalgebra_direct(const Comultiplication& c);
// Evaluates both the direct identity and check_adm_poisson(dual_structure(c));
// throws std::logic_error if they ever disagree. Returns the direct report.
AxiomReport check_coalgebra(const Comultiplication& c);

// One of the three compatibility conditions (1..3) on basis pairs, alone.
AxiomReport check_bialgebra_condition(const MulTensor& star, const Comultiplication& c, int which);
// Algebra axioms, coalgebra identity, then bialgebra-1..3 on basis pairs.
AxiomReport check_adm_bialgebra(const MulTensor& star, const Comultiplication& c);

// Matched pair of (P, P*) with the coregular actions: the second route to a bialgebra.
AxiomReport check_bialgebra_matched_pair(const MulTensor& star, const Comultiplication& c);
// Standard Manin triple on P + P*: the third route.
AxiomReport check_bialgebra_manin(const MulTensor& star, const Comultiplication& c);

// delta anti-cocommutative, Delta cocommutative.
struct PoissonComultiplicationPair {
  Comultiplication delta, Delta;
};

// Throws InvalidInput when the symmetry requirements fail.
void validate_pair(const PoissonComultiplicationPair& pair);

AxiomReport check_poisson_bialgebra(const MulTensor& bracket, const MulTensor& circ,
                                    const PoissonComultiplicationPair& pair);

// delta = 1/2(alpha - tau alpha), Delta = 1/2(alpha + tau alpha).
PoissonComultiplicationPair split_comultiplication(const Comultiplication& c);
Comultiplication merge_comultiplication(const PoissonComultiplicationPair& pair);

}  // namespace admp
