// Named predicates and constructions evaluated on parsed algebra files.
//
// Structures are looked up by conventional names:
//   star                     adm-Poisson product
//   bracket, circ            Poisson pair
//   l, r (families)          representation of `star`
//   star1, star2, l1, r1, l2, r2   matched pair
//   B (map)                  bilinear form gram matrix
//   alpha (rank-3 tensor)    comultiplication; delta, Delta for the Poisson pair
//   r (rank-2 tensor)        element of P (x) P; zero when absent
//   theta, R (maps)          O-operator, Rota-Baxter operator
//   succ, prec               pre-adm-Poisson; dot, star for pre-Poisson
#pragma once

#include <string>
#include <vector>

#include "admp/fileformat.hpp"
#include "admp/report.hpp"

namespace admp {

struct CheckOptions {
  bool symmetric = false;      // invariant-form
  bool nondegenerate = false;  // invariant-form
};

const std::vector<std::string>& predicate_names();
const std::vector<std::string>& construction_names();

// Throws InvalidInput for unknown predicates or missing structures.
AxiomReport evaluate_predicate(const std::string& predicate, const AlgebraFile& f, const CheckOptions& opt = {});

// Dimension reported in the OK line of a predicate.
std::size_t predicate_dim(const std::string& predicate, const AlgebraFile& f);

struct BuildResult {
  AlgebraFile file;
  // Set when the construction carries a verdict (manin-double) and it fails.
  std::optional<AxiomReport> failed;
};
BuildResult build_construction(const std::string& construction, const AlgebraFile& f);

}  // namespace admp
