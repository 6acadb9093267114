// Exhaustive and seeded random search for small instances over GF(p).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "admp/fileformat.hpp"

namespace admp {

enum class SearchTarget { adm_poisson, poisson, adm_pybe_solution, pre_adm_poisson, o_operator };

std::string to_string(SearchTarget t);
std::optional<SearchTarget> search_target_from_string(const std::string& s);
// The `check` predicate every hit of this target satisfies.
std::string verifying_predicate(SearchTarget t);

struct SearchSpec {
  SearchTarget target = SearchTarget::adm_poisson;
  std::size_t dim = 1;  // ignored when `base` fixes the algebra
  std::uint64_t p = 5;
  // Fixed algebra (`star`, optionally families `l`, `r`) for adm_pybe_solution and o_operator.
  std::optional<AlgebraFile> base;
  std::size_t vdim = 1;  // o_operator: representation dimension when `base` has no families
  bool skew = false;     // adm_pybe_solution: only skew-symmetric r
  // pre_adm_poisson: enumerate x>y = R(x)*y, x<y = x*R(y) over Rota-Baxter operators
  // R of every adm-Poisson algebra of the given dimension instead of raw tensor pairs.
  bool via_rota_baxter = false;

  std::optional<std::uint64_t> samples;  // required when the space is too large
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;  // stop after this many hits
  bool nonzero_only = false;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t exhaustive_bound = 1953125;  // 5^9
  std::size_t max_exhaustive_dim = 2;
};

struct SearchStats {
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::uint64_t found = 0;
};

// Calls `emit` for each hit in deterministic order (ascending candidate index in
// exhaustive mode, ascending sample index otherwise). Every hit is printed,
// reparsed and re-checked with `verifying_predicate` before it is emitted.
// Throws InvalidInput for an invalid spec or an oversized space without samples.
SearchStats search(const SearchSpec& spec, const std::function<void(const AlgebraFile&)>& emit);
std::vector<AlgebraFile> search_all(const SearchSpec& spec);

}  // namespace admp
