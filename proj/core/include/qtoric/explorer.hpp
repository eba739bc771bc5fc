#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/char_pair.hpp"

namespace qtoric {

struct FacetClassification {
  int facet;
  CharVector lambda;
  std::string type;  // empty = unclassified
};

struct FacetTypeReport {
  std::vector<FacetClassification> facets;
  std::map<std::string, int> histogram;  // includes an "unclassified" bucket when needed
};

/// Matches each facet sub-polytope against the named reference polytopes (in
/// order, first match wins) and tabulates the type counts. The supplied
/// library should be pairwise non-isomorphic so each facet matches at most
/// one type.
FacetTypeReport classify_facets(const CharPair& cp,
                                const std::vector<std::pair<std::string, Polytope>>& refs);

/// The facet types of the blow-up example of rank n, generated by the
/// constructors: the (n-1)-simplex, I x Delta^{n-2}, I x I x Delta^{n-3},
/// and the two vertex-cut variants.
std::vector<std::pair<std::string, Polytope>> table1_references(int n);

enum class SearchMode { Exhaustive, Random };

struct SearchOptions {
  Int bound = 1;                    // lambda entries range over [-bound, bound]
  SearchMode mode = SearchMode::Exhaustive;
  long long samples = 0;            // random mode
  std::uint64_t seed = 0;           // random mode
  long long budget = 1000000;       // exhaustive mode: cap on (2b+1)^(n*m)
  int witness_cap = 10;             // witnesses kept per outcome
  std::string polytope_id;
};

struct SearchSummary {
  std::string polytope_id;
  Int bound = 1;
  SearchMode mode = SearchMode::Exhaustive;
  long long samples = 0;
  std::uint64_t seed = 0;
  long long tested = 0;
  long long nonsingular = 0;
  long long trivial = 0;
  int witness_cap = 10;
  std::vector<std::vector<CharVector>> witnesses_trivial;
  std::vector<std::vector<CharVector>> witnesses_nontrivial;
};

/// Sweeps characteristic-function candidates over the polytope: assignments
/// of primitive sign-canonical vectors with entries in [-bound, bound], one
/// per facet. Counts how many pass the non-singularity check and, of those,
/// how many satisfy the triviality condition. Exhaustive mode refuses
/// (BudgetExceeded) when (2b+1)^(n*m) exceeds the budget; random mode draws
/// a fixed number of samples and is deterministic for a fixed seed.
SearchSummary enumerate_characteristic_functions(const Polytope& p, const SearchOptions& opts);

}  // namespace qtoric
