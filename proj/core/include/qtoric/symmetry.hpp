#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qtoric/char_pair.hpp"
#include "qtoric/lattice.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

/// An automorphism of the face poset, represented by a facet permutation
/// together with the vertex permutation it induces. For face lattices of
/// simple polytopes this representation is faithful: a lattice automorphism
/// is determined by its joint action on facets and vertices.
struct PosetAut {
  std::vector<int> facet_perm;
  std::vector<int> vertex_perm;

  static PosetAut identity(int facet_count, int vertex_count);
  bool is_identity() const;

  friend bool operator==(const PosetAut& a, const PosetAut& b) { return a.facet_perm == b.facet_perm; }
  friend bool operator!=(const PosetAut& a, const PosetAut& b) { return !(a == b); }
  friend bool operator<(const PosetAut& a, const PosetAut& b) { return a.facet_perm < b.facet_perm; }
};

/// outer ∘ inner (inner applied first).
PosetAut compose(const PosetAut& outer, const PosetAut& inner);
PosetAut inverse(const PosetAut& a);

/// All incidence-preserving facet permutations, sorted by facet_perm.
/// Backtracking over facet images with invariant-based pruning; agrees with
/// the all-permutations filter.
std::vector<PosetAut> poset_automorphisms(const Polytope& p);

/// An incidence-preserving facet bijection p -> q, if one exists.
std::optional<PosetAut> combinatorial_isomorphism(const Polytope& p, const Polytope& q);

/// Enumerates incidence-preserving facet bijections p -> q; visit returns
/// false to stop the search early.
void for_each_isomorphism(const Polytope& p, const Polytope& q,
                          const std::function<bool(const PosetAut&)>& visit);

/// An automorphism of a characteristic pair: a poset automorphism f and a
/// unimodular g with g * lambda(F) = +-lambda(f(F)) for every facet F.
struct PairAut {
  PosetAut f;
  IntMatrix g;

  friend bool operator==(const PairAut& a, const PairAut& b) { return a.f == b.f && a.g == b.g; }
  friend bool operator<(const PairAut& a, const PairAut& b) {
    if (a.f.facet_perm != b.f.facet_perm) return a.f.facet_perm < b.f.facet_perm;
    return a.g < b.g;
  }
};

PairAut compose(const PairAut& outer, const PairAut& inner);
PairAut inverse(const PairAut& a);

struct AutReport {
  std::vector<PairAut> pair_auts;   // the whole group, sorted
  std::vector<PosetAut> poset_auts; // aut of the polytope alone, sorted
  std::vector<PosetAut> image;      // distinct f occurring in pair_auts
  std::vector<PairAut> kernel;      // elements with f = identity
  bool condition_trivial = false;   // image == {identity}
};

/// Computes aut of the pair exhaustively: for each poset automorphism f, the
/// candidate g's are solved from the lambda basis at a reference vertex under
/// all 2^n sign choices, then checked against every facet. The report is
/// verified on every run: group closure, kernel elements are involutions,
/// kernel order divides 2^n, and |pair_auts| = |kernel| * |image|.
AutReport pair_automorphisms(const CharPair& cp);
AutReport pair_automorphisms(const CharPair& cp, int reference_vertex);

/// Same search with precomputed poset automorphisms (they depend only on the
/// polytope, so bulk searches over many lambda assignments reuse them).
AutReport pair_automorphisms_with(const CharPair& cp, const std::vector<PosetAut>& poset_auts,
                                  int reference_vertex);

struct ConditionResult {
  bool trivial;
  AutReport report;
};

/// True iff every pair automorphism has f = identity, i.e. the natural map
/// from pair automorphisms to poset automorphisms is trivial.
ConditionResult check_condition(const CharPair& cp);

}  // namespace qtoric
