#pragma once

#include <vector>

#include "qtoric/char_pair.hpp"

namespace qtoric {

/// The n-simplex with the standard characteristic function
/// e_1, ..., e_n, (1,...,1). Orbit data of complex projective n-space.
CharPair simplex_pair(int n);

/// The product pair over P1 x P2: facets of a first (as F x P2), then facets
/// of b (as P1 x G); lambda values are the block embeddings (lambda_a, 0) and
/// (0, lambda_b).
CharPair product_pair(const CharPair& a, const CharPair& b);

/// Truncates the polytope at a vertex: the vertex is removed, one facet is
/// appended, and each facet through the old vertex contributes one new
/// vertex. The new facet carries the normalized sum of the lambda values at
/// the cut vertex. Orbit data of the blow-up at a fixed point. Throws
/// CutNotNonsingular if the resulting pair fails the determinant check.
CharPair vertex_cut(const CharPair& cp, int vertex);

/// Rank m+1 pair over I x Delta^m: the two interval facets carry e_1 and
/// (1, k_1, ..., k_m), the simplex facets carry e_2, ..., e_{m+1} and
/// (0, 1, ..., 1). Non-singular for every k. Orbit data of the
/// projectivization of a sum of line bundles of degrees 0, k_1, ..., k_m
/// over the projective line.
CharPair bott_pair(const std::vector<Int>& k);

/// The blow-up example of rank n (n >= 4): the product of the projective
/// line with bott_pair(k), cut at the vertex whose lambda basis is
/// e_1, ..., e_n. Requires k of length n-2 with entries pairwise distinct
/// and not in {0, 1}.
CharPair example_m2(int n, const std::vector<Int>& k);

}  // namespace qtoric
