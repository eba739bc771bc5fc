#pragma once

#include <optional>
#include <vector>

#include "qtoric/lattice.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

struct VertexDet {
  int vertex;
  Int det;
};

struct NonsingularityReport {
  bool ok = false;
  std::vector<VertexDet> failures;  // every vertex whose facet vectors are not a Z^n basis
};

/// Checks the non-singularity condition: at every vertex, the lambda vectors
/// of its n facets have determinant +-1. Shape problems (wrong count) throw
/// BadLength; determinant failures are reported, not thrown.
NonsingularityReport check_nonsingular(const Polytope& p, const std::vector<CharVector>& lambda);

/// A characteristic pair: a simple polytope together with one primitive
/// vector per facet, satisfying the non-singularity condition. Lambda values
/// are circle subgroups, so they are stored and compared up to sign only.
class CharPair {
 public:
  /// Validates raw per-facet vectors (BadLength, ZeroVector, NotPrimitive)
  /// and the non-singularity condition (NotNonsingular, with every failing
  /// vertex listed in the message).
  static CharPair checked(Polytope p, const std::vector<std::vector<Int>>& lambda_rows);

  /// Same validation, starting from already-canonical vectors.
  static CharPair from_vectors(Polytope p, std::vector<CharVector> lambda);

  const Polytope& polytope() const { return polytope_; }
  const std::vector<CharVector>& lambda() const { return lambda_; }
  const CharVector& lambda_of(int facet) const { return lambda_[facet]; }
  int rank() const { return polytope_.dim(); }

  friend bool operator==(const CharPair& a, const CharPair& b) {
    return a.polytope_ == b.polytope_ && a.lambda_ == b.lambda_;
  }

 private:
  CharPair(Polytope p, std::vector<CharVector> lambda)
      : polytope_(std::move(p)), lambda_(std::move(lambda)) {}

  Polytope polytope_;
  std::vector<CharVector> lambda_;
};

/// The subtorus attached to a face: the saturated span of the lambda values
/// of the facets containing it. The whole polytope (codim 0) maps to the
/// zero sublattice. For a valid pair the rank equals the codimension.
Sublattice face_subtorus(const CharPair& cp, const Face& face);

/// A lattice-equivalence witness between two pairs: a combinatorial
/// isomorphism of the polytopes (facet and induced vertex bijection) and a
/// unimodular g with g * lambda1(F) = +-lambda2(f(F)) for every facet.
struct PairIso {
  std::vector<int> facet_map;
  std::vector<int> vertex_map;
  IntMatrix g;
};

/// Searches for a PairIso; returns absence rather than throwing when the
/// pairs are not equivalent (including mismatched rank or facet count).
std::optional<PairIso> gl_equivalent(const CharPair& a, const CharPair& b);

}  // namespace qtoric
