#pragma once

#include <vector>

#include "qtoric/error.hpp"

namespace qtoric {

/// Raw vertex-facet incidence data as supplied by a caller or a document.
struct PolytopeData {
  int dim = 0;
  int facet_count = 0;
  std::vector<std::vector<int>> vertices;  // each entry: facet indices of one vertex
};

/// A combinatorial simple polytope of dimension n with m facets, given by its
/// vertex-facet incidences. No coordinates are stored: everything downstream
/// depends only on the face poset.
///
/// Vertices are canonicalized (each facet list sorted, vertex list sorted
/// lexicographically), so vertex indices are stable across input orderings.
///
/// Accepted data must satisfy:
///   - every vertex lies on exactly n distinct facets (simplicity),
///   - vertex facet-sets are pairwise distinct,
///   - every facet contains a vertex,
///   - the vertex-edge graph (edges = vertex pairs sharing n-1 facets) is
///     connected; for n = 1 the polytope is the interval with two facets.
/// Realizability as a convex polytope is NOT checked; incidence data passing
/// these checks is accepted.
class Polytope {
 public:
  static Polytope checked(const PolytopeData& raw);

  int dim() const { return dim_; }
  int facet_count() const { return facet_count_; }
  int vertex_count() const { return static_cast<int>(vertex_facets_.size()); }

  const std::vector<std::vector<int>>& vertices() const { return vertex_facets_; }
  const std::vector<int>& vertex_facets(int v) const { return vertex_facets_[v]; }
  const std::vector<int>& facet_vertices(int f) const { return facet_vertices_[f]; }

  /// Index of the vertex with exactly this (sorted) facet set, or -1.
  int vertex_index(const std::vector<int>& facet_set) const;

  /// Number of vertices lying on both facets.
  int coincidence(int f1, int f2) const {
    return coincidence_[static_cast<std::size_t>(f1) * facet_count_ + f2];
  }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.facet_count_ == b.facet_count_ && a.vertex_facets_ == b.vertex_facets_;
  }

 private:
  Polytope() = default;

  int dim_ = 0;
  int facet_count_ = 0;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<std::vector<int>> facet_vertices_;
  std::vector<int> coincidence_;  // facet_count x facet_count
};

/// Validates raw incidence data; throws Error with code NotSimple,
/// DuplicateVertex, UnusedFacet, Disconnected, TooFewFacets or BadIndex.
Polytope validate_polytope(const PolytopeData& raw);

/// A face, canonically identified by its vertex set. facet_set is the full
/// set of facets containing the face; for a genuine face of a simple polytope
/// codim = |facet_set|.
struct Face {
  std::vector<int> facet_set;
  std::vector<int> vertex_set;
  int codim = 0;
};

class FaceLattice {
 public:
  FaceLattice(int dim, std::vector<Face> faces) : dim_(dim), faces_(std::move(faces)) {}

  int dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Containment order: a <= b iff vertex_set(a) is a subset of vertex_set(b).
  static bool leq(const Face& a, const Face& b);

  /// faces per codimension, index 0 = the whole polytope.
  std::vector<long long> counts_by_codim() const;

 private:
  int dim_;
  std::vector<Face> faces_;  // sorted by (codim, vertex_set)
};

/// Enumerates all faces by intersecting facet subsets at each vertex and
/// deduplicating by vertex set. Total on valid input; independent of the
/// input vertex order.
FaceLattice build_face_lattice(const Polytope& p);

/// (f_0, ..., f_{n-1}): number of faces of each dimension, vertices first.
std::vector<long long> f_vector(const Polytope& p);

/// The facet F_i as a simple (n-1)-polytope: its facets are the nonempty
/// intersections F_i ∩ F_j (renumbered by ascending j), its vertices the
/// vertices of p on F_i. Throws DimensionTooSmall for n = 1.
Polytope facet_subpolytope(const Polytope& p, int facet);

}  // namespace qtoric
