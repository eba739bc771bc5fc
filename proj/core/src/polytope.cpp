#include "qtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qtoric {

namespace {

std::string vertex_str(const std::vector<int>& facets) {
  std::string s = "{";
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(facets[i]);
  }
  return s + "}";
}

int shared_facets(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

}  // namespace

Polytope Polytope::checked(const PolytopeData& raw) {
  const int n = raw.dim;
  const int m = raw.facet_count;
  if (n < 1) throw Error(Errc::BadParameters, "dimension must be at least 1");
  if (n > 30) throw Error(Errc::BadParameters, "dimension too large for subset enumeration");
  if (m < n + 1)
    throw Error(Errc::TooFewFacets, std::to_string(m) + " facets, need at least " + std::to_string(n + 1));

  std::vector<std::vector<int>> verts = raw.vertices;
  for (auto& v : verts) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw Error(Errc::NotSimple, "vertex " + vertex_str(v) + " repeats a facet");
    if (static_cast<int>(v.size()) != n)
      throw Error(Errc::NotSimple, "vertex " + vertex_str(v) + " lies on " +
                                       std::to_string(v.size()) + " facets, expected " + std::to_string(n));
    for (int f : v)
      if (f < 0 || f >= m)
        throw Error(Errc::BadIndex, "facet index " + std::to_string(f) + " out of range [0," +
                                        std::to_string(m) + ")");
  }
  std::sort(verts.begin(), verts.end());
  auto dup = std::adjacent_find(verts.begin(), verts.end());
  if (dup != verts.end()) throw Error(Errc::DuplicateVertex, "vertex " + vertex_str(*dup) + " occurs twice");

  std::vector<char> used(m, 0);
  for (const auto& v : verts)
    for (int f : v) used[f] = 1;
  for (int f = 0; f < m; ++f)
    if (!used[f]) throw Error(Errc::UnusedFacet, "facet " + std::to_string(f) + " contains no vertex");

  const int nv = static_cast<int>(verts.size());
  if (n == 1) {
    if (nv != 2)
      throw Error(Errc::Disconnected, "a 1-dimensional polytope is an interval with two vertices");
  } else {
    // vertex-edge graph: two vertices are adjacent when they share n-1 facets
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < nv; ++w) {
        if (seen[w] || shared_facets(verts[v], verts[w]) != n - 1) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != nv)
      throw Error(Errc::Disconnected, std::to_string(nv - reached) + " vertices unreachable in the edge graph");
  }

  Polytope p;
  p.dim_ = n;
  p.facet_count_ = m;
  p.vertex_facets_ = std::move(verts);
  p.facet_vertices_.assign(m, {});
  for (int v = 0; v < nv; ++v)
    for (int f : p.vertex_facets_[v]) p.facet_vertices_[f].push_back(v);
  p.coincidence_.assign(static_cast<std::size_t>(m) * m, 0);
  for (int v = 0; v < nv; ++v) {
    const auto& fv = p.vertex_facets_[v];
    for (std::size_t i = 0; i < fv.size(); ++i)
      for (std::size_t j = 0; j < fv.size(); ++j)
        ++p.coincidence_[static_cast<std::size_t>(fv[i]) * m + fv[j]];
  }
  return p;
}

Polytope validate_polytope(const PolytopeData& raw) { return Polytope::checked(raw); }

int Polytope::vertex_index(const std::vector<int>& facet_set) const {
  auto it = std::lower_bound(vertex_facets_.begin(), vertex_facets_.end(), facet_set);
  if (it == vertex_facets_.end() || *it != facet_set) return -1;
  return static_cast<int>(it - vertex_facets_.begin());
}

bool FaceLattice::leq(const Face& a, const Face& b) {
  return std::includes(b.vertex_set.begin(), b.vertex_set.end(), a.vertex_set.begin(), a.vertex_set.end());
}

std::vector<long long> FaceLattice::counts_by_codim() const {
  std::vector<long long> counts(dim_ + 1, 0);
  for (const auto& f : faces_)
    if (f.codim >= 0 && f.codim <= dim_) ++counts[f.codim];
  return counts;
}

FaceLattice build_face_lattice(const Polytope& p) {
  const int n = p.dim();
  const int nv = p.vertex_count();
  std::map<std::vector<int>, std::vector<int>> by_vertex_set;  // vertex_set -> stabilizer

  auto stabilizer = [&](const std::vector<int>& vertex_set) {
    std::vector<int> stab = p.vertex_facets(vertex_set[0]);
    for (std::size_t i = 1; i < vertex_set.size() && !stab.empty(); ++i) {
      const auto& fv = p.vertex_facets(vertex_set[i]);
      std::vector<int> next;
      std::set_intersection(stab.begin(), stab.end(), fv.begin(), fv.end(), std::back_inserter(next));
      stab = std::move(next);
    }
    return stab;
  };

  for (int v = 0; v < nv; ++v) {
    const auto& fv = p.vertex_facets(v);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) subset.push_back(fv[b]);
      std::vector<int> vertex_set;
      if (subset.empty()) {
        vertex_set.resize(nv);
        for (int w = 0; w < nv; ++w) vertex_set[w] = w;
      } else {
        vertex_set = p.facet_vertices(subset[0]);
        for (std::size_t i = 1; i < subset.size() && !vertex_set.empty(); ++i) {
          const auto& fw = p.facet_vertices(subset[i]);
          std::vector<int> next;
          std::set_intersection(vertex_set.begin(), vertex_set.end(), fw.begin(), fw.end(),
                                std::back_inserter(next));
          vertex_set = std::move(next);
        }
      }
      if (vertex_set.empty()) continue;
      if (by_vertex_set.find(vertex_set) == by_vertex_set.end()) {
        auto stab = stabilizer(vertex_set);
        by_vertex_set.emplace(std::move(vertex_set), std::move(stab));
      }
    }
  }

  std::vector<Face> faces;
  faces.reserve(by_vertex_set.size());
  for (auto& [vs, stab] : by_vertex_set)
    faces.push_back(Face{stab, vs, static_cast<int>(stab.size())});
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.vertex_set < b.vertex_set;
  });
  return FaceLattice(n, std::move(faces));
}

std::vector<long long> f_vector(const Polytope& p) {
  auto counts = build_face_lattice(p).counts_by_codim();
  const int n = p.dim();
  std::vector<long long> f(n);
  for (int i = 0; i < n; ++i) f[i] = counts[n - i];
  return f;
}

Polytope facet_subpolytope(const Polytope& p, int facet) {
  if (p.dim() < 2) throw Error(Errc::DimensionTooSmall, "facets of a 1-polytope are points");
  if (facet < 0 || facet >= p.facet_count())
    throw Error(Errc::BadIndex, "facet index " + std::to_string(facet) + " out of range");

  std::vector<int> new_index(p.facet_count(), -1);
  int next = 0;
  for (int j = 0; j < p.facet_count(); ++j) {
    if (j == facet) continue;
    if (p.coincidence(facet, j) > 0) new_index[j] = next++;
  }

  PolytopeData data;
  data.dim = p.dim() - 1;
  data.facet_count = next;
  for (int v : p.facet_vertices(facet)) {
    std::vector<int> vf;
    for (int j : p.vertex_facets(v))
      if (j != facet) vf.push_back(new_index[j]);
    data.vertices.push_back(std::move(vf));
  }
  return Polytope::checked(data);
}

}  // namespace qtoric
