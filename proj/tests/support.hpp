// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library code paths they are used to check: the
// automorphism oracle filters all m! permutations, the determinant oracle is
// cofactor expansion, the face-count oracle enumerates all facet subsets.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qtoric/char_pair.hpp"
#include "qtoric/lattice.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/symmetry.hpp"

namespace qtest {

using qtoric::CharPair;
using qtoric::CharVector;
using qtoric::Int;
using qtoric::IntMatrix;
using qtoric::Polytope;
using qtoric::PolytopeData;

inline Polytope make_polytope(int dim, std::vector<std::vector<int>> vertices) {
  PolytopeData data;
  data.dim = dim;
  data.facet_count = 0;
  for (const auto& v : vertices)
    for (int f : v) data.facet_count = std::max(data.facet_count, f + 1);
  data.vertices = std::move(vertices);
  return Polytope::checked(data);
}

inline Polytope square() { return make_polytope(2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

inline Polytope pentagon() { return make_polytope(2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

inline Polytope triangle() { return make_polytope(2, {{0, 1}, {0, 2}, {1, 2}}); }

inline Polytope tetrahedron() {
  return make_polytope(3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// facets 0/1 = x sides, 2/3 = y sides, 4/5 = z sides
inline Polytope cube() {
  std::vector<std::vector<int>> verts;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) verts.push_back({x, 2 + y, 4 + z});
  return make_polytope(3, std::move(verts));
}

inline CharPair cp2_pair() {
  return CharPair::checked(triangle(), {{1, 0}, {0, 1}, {1, 1}});
}

inline CharPair hirzebruch_pair() {
  return CharPair::checked(square(), {{1, 0}, {0, 1}, {1, 2}, {0, 1}});
}

inline CharPair cp1xcp1_pair() {
  return CharPair::checked(square(), {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
}

// ---------------------------------------------------------------------------
// oracles

// All facet permutations of p that map vertex sets to vertex sets. Only for
// small m (filters m! candidates).
inline std::vector<std::vector<int>> naive_poset_automorphisms(const Polytope& p) {
  const int m = p.facet_count();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& vertices = p.vertices();
  std::vector<std::vector<int>> result;
  do {
    std::vector<std::vector<int>> mapped;
    mapped.reserve(vertices.size());
    for (const auto& v : vertices) {
      std::vector<int> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = perm[v[i]];
      std::sort(w.begin(), w.end());
      mapped.push_back(std::move(w));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == vertices) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

inline Int cofactor_det(const std::vector<std::vector<Int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 1) return rows[0][0];
  Int acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (rows[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(rows[r][k]);
      minor.push_back(std::move(row));
    }
    Int term = rows[0][c] * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

// Face counts by codimension via all 2^m facet subsets, deduplicated by the
// common vertex set, codim = size of the full stabilizer.
inline std::vector<long long> brute_force_face_counts(const Polytope& p) {
  const int m = p.facet_count();
  const int nv = p.vertex_count();
  std::set<std::vector<int>> seen;
  std::vector<long long> counts(p.dim() + 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> member(nv, 1);
    for (int f = 0; f < m; ++f) {
      if (!(mask & (1u << f))) continue;
      std::vector<char> on(nv, 0);
      for (int v : p.facet_vertices(f)) on[v] = 1;
      for (int v = 0; v < nv; ++v) member[v] = member[v] && on[v];
    }
    std::vector<int> vs;
    for (int v = 0; v < nv; ++v)
      if (member[v]) vs.push_back(v);
    if (vs.empty() || !seen.insert(vs).second) continue;
    int stab = 0;
    for (int f = 0; f < m; ++f) {
      bool contains_all = true;
      for (int v : vs) {
        const auto& fv = p.vertex_facets(v);
        if (!std::binary_search(fv.begin(), fv.end(), f)) {
          contains_all = false;
          break;
        }
      }
      if (contains_all) ++stab;
    }
    ++counts[stab];
  }
  return counts;
}

// f-vector of a product from the factor f-vectors (face polynomials multiply;
// the top coefficient 1 stands for the whole polytope).
inline std::vector<long long> product_f_vector(const std::vector<long long>& fa, int na,
                                               const std::vector<long long>& fb, int nb) {
  std::vector<long long> a(fa.begin(), fa.end());
  a.push_back(1);
  std::vector<long long> b(fb.begin(), fb.end());
  b.push_back(1);
  std::vector<long long> c(na + nb + 1, 0);
  for (int i = 0; i <= na; ++i)
    for (int j = 0; j <= nb; ++j) c[i + j] += a[i] * b[j];
  c.pop_back();
  return c;
}

inline bool euler_ok(const std::vector<long long>& f, int n) {
  long long acc = 0;
  for (int i = 0; i < n; ++i) acc += (i % 2 == 0) ? f[i] : -f[i];
  return acc == 1 - (n % 2 == 0 ? 1 : -1);
}

// Quadratic closure oracle: every product and inverse is in the set.
inline bool quadratic_group_check(const std::vector<qtoric::PairAut>& auts) {
  std::set<std::pair<std::vector<int>, std::vector<std::vector<Int>>>> keys;
  for (const auto& a : auts) keys.insert({a.f.facet_perm, a.g.rows()});
  for (const auto& a : auts)
    for (const auto& b : auts) {
      auto c = qtoric::compose(a, b);
      if (!keys.count({c.f.facet_perm, c.g.rows()})) return false;
    }
  for (const auto& a : auts) {
    auto inv = qtoric::inverse(a);
    if (!keys.count({inv.f.facet_perm, inv.g.rows()})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// randomized-input helpers (always seeded by the caller)

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// relabel facets by perm (facet i becomes perm[i]); vertices follow
inline CharPair relabel_pair(const CharPair& cp, const std::vector<int>& perm) {
  const Polytope& p = cp.polytope();
  PolytopeData data;
  data.dim = p.dim();
  data.facet_count = p.facet_count();
  for (const auto& v : p.vertices()) {
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = perm[v[i]];
    data.vertices.push_back(std::move(w));
  }
  std::vector<std::vector<Int>> lambda(p.facet_count());
  for (int f = 0; f < p.facet_count(); ++f) lambda[perm[f]] = cp.lambda_of(f).entries();
  return CharPair::checked(Polytope::checked(data), lambda);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(rng, 0, i)]);
  return perm;
}

// change of torus coordinates by a unimodular matrix with small entries
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops) {
  IntMatrix g = IntMatrix::identity(n);
  for (int step = 0; step < ops; ++step) {
    int i = rand_int(rng, 0, n - 1);
    int j = rand_int(rng, 0, n - 1);
    int kind = rand_int(rng, 0, 2);
    if (kind == 0 && i != j) {
      // row_i += +-row_j
      Int s = rand_int(rng, 0, 1) ? 1 : -1;
      for (int c = 0; c < n; ++c) g.at(i, c) = g.at(i, c) + s * g.at(j, c);
    } else if (kind == 1 && i != j) {
      for (int c = 0; c < n; ++c) std::swap(g.at(i, c), g.at(j, c));
    } else {
      for (int c = 0; c < n; ++c) g.at(i, c) = -g.at(i, c);
    }
  }
  return g;
}

inline CharPair transform_pair(const CharPair& cp, const IntMatrix& g) {
  std::vector<std::vector<Int>> lambda;
  for (const auto& v : cp.lambda()) lambda.push_back(g.apply(v.entries()));
  return CharPair::checked(cp.polytope(), lambda);
}

inline Int max_abs_entry(const CharPair& cp) {
  Int best = 0;
  for (const auto& v : cp.lambda())
    for (Int x : v.entries()) best = std::max(best, x < 0 ? -x : x);
  return best;
}

}  // namespace qtest
