#include "qtoric/symmetry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qtoric {

PosetAut PosetAut::identity(int facet_count, int vertex_count) {
  PosetAut a;
  a.facet_perm.resize(facet_count);
  a.vertex_perm.resize(vertex_count);
  for (int i = 0; i < facet_count; ++i) a.facet_perm[i] = i;
  for (int i = 0; i < vertex_count; ++i) a.vertex_perm[i] = i;
  return a;
}

bool PosetAut::is_identity() const {
  for (std::size_t i = 0; i < facet_perm.size(); ++i)
    if (facet_perm[i] != static_cast<int>(i)) return false;
  return true;
}

PosetAut compose(const PosetAut& outer, const PosetAut& inner) {
  PosetAut r;
  r.facet_perm.resize(inner.facet_perm.size());
  r.vertex_perm.resize(inner.vertex_perm.size());
  for (std::size_t i = 0; i < inner.facet_perm.size(); ++i)
    r.facet_perm[i] = outer.facet_perm[inner.facet_perm[i]];
  for (std::size_t i = 0; i < inner.vertex_perm.size(); ++i)
    r.vertex_perm[i] = outer.vertex_perm[inner.vertex_perm[i]];
  return r;
}

PosetAut inverse(const PosetAut& a) {
  PosetAut r;
  r.facet_perm.resize(a.facet_perm.size());
  r.vertex_perm.resize(a.vertex_perm.size());
  for (std::size_t i = 0; i < a.facet_perm.size(); ++i) r.facet_perm[a.facet_perm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < a.vertex_perm.size(); ++i) r.vertex_perm[a.vertex_perm[i]] = static_cast<int>(i);
  return r;
}

namespace {

// Per-facet isomorphism invariant: vertex count, then the sorted multiset of
// (shared vertex count, neighbor vertex count) over co-incident facets.
std::vector<long long> facet_invariant(const Polytope& p, int f) {
  std::vector<long long> inv;
  inv.push_back(p.facet_vertices(f).size());
  std::vector<std::pair<int, int>> neighbors;
  for (int j = 0; j < p.facet_count(); ++j) {
    if (j == f) continue;
    int c = p.coincidence(f, j);
    if (c > 0) neighbors.emplace_back(c, static_cast<int>(p.facet_vertices(j).size()));
  }
  std::sort(neighbors.begin(), neighbors.end());
  for (auto [c, d] : neighbors) {
    inv.push_back(c);
    inv.push_back(d);
  }
  return inv;
}

struct IsoSearch {
  const Polytope& p;
  const Polytope& q;
  const std::function<bool(const PosetAut&)>& visit;
  std::vector<int> order;                  // source facets, most constrained first
  std::vector<std::vector<int>> candidates;  // per source facet, admissible images
  std::vector<int> assigned;               // partial facet map, -1 = unassigned
  std::vector<char> used;
  bool stopped = false;

  bool complete() {
    PosetAut a;
    a.facet_perm = assigned;
    a.vertex_perm.resize(p.vertex_count());
    std::vector<int> image(p.dim());
    for (int v = 0; v < p.vertex_count(); ++v) {
      const auto& fv = p.vertex_facets(v);
      for (int i = 0; i < p.dim(); ++i) image[i] = assigned[fv[i]];
      std::sort(image.begin(), image.end());
      int w = q.vertex_index(image);
      if (w < 0) return true;  // not an isomorphism, keep searching
      a.vertex_perm[v] = w;
    }
    return visit(a);
  }

  bool run(std::size_t pos) {
    if (stopped) return false;
    if (pos == order.size()) {
      if (!complete()) {
        stopped = true;
        return false;
      }
      return true;
    }
    int i = order[pos];
    for (int c : candidates[i]) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        int j = order[k];
        ok = p.coincidence(i, j) == q.coincidence(c, assigned[j]);
      }
      if (!ok) continue;
      assigned[i] = c;
      used[c] = 1;
      run(pos + 1);
      used[c] = 0;
      assigned[i] = -1;
      if (stopped) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_isomorphism(const Polytope& p, const Polytope& q,
                          const std::function<bool(const PosetAut&)>& visit) {
  if (p.dim() != q.dim() || p.facet_count() != q.facet_count() || p.vertex_count() != q.vertex_count())
    return;
  const int m = p.facet_count();
  std::vector<std::vector<long long>> inv_p(m), inv_q(m);
  for (int f = 0; f < m; ++f) {
    inv_p[f] = facet_invariant(p, f);
    inv_q[f] = facet_invariant(q, f);
  }
  {
    auto sp = inv_p;
    auto sq = inv_q;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return;
  }

  IsoSearch search{p, q, visit, {}, {}, {}, {}, false};
  search.candidates.resize(m);
  for (int f = 0; f < m; ++f)
    for (int c = 0; c < m; ++c)
      if (inv_p[f] == inv_q[c]) search.candidates[f].push_back(c);
  search.order.resize(m);
  for (int f = 0; f < m; ++f) search.order[f] = f;
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    if (search.candidates[a].size() != search.candidates[b].size())
      return search.candidates[a].size() < search.candidates[b].size();
    if (inv_p[a] != inv_p[b]) return inv_p[a] < inv_p[b];
    return a < b;
  });
  search.assigned.assign(m, -1);
  search.used.assign(m, 0);
  search.run(0);
}

std::vector<PosetAut> poset_automorphisms(const Polytope& p) {
  std::vector<PosetAut> auts;
  for_each_isomorphism(p, p, [&](const PosetAut& a) {
    auts.push_back(a);
    return true;
  });
  std::sort(auts.begin(), auts.end());
  // identity is the lexicographic minimum, so it must be the front
  if (auts.empty() || !auts.front().is_identity())
    throw Error(Errc::InternalCheckFailed, "automorphism search lost the identity");
  return auts;
}

std::optional<PosetAut> combinatorial_isomorphism(const Polytope& p, const Polytope& q) {
  std::optional<PosetAut> found;
  for_each_isomorphism(p, q, [&](const PosetAut& a) {
    found = a;
    return false;
  });
  return found;
}

PairAut compose(const PairAut& outer, const PairAut& inner) {
  return PairAut{compose(outer.f, inner.f), outer.g * inner.g};
}

PairAut inverse(const PairAut& a) { return PairAut{inverse(a.f), unimodular_inverse(a.g)}; }

namespace {

CharVector sign_normalized(std::vector<Int> v) { return CharVector::normalized(std::move(v)); }

// Full group verification via coset structure. pair_auts is the claimed
// group, grouped as {(f, g) : g in G_f}. Closure of the whole set follows
// from: kernel K = G_id closed, every G_f a coset r_f * K, representatives
// multiplying into the right cosets, K normalized by representatives, and
// all inverses present. The representative product table is quadratic in
// |image|, so it is sampled above the cap; everything else always runs.
void verify_group(const AutReport& report, int n) {
  const auto& G = report.pair_auts;
  if (G.empty()) throw Error(Errc::InternalCheckFailed, "empty automorphism group");

  std::map<std::vector<int>, std::vector<IntMatrix>> cosets;
  for (const auto& a : G) cosets[a.f.facet_perm].push_back(a.g);
  for (auto& [f, gs] : cosets) std::sort(gs.begin(), gs.end());

  std::vector<IntMatrix> kernel;
  for (const auto& a : report.kernel) kernel.push_back(a.g);
  std::sort(kernel.begin(), kernel.end());
  auto in_kernel = [&](const IntMatrix& g) {
    return std::binary_search(kernel.begin(), kernel.end(), g);
  };

  // kernel elements are involutions and the kernel order divides 2^n
  IntMatrix id = IntMatrix::identity(n);
  if (kernel.empty() || !std::binary_search(kernel.begin(), kernel.end(), id))
    throw Error(Errc::InternalCheckFailed, "kernel does not contain the identity");
  for (const auto& k : kernel)
    if (!(k * k == id)) throw Error(Errc::InternalCheckFailed, "kernel element is not an involution");
  std::size_t ksize = kernel.size();
  int exponent = 0;
  while ((ksize & 1u) == 0) {
    ksize >>= 1;
    ++exponent;
  }
  if (ksize != 1 || exponent > n)
    throw Error(Errc::InternalCheckFailed, "kernel order does not divide 2^n");

  for (const auto& k1 : kernel)
    for (const auto& k2 : kernel)
      if (!in_kernel(k1 * k2)) throw Error(Errc::InternalCheckFailed, "kernel not closed");

  if (G.size() != kernel.size() * cosets.size())
    throw Error(Errc::InternalCheckFailed, "|pair_auts| != |kernel| * |image|");

  std::map<std::vector<int>, IntMatrix> rep;
  for (const auto& [f, gs] : cosets) {
    // each G_f must be exactly rep * kernel
    std::vector<IntMatrix> expect;
    expect.reserve(kernel.size());
    for (const auto& k : kernel) expect.push_back(gs.front() * k);
    std::sort(expect.begin(), expect.end());
    if (expect != gs) throw Error(Errc::InternalCheckFailed, "coset of kernel mismatch");
    rep.emplace(f, gs.front());
  }

  std::vector<const std::vector<int>*> fs;
  for (const auto& [f, g] : rep) fs.push_back(&f);
  auto compose_perm = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
  };

  for (const auto* f : fs) {
    const IntMatrix& r = rep.at(*f);
    IntMatrix rinv = unimodular_inverse(r);
    // inverses present
    std::vector<int> finv(f->size());
    for (std::size_t i = 0; i < f->size(); ++i) finv[(*f)[i]] = static_cast<int>(i);
    auto it = cosets.find(finv);
    if (it == cosets.end() || !std::binary_search(it->second.begin(), it->second.end(), rinv))
      throw Error(Errc::InternalCheckFailed, "inverse missing from group");
    // kernel normalized by representatives
    for (const auto& k : kernel)
      if (!in_kernel(rinv * k * r))
        throw Error(Errc::InternalCheckFailed, "kernel not normalized by representative");
  }

  constexpr std::size_t kFullPairCap = 10000;
  std::size_t stride = 1;
  if (G.size() > kFullPairCap && fs.size() > 0) {
    stride = (fs.size() * fs.size()) / kFullPairCap + 1;
  }
  std::size_t counter = 0;
  for (const auto* f1 : fs)
    for (const auto* f2 : fs) {
      if (counter++ % stride != 0) continue;
      auto f12 = compose_perm(*f1, *f2);
      auto it = cosets.find(f12);
      if (it == cosets.end())
        throw Error(Errc::InternalCheckFailed, "image not closed under composition");
      IntMatrix g12 = rep.at(*f1) * rep.at(*f2);
      if (!std::binary_search(it->second.begin(), it->second.end(), g12)) {
        bool found = false;
        for (const auto& k : kernel)
          if (std::binary_search(it->second.begin(), it->second.end(), g12 * k)) {
            found = true;
            break;
          }
        if (!found) throw Error(Errc::InternalCheckFailed, "representatives not closed");
      }
    }
}

}  // namespace

AutReport pair_automorphisms_with(const CharPair& cp, const std::vector<PosetAut>& poset_auts,
                                  int reference_vertex) {
  const Polytope& p = cp.polytope();
  const int n = p.dim();
  if (n > 20) throw Error(Errc::BadParameters, "rank too large for sign enumeration");
  if (reference_vertex < 0 || reference_vertex >= p.vertex_count())
    throw Error(Errc::BadIndex, "reference vertex out of range");

  const std::vector<int>& base_facets = p.vertex_facets(reference_vertex);
  std::vector<CharVector> basis;
  basis.reserve(n);
  for (int f : base_facets) basis.push_back(cp.lambda_of(f));
  IntMatrix b = IntMatrix::from_columns(basis);
  IntMatrix binv = unimodular_inverse(b);  // valid pairs have unimodular vertex bases

  std::vector<char> is_base(p.facet_count(), 0);
  for (int f : base_facets) is_base[f] = 1;

  AutReport report;
  report.poset_auts = poset_auts;

  IntMatrix c(n);
  for (const PosetAut& f : poset_auts) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int k = 0; k < n; ++k) {
        const CharVector& image = cp.lambda_of(f.facet_perm[base_facets[k]]);
        bool neg = (mask >> k) & 1u;
        for (int i = 0; i < n; ++i) c.at(i, k) = neg ? checked_neg(image[i]) : image[i];
      }
      IntMatrix g = c * binv;
      bool ok = true;
      for (int j = 0; j < p.facet_count() && ok; ++j) {
        if (is_base[j]) continue;  // holds by construction
        ok = sign_normalized(g.apply(cp.lambda_of(j).entries())) == cp.lambda_of(f.facet_perm[j]);
      }
      if (!ok) continue;
      Int dg = det(g);
      if (dg != 1 && dg != -1) continue;  // checked, not assumed
      report.pair_auts.push_back(PairAut{f, g});
    }
  }

  std::sort(report.pair_auts.begin(), report.pair_auts.end());
  for (const auto& a : report.pair_auts) {
    if (report.image.empty() || !(report.image.back() == a.f)) report.image.push_back(a.f);
    if (a.f.is_identity()) report.kernel.push_back(a);
  }
  report.condition_trivial = report.image.size() == 1;
  verify_group(report, n);
  return report;
}

AutReport pair_automorphisms(const CharPair& cp, int reference_vertex) {
  return pair_automorphisms_with(cp, poset_automorphisms(cp.polytope()), reference_vertex);
}

AutReport pair_automorphisms(const CharPair& cp) { return pair_automorphisms(cp, 0); }

ConditionResult check_condition(const CharPair& cp) {
  AutReport report = pair_automorphisms(cp);
  bool trivial = report.condition_trivial;
  return ConditionResult{trivial, std::move(report)};
}

}  // namespace qtoric
