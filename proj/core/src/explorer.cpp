#include "qtoric/explorer.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qtoric/constructors.hpp"
#include "qtoric/symmetry.hpp"

namespace qtoric {

FacetTypeReport classify_facets(const CharPair& cp,
                                const std::vector<std::pair<std::string, Polytope>>& refs) {
  FacetTypeReport report;
  const Polytope& p = cp.polytope();
  for (int f = 0; f < p.facet_count(); ++f) {
    Polytope sub = facet_subpolytope(p, f);
    std::string type;
    for (const auto& [name, ref] : refs) {
      if (combinatorial_isomorphism(sub, ref)) {
        type = name;
        break;
      }
    }
    ++report.histogram[type.empty() ? "unclassified" : type];
    report.facets.push_back(FacetClassification{f, cp.lambda_of(f), type});
  }
  return report;
}

std::vector<std::pair<std::string, Polytope>> table1_references(int n) {
  if (n <= 3) throw Error(Errc::BadParameters, "reference library needs rank greater than 3");
  CharPair interval = simplex_pair(1);
  CharPair prism = product_pair(interval, simplex_pair(n - 2));
  CharPair box_prism = product_pair(interval, product_pair(interval, simplex_pair(n - 3)));

  auto name = [](const std::string& stem, int d) { return stem + std::to_string(d); };
  std::vector<std::pair<std::string, Polytope>> refs;
  refs.emplace_back(name("Delta^", n - 1), simplex_pair(n - 1).polytope());
  refs.emplace_back(name("IxIxDelta^", n - 3), box_prism.polytope());
  refs.emplace_back(name("IxDelta^", n - 2), prism.polytope());
  refs.emplace_back(name("IxDelta^", n - 2) + "-cut", vertex_cut(prism, 0).polytope());
  refs.emplace_back(name("IxIxDelta^", n - 3) + "-cut", vertex_cut(box_prism, 0).polytope());
  return refs;
}

namespace {

// saturating power, capped so comparisons against a budget stay safe
long long sat_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > (1ll << 62) / base) return 1ll << 62;
    r *= base;
  }
  return r;
}

bool is_primitive_canonical(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = gcd_int(g, x);
  if (g != 1) return false;
  for (Int x : v) {
    if (x == 0) continue;
    return x > 0;
  }
  return false;
}

std::vector<CharVector> candidate_vectors(int n, Int bound) {
  std::vector<CharVector> out;
  std::vector<Int> v(n, -bound);
  for (;;) {
    if (is_primitive_canonical(v)) out.push_back(CharVector::normalized(v));
    int i = n - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// uniform draw without modulo bias, deterministic across platforms
Int bounded_uniform(std::mt19937_64& rng, Int lo, Int hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<Int>(r % span);
}

CharVector random_candidate(std::mt19937_64& rng, int n, Int bound) {
  std::vector<Int> v(n);
  for (;;) {
    for (Int& x : v) x = bounded_uniform(rng, -bound, bound);
    Int g = 0;
    for (Int x : v) g = gcd_int(g, x);
    if (g != 1) continue;
    return CharVector::normalized(v);
  }
}

struct Tally {
  SearchSummary& summary;
  const Polytope& p;
  const std::vector<PosetAut>& poset_auts;

  void consider(const std::vector<CharVector>& lambda) {
    ++summary.tested;
    if (!check_nonsingular(p, lambda).ok) return;
    ++summary.nonsingular;
    CharPair cp = CharPair::from_vectors(p, lambda);
    bool trivial = pair_automorphisms_with(cp, poset_auts, 0).condition_trivial;
    auto& bucket = trivial ? summary.witnesses_trivial : summary.witnesses_nontrivial;
    if (trivial) ++summary.trivial;
    if (static_cast<int>(bucket.size()) < summary.witness_cap) bucket.push_back(lambda);
  }
};

}  // namespace

SearchSummary enumerate_characteristic_functions(const Polytope& p, const SearchOptions& opts) {
  if (opts.bound < 1) throw Error(Errc::BadParameters, "bound must be at least 1");
  const int n = p.dim();
  const int m = p.facet_count();

  SearchSummary summary;
  summary.polytope_id = opts.polytope_id;
  summary.bound = opts.bound;
  summary.mode = opts.mode;
  summary.witness_cap = opts.witness_cap;

  std::vector<PosetAut> poset_auts = poset_automorphisms(p);
  Tally tally{summary, p, poset_auts};

  if (opts.mode == SearchMode::Exhaustive) {
    long long ceiling = sat_pow(2 * opts.bound + 1, static_cast<long long>(n) * m);
    if (ceiling > opts.budget)
      throw Error(Errc::BudgetExceeded, "(2b+1)^(n*m) = " + std::to_string(ceiling) +
                                            " exceeds budget " + std::to_string(opts.budget));
    std::vector<CharVector> candidates = candidate_vectors(n, opts.bound);
    if (candidates.empty()) throw Error(Errc::InternalCheckFailed, "no candidate vectors");
    std::vector<std::size_t> idx(m, 0);
    std::vector<CharVector> lambda(m, candidates[0]);
    for (;;) {
      for (int f = 0; f < m; ++f) lambda[f] = candidates[idx[f]];
      tally.consider(lambda);
      int f = m - 1;
      while (f >= 0 && idx[f] + 1 == candidates.size()) idx[f--] = 0;
      if (f < 0) break;
      ++idx[f];
    }
  } else {
    if (opts.samples < 1) throw Error(Errc::BadParameters, "random mode needs a positive sample count");
    summary.samples = opts.samples;
    summary.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::vector<CharVector> lambda;
    for (long long s = 0; s < opts.samples; ++s) {
      lambda.clear();
      for (int f = 0; f < m; ++f) lambda.push_back(random_candidate(rng, n, opts.bound));
      tally.consider(lambda);
    }
  }

  std::sort(summary.witnesses_trivial.begin(), summary.witnesses_trivial.end());
  std::sort(summary.witnesses_nontrivial.begin(), summary.witnesses_nontrivial.end());
  if (!(summary.trivial <= summary.nonsingular && summary.nonsingular <= summary.tested))
    throw Error(Errc::InternalCheckFailed, "inconsistent search counts");
  return summary;
}

}  // namespace qtoric
