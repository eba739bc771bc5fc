#include "qtoric/constructors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qtoric {

namespace {

std::vector<Int> unit_vector(int n, int i) {
  std::vector<Int> e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

CharPair simplex_pair(int n) {
  if (n < 1) throw Error(Errc::BadParameters, "simplex dimension must be at least 1");
  PolytopeData data;
  data.dim = n;
  data.facet_count = n + 1;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> v;
    for (int f = 0; f <= n; ++f)
      if (f != skip) v.push_back(f);
    data.vertices.push_back(std::move(v));
  }
  std::vector<std::vector<Int>> lambda;
  for (int i = 0; i < n; ++i) lambda.push_back(unit_vector(n, i));
  lambda.push_back(std::vector<Int>(n, 1));
  return CharPair::checked(Polytope::checked(data), lambda);
}

CharPair product_pair(const CharPair& a, const CharPair& b) {
  const Polytope& pa = a.polytope();
  const Polytope& pb = b.polytope();
  const int na = pa.dim(), nb = pb.dim();
  const int ma = pa.facet_count();

  PolytopeData data;
  data.dim = na + nb;
  data.facet_count = ma + pb.facet_count();
  for (const auto& va : pa.vertices())
    for (const auto& vb : pb.vertices()) {
      std::vector<int> v = va;
      for (int f : vb) v.push_back(ma + f);
      data.vertices.push_back(std::move(v));
    }

  std::vector<std::vector<Int>> lambda;
  for (const auto& la : a.lambda()) {
    std::vector<Int> row = la.entries();
    row.resize(na + nb, 0);
    lambda.push_back(std::move(row));
  }
  for (const auto& lb : b.lambda()) {
    std::vector<Int> row(na, 0);
    row.insert(row.end(), lb.entries().begin(), lb.entries().end());
    lambda.push_back(std::move(row));
  }
  return CharPair::checked(Polytope::checked(data), lambda);
}

CharPair vertex_cut(const CharPair& cp, int vertex) {
  const Polytope& p = cp.polytope();
  if (p.dim() < 2) throw Error(Errc::DimensionTooSmall, "cannot cut a vertex of a 1-polytope");
  if (vertex < 0 || vertex >= p.vertex_count())
    throw Error(Errc::BadIndex, "vertex index " + std::to_string(vertex) + " out of range");

  const std::vector<int>& at_vertex = p.vertex_facets(vertex);
  const int new_facet = p.facet_count();

  PolytopeData data;
  data.dim = p.dim();
  data.facet_count = new_facet + 1;
  for (int v = 0; v < p.vertex_count(); ++v)
    if (v != vertex) data.vertices.push_back(p.vertex_facets(v));
  for (int skip : at_vertex) {
    std::vector<int> v;
    for (int f : at_vertex)
      if (f != skip) v.push_back(f);
    v.push_back(new_facet);
    data.vertices.push_back(std::move(v));
  }

  std::vector<Int> sum(p.dim(), 0);
  for (int f : at_vertex)
    for (int i = 0; i < p.dim(); ++i) sum[i] = checked_add(sum[i], cp.lambda_of(f)[i]);

  std::vector<CharVector> lambda = cp.lambda();
  lambda.push_back(CharVector::normalized(std::move(sum)));

  Polytope cut = Polytope::checked(data);
  NonsingularityReport report = check_nonsingular(cut, lambda);
  if (!report.ok) {
    std::string msg = "cut facet lambda fails the determinant check at";
    for (const auto& f : report.failures)
      msg += " vertex " + std::to_string(f.vertex) + " (det " + std::to_string(f.det) + ")";
    throw Error(Errc::CutNotNonsingular, msg);
  }
  return CharPair::from_vectors(std::move(cut), std::move(lambda));
}

CharPair bott_pair(const std::vector<Int>& k) {
  const int m = static_cast<int>(k.size());
  if (m < 1) throw Error(Errc::BadParameters, "need at least one twist parameter");
  const int n = m + 1;

  PolytopeData data;
  data.dim = n;
  data.facet_count = m + 3;  // 2 interval facets + m+1 simplex facets
  for (int a = 0; a < 2; ++a)
    for (int skip = 0; skip <= m; ++skip) {
      std::vector<int> v{a};
      for (int i = 0; i <= m; ++i)
        if (i != skip) v.push_back(2 + i);
      data.vertices.push_back(std::move(v));
    }

  std::vector<std::vector<Int>> lambda;
  lambda.push_back(unit_vector(n, 0));
  std::vector<Int> twisted{1};
  twisted.insert(twisted.end(), k.begin(), k.end());
  lambda.push_back(std::move(twisted));
  for (int i = 0; i < m; ++i) lambda.push_back(unit_vector(n, i + 1));
  std::vector<Int> ones(n, 1);
  ones[0] = 0;
  lambda.push_back(std::move(ones));
  return CharPair::checked(Polytope::checked(data), lambda);
}

CharPair example_m2(int n, const std::vector<Int>& k) {
  if (n <= 3) throw Error(Errc::BadParameters, "rank must be greater than 3");
  if (static_cast<int>(k.size()) != n - 2)
    throw Error(Errc::BadParameters, "expected " + std::to_string(n - 2) + " twist parameters, got " +
                                         std::to_string(k.size()));
  std::set<Int> distinct(k.begin(), k.end());
  if (static_cast<int>(distinct.size()) != n - 2)
    throw Error(Errc::BadParameters, "twist parameters must be pairwise distinct");
  if (distinct.count(0) || distinct.count(1))
    throw Error(Errc::BadParameters, "twist parameters must avoid 0 and 1");

  CharPair base = product_pair(simplex_pair(1), bott_pair(k));

  // cut at the vertex whose facet lambdas are the standard basis e_1..e_n;
  // two vertices qualify (the two interval facets both carry e_1), take the
  // lexicographically first
  std::vector<CharVector> standard;
  for (int i = 0; i < n; ++i) standard.push_back(CharVector::normalized(unit_vector(n, i)));
  std::sort(standard.begin(), standard.end());
  int cut_vertex = -1;
  for (int v = 0; v < base.polytope().vertex_count(); ++v) {
    std::vector<CharVector> at;
    for (int f : base.polytope().vertex_facets(v)) at.push_back(base.lambda_of(f));
    std::sort(at.begin(), at.end());
    if (at == standard) {
      cut_vertex = v;
      break;
    }
  }
  if (cut_vertex < 0) throw Error(Errc::InternalCheckFailed, "standard-basis vertex not found");
  return vertex_cut(base, cut_vertex);
}

}  // namespace qtoric
