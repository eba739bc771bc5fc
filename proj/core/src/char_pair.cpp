#include "qtoric/char_pair.hpp"

#include <string>

#include "qtoric/symmetry.hpp"

namespace qtoric {

NonsingularityReport check_nonsingular(const Polytope& p, const std::vector<CharVector>& lambda) {
  const int n = p.dim();
  if (static_cast<int>(lambda.size()) != p.facet_count())
    throw Error(Errc::BadLength, "expected one lambda vector per facet (" +
                                     std::to_string(p.facet_count()) + "), got " +
                                     std::to_string(lambda.size()));
  for (const auto& v : lambda)
    if (static_cast<int>(v.size()) != n)
      throw Error(Errc::BadLength, "lambda vector length " + std::to_string(v.size()) +
                                       " differs from rank " + std::to_string(n));

  NonsingularityReport report;
  for (int v = 0; v < p.vertex_count(); ++v) {
    std::vector<CharVector> cols;
    cols.reserve(n);
    for (int f : p.vertex_facets(v)) cols.push_back(lambda[f]);
    Int d = det(IntMatrix::from_columns(cols));
    if (d != 1 && d != -1) report.failures.push_back(VertexDet{v, d});
  }
  report.ok = report.failures.empty();
  return report;
}

CharPair CharPair::checked(Polytope p, const std::vector<std::vector<Int>>& lambda_rows) {
  std::vector<CharVector> lambda;
  lambda.reserve(lambda_rows.size());
  for (const auto& row : lambda_rows) lambda.push_back(CharVector::expect_primitive(row));
  return from_vectors(std::move(p), std::move(lambda));
}

CharPair CharPair::from_vectors(Polytope p, std::vector<CharVector> lambda) {
  NonsingularityReport report = check_nonsingular(p, lambda);
  if (!report.ok) {
    std::string msg = "determinant is not +-1 at";
    for (const auto& f : report.failures) {
      msg += " vertex " + std::to_string(f.vertex) + " (det " + std::to_string(f.det) + ")";
    }
    throw Error(Errc::NotNonsingular, msg);
  }
  return CharPair(std::move(p), std::move(lambda));
}

Sublattice face_subtorus(const CharPair& cp, const Face& face) {
  if (face.facet_set.empty()) return Sublattice::zero(cp.rank());
  std::vector<CharVector> vectors;
  vectors.reserve(face.facet_set.size());
  for (int f : face.facet_set) {
    if (f < 0 || f >= cp.polytope().facet_count())
      throw Error(Errc::BadIndex, "face references facet " + std::to_string(f));
    vectors.push_back(cp.lambda_of(f));
  }
  return saturated_span(vectors, cp.rank());
}

std::optional<PairIso> gl_equivalent(const CharPair& a, const CharPair& b) {
  if (a.rank() != b.rank() || a.polytope().facet_count() != b.polytope().facet_count())
    return std::nullopt;
  const Polytope& pa = a.polytope();
  const int n = a.rank();
  if (n > 20) throw Error(Errc::BadParameters, "rank too large for sign enumeration");

  const std::vector<int>& base_facets = pa.vertex_facets(0);
  std::vector<CharVector> basis;
  for (int f : base_facets) basis.push_back(a.lambda_of(f));
  IntMatrix binv = unimodular_inverse(IntMatrix::from_columns(basis));
  std::vector<char> is_base(pa.facet_count(), 0);
  for (int f : base_facets) is_base[f] = 1;

  std::optional<PairIso> found;
  for_each_isomorphism(pa, b.polytope(), [&](const PosetAut& f) {
    IntMatrix c(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int k = 0; k < n; ++k) {
        const CharVector& image = b.lambda_of(f.facet_perm[base_facets[k]]);
        bool neg = (mask >> k) & 1u;
        for (int i = 0; i < n; ++i) c.at(i, k) = neg ? checked_neg(image[i]) : image[i];
      }
      IntMatrix g = c * binv;
      bool ok = true;
      for (int j = 0; j < pa.facet_count() && ok; ++j) {
        if (is_base[j]) continue;
        ok = CharVector::normalized(g.apply(a.lambda_of(j).entries())) == b.lambda_of(f.facet_perm[j]);
      }
      if (!ok) continue;
      Int dg = det(g);
      if (dg != 1 && dg != -1) continue;
      found = PairIso{f.facet_perm, f.vertex_perm, g};
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace qtoric
