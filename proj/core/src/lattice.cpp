#include "qtoric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <string>

namespace qtoric {

namespace {

std::uint64_t magnitude(Int a) {
  return a < 0 ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
}

}  // namespace

Int gcd_int(Int a, Int b) {
  std::uint64_t x = magnitude(a);
  std::uint64_t y = magnitude(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<std::uint64_t>(INT64_MAX))
    throw Error(Errc::Overflow, "gcd magnitude not representable");
  return static_cast<Int>(x);
}

CharVector CharVector::normalized(std::vector<Int> raw) {
  Int g = 0;
  for (Int x : raw) g = gcd_int(g, x);
  if (g == 0) throw Error(Errc::ZeroVector, "cannot normalize the zero vector");
  for (Int& x : raw) x /= g;
  for (Int x : raw) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : raw) y = checked_neg(y);
    break;
  }
  return CharVector(std::move(raw));
}

CharVector CharVector::expect_primitive(std::vector<Int> raw) {
  Int g = 0;
  for (Int x : raw) g = gcd_int(g, x);
  if (g == 0) throw Error(Errc::ZeroVector, "lambda vector is zero");
  if (g != 1) throw Error(Errc::NotPrimitive, "entries have gcd " + std::to_string(g));
  return normalized(std::move(raw));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(Errc::BadLength, "matrix rows must have equal length");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<CharVector>& cols) {
  int n = static_cast<int>(cols.size());
  IntMatrix m(n);
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(cols[k].size()) != n)
      throw Error(Errc::BadLength, "column length differs from column count");
    for (int i = 0; i < n; ++i) m.at(i, k) = cols[k][i];
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].resize(n_);
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw Error(Errc::BadLength, "vector length differs from matrix size");
  std::vector<Int> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    Int acc = 0;
    for (int j = 0; j < n_; ++j) acc = checked_add(acc, checked_mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(Errc::BadLength, "matrix sizes differ");
  IntMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      Int acc = 0;
      for (int k = 0; k < a.n_; ++k) acc = checked_add(acc, checked_mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

Int det(const IntMatrix& m) {
  int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a = m.rows();
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(a[k][k], a[i][j]), checked_mul(a[i][k], a[k][j]));
        assert(num % prev == 0);  // exact by Bareiss
        a[i][j] = num / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

namespace {

Int minor_det(const IntMatrix& m, int drop_row, int drop_col) {
  int n = m.size();
  IntMatrix sub(n - 1);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop_row) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      sub.at(r, c) = m.at(i, j);
      ++c;
    }
    ++r;
  }
  return det(sub);
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    throw Error(Errc::NotUnimodularBasis, "matrix determinant is " + std::to_string(d));
  int n = m.size();
  // inverse = adjugate / det = adjugate * det when det = +-1
  IntMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int cof = minor_det(m, j, i);
      if ((i + j) % 2 != 0) cof = checked_neg(cof);
      inv.at(i, j) = checked_mul(cof, d);
    }
  return inv;
}

BasisSolve solve_against_basis(const std::vector<CharVector>& basis,
                               const std::vector<CharVector>& images,
                               const std::vector<int>& signs) {
  std::size_t n = basis.size();
  if (n == 0 || images.size() != n || signs.size() != n)
    throw Error(Errc::BadLength, "basis, images and signs must have equal nonzero length");
  for (const auto& v : basis)
    if (v.size() != n) throw Error(Errc::BadLength, "basis vector length differs from count");
  for (const auto& v : images)
    if (v.size() != n) throw Error(Errc::BadLength, "image vector length differs from count");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(Errc::BadParameters, "signs must be +-1");

  IntMatrix b = IntMatrix::from_columns(basis);
  IntMatrix binv = unimodular_inverse(b);  // throws NotUnimodularBasis
  IntMatrix c(static_cast<int>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      c.at(static_cast<int>(i), static_cast<int>(k)) = checked_mul(signs[k], images[k][i]);
  IntMatrix g = c * binv;
  return BasisSolve{g, det(g)};
}

namespace {

// Column-style elimination over Z. Returns a basis of {x : rows * x = 0}.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows, int cols) {
  std::vector<std::vector<Int>> m = rows;
  std::vector<std::vector<Int>> t(cols);  // t[c] is the c-th column of the transform
  for (int c = 0; c < cols; ++c) {
    t[c].assign(cols, 0);
    t[c][c] = 1;
  }
  std::vector<bool> active(cols, true);

  auto col_axpy = [&](int dst, int src, Int q) {
    // column dst -= q * column src
    for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
    for (int i = 0; i < cols; ++i) t[dst][i] = checked_sub(t[dst][i], checked_mul(q, t[src][i]));
  };

  for (std::size_t r = 0; r < m.size(); ++r) {
    for (;;) {
      int best = -1;
      int count = 0;
      for (int c = 0; c < cols; ++c) {
        if (!active[c] || m[r][c] == 0) continue;
        ++count;
        if (best < 0 || magnitude(m[r][c]) < magnitude(m[r][best])) best = c;
      }
      if (count == 0) break;
      if (count == 1) {
        active[best] = false;  // pivot column for this row
        break;
      }
      for (int c = 0; c < cols; ++c) {
        if (!active[c] || c == best || m[r][c] == 0) continue;
        col_axpy(c, best, m[r][c] / m[r][best]);
      }
    }
  }

  std::vector<std::vector<Int>> kernel;
  for (int c = 0; c < cols; ++c)
    if (active[c]) kernel.push_back(t[c]);
  return kernel;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// In-place row Hermite normal form (unimodular row ops only). Drops zero rows.
void hermite_rows(std::vector<std::vector<Int>>& rows, int cols) {
  std::size_t top = 0;
  for (int col = 0; col < cols && top < rows.size(); ++col) {
    for (;;) {
      int best = -1;
      int count = 0;
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        ++count;
        if (best < 0 || magnitude(rows[r][col]) < magnitude(rows[best][col]))
          best = static_cast<int>(r);
      }
      if (count == 0) { best = -1; break; }
      if (count == 1) break;
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (static_cast<int>(r) == best || rows[r][col] == 0) continue;
        Int q = rows[r][col] / rows[best][col];
        for (int j = 0; j < cols; ++j)
          rows[r][j] = checked_sub(rows[r][j], checked_mul(q, rows[best][j]));
      }
    }
    int pivot = -1;
    for (std::size_t r = top; r < rows.size(); ++r)
      if (rows[r][col] != 0) { pivot = static_cast<int>(r); break; }
    if (pivot < 0) continue;
    std::swap(rows[top], rows[pivot]);
    if (rows[top][col] < 0)
      for (int j = 0; j < cols; ++j) rows[top][j] = checked_neg(rows[top][j]);
    for (std::size_t r = 0; r < top; ++r) {
      Int q = floor_div(rows[r][col], rows[top][col]);
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j)
        rows[r][j] = checked_sub(rows[r][j], checked_mul(q, rows[top][j]));
    }
    ++top;
  }
  rows.resize(top);
}

}  // namespace

int lattice_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  hermite_rows(rows, cols);
  return static_cast<int>(rows.size());
}

bool Sublattice::contains(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != ambient) return false;
  std::vector<std::vector<Int>> rows = basis;
  rows.push_back(v);
  // saturated, so rational membership equals integral membership
  return lattice_rank(std::move(rows)) == rank();
}

Sublattice saturated_span(const std::vector<CharVector>& vectors, int ambient) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(v.entries());
  return saturated_span(rows, ambient);
}

Sublattice saturated_span(const std::vector<std::vector<Int>>& vectors, int ambient) {
  if (vectors.empty()) throw Error(Errc::BadParameters, "saturated_span needs at least one vector");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw Error(Errc::BadLength, "vector length differs from ambient rank");
  const std::vector<std::vector<Int>>& rows = vectors;

  // Sat(L) is the double orthogonal complement: x lies in Sat(L) exactly when
  // it is orthogonal to every integer vector orthogonal to L.
  std::vector<std::vector<Int>> complement = integer_kernel(rows, ambient);
  std::vector<std::vector<Int>> basis;
  if (complement.empty()) {
    basis = IntMatrix::identity(ambient).rows();
  } else {
    basis = integer_kernel(complement, ambient);
  }
  hermite_rows(basis, ambient);
  if (static_cast<int>(basis.size()) + static_cast<int>(complement.size()) != ambient)
    throw Error(Errc::InternalCheckFailed, "saturation rank mismatch");
  return Sublattice{ambient, std::move(basis)};
}

}  // namespace qtoric
