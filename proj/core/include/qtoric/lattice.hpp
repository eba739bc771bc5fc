#pragma once

#include <cstdint>
#include <vector>

#include "qtoric/error.hpp"

namespace qtoric {

// All lattice arithmetic is exact. Entries are machine integers; every
// multiplication/addition that could wrap goes through the checked helpers
// below and aborts with Errc::Overflow instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "addition overflows");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "subtraction overflows");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "multiplication overflows");
  return r;
}

inline Int checked_neg(Int a) {
  if (a == INT64_MIN) throw Error(Errc::Overflow, "negation overflows");
  return -a;
}

// gcd of |a| and |b|; gcd(0, 0) = 0.
Int gcd_int(Int a, Int b);

/// A primitive integer vector, canonicalized so the first nonzero entry is
/// positive. Two raw vectors describe the same circle subgroup of the torus
/// exactly when they normalize to the same CharVector.
class CharVector {
 public:
  /// Divides by the gcd of the entries and fixes the sign. Throws ZeroVector
  /// on the zero vector.
  static CharVector normalized(std::vector<Int> raw);

  /// Like normalized(), but a gcd > 1 is an error (NotPrimitive) instead of
  /// being divided out. Used when ingesting user-supplied lambda values.
  static CharVector expect_primitive(std::vector<Int> raw);

  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  friend bool operator==(const CharVector& a, const CharVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const CharVector& a, const CharVector& b) { return !(a == b); }
  friend bool operator<(const CharVector& a, const CharVector& b) { return a.entries_ < b.entries_; }

 private:
  explicit CharVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(const std::vector<CharVector>& cols);

  int size() const { return n_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  Int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  std::vector<std::vector<Int>> rows() const;

  /// Matrix-vector product (checked).
  std::vector<Int> apply(const std::vector<Int>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) { return a.a_ < b.a_; }

 private:
  int n_;
  std::vector<Int> a_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

/// Inverse of a matrix with det = +-1 (integral by the adjugate formula).
/// Throws NotUnimodularBasis otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct BasisSolve {
  IntMatrix g;
  Int det;
};

/// The unique integer matrix g with g * basis[k] = signs[k] * images[k] for
/// all k. Requires |det(basis)| = 1 (throws NotUnimodularBasis), which is
/// what makes g integral. signs entries must be +-1.
BasisSolve solve_against_basis(const std::vector<CharVector>& basis,
                               const std::vector<CharVector>& images,
                               const std::vector<int>& signs);

/// A saturated (direct-summand) sublattice of Z^ambient, stored as a Hermite
/// normal form basis so equal sublattices compare equal.
struct Sublattice {
  int ambient = 0;
  std::vector<std::vector<Int>> basis;

  static Sublattice zero(int ambient) { return Sublattice{ambient, {}}; }

  int rank() const { return static_cast<int>(basis.size()); }
  bool contains(const std::vector<Int>& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

/// Basis of the saturation of the integer span of the given vectors: the
/// smallest sublattice containing them whose quotient is torsion-free.
Sublattice saturated_span(const std::vector<CharVector>& vectors, int ambient);
Sublattice saturated_span(const std::vector<std::vector<Int>>& vectors, int ambient);

/// Rank of the integer span of the given rows.
int lattice_rank(std::vector<std::vector<Int>> rows);

}  // namespace qtoric
