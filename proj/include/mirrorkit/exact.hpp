// Exact scalar types and dense exact linear algebra.
//
// Integer and Rational are GMP arbitrary-precision types plugged into Eigen.
// The algorithms below are written against Eigen dense expressions and never
// divide in a ring (Bareiss for determinants) or round in a field (RREF over Q).
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace mirrorkit {

using Integer = mpz_class;
using Rational = mpq_class;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

using Index = Eigen::Index;

/// Thrown when an internal exactness invariant fails (e.g. a solve that must
/// be integral is not).
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const Integer& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& value);
bool is_integral(const RatVector& v);
/// Throws ExactnessError if any entry has a nontrivial denominator.
IntVector to_integer(const RatVector& v);
RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

/// Content (gcd of entries, nonnegative). Zero vector has content 0.
Integer content(const IntVector& v);
/// v / content(v); the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Smallest positive integral multiple of v that is primitive; direction preserved.
IntVector primitive_multiple(const RatVector& v);

/// Lexicographic strict ordering, shorter vectors first.
template <class Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

template <class Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Reduced row echelon form over a field, in place. Returns pivot columns.
template <class Scalar>
std::vector<Index> reduce_row_echelon(Matrix<Scalar>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar lead = a(row, col);
    for (Index c = col; c < a.cols(); ++c) a(row, c) /= lead;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Nonzero rows of the reduced row echelon form.
RatMatrix row_echelon_basis(const RatMatrix& rows);

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix a = m.template cast<Rational>();
  return static_cast<Index>(reduce_row_echelon(a).size());
}

/// Columns form a basis of {x : a x = 0}.
RatMatrix nullspace(const RatMatrix& a);

/// Solution set of a x = b as particular solution plus nullspace basis.
struct AffineSolution {
  RatVector particular;
  RatMatrix directions;  // columns
};
std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b);

/// Unique solution of a square nonsingular system; nullopt if singular.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

/// left * a * right == diagonal with left, right unimodular, the diagonal
/// entries nonnegative and each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  /// Number of nonzero invariant factors.
  Index rank() const;
  std::vector<Integer> invariant_factors() const;
};
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace mirrorkit
