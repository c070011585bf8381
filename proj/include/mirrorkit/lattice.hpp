// Integer points of the dual lattices M and N.
#pragma once

#include "mirrorkit/exact.hpp"

#include <compare>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mirrorkit {

/// Character lattice M (where the moment polytope and weights live).
struct MTag {};
/// Cocharacter lattice N (where fans and ray generators live).
struct NTag {};

template <class Tag>
struct DualTag;
template <>
struct DualTag<MTag> {
  using type = NTag;
};
template <>
struct DualTag<NTag> {
  using type = MTag;
};
template <class Tag>
using Dual = typename DualTag<Tag>::type;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of M or N. The lattice is part of the type so that the pairing
/// only type-checks between an M-vector and an N-vector.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(IntVector coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords) : coords_(static_cast<Index>(coords.size())) {
    Index i = 0;
    for (long c : coords) coords_[i++] = c;
  }

  static LatticeVector zero(Index dim) { return LatticeVector(IntVector::Zero(dim)); }
  /// Standard basis vector e_i (0-based i).
  static LatticeVector basis(Index dim, Index i) {
    IntVector v = IntVector::Zero(dim);
    v[i] = 1;
    return LatticeVector(std::move(v));
  }

  Index dim() const { return coords_.size(); }
  const Integer& operator[](Index i) const { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  RatVector rational() const { return coords_.cast<Rational>(); }
  bool is_zero() const {
    for (Index i = 0; i < dim(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    return LatticeVector(IntVector(a.coords_ + b.coords_));
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    return LatticeVector(IntVector(a.coords_ - b.coords_));
  }
  friend LatticeVector operator-(const LatticeVector& a) { return LatticeVector(IntVector(-a.coords_)); }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    return LatticeVector(IntVector(k * a.coords_));
  }
  LatticeVector& operator+=(const LatticeVector& b) { return *this = *this + b; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return equal(a.coords_, b.coords_);
  }
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (lex_less(a.coords_, b.coords_)) return std::strong_ordering::less;
    if (lex_less(b.coords_, a.coords_)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (Index i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  static void check_same_dim(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim())
      throw DimensionError("lattice vectors of dimension " + std::to_string(a.dim()) + " and " +
                           std::to_string(b.dim()));
  }

  IntVector coords_;
};

using MVector = LatticeVector<MTag>;
using NVector = LatticeVector<NTag>;

/// The dual pairing <m, n>.
Integer pair(const MVector& m, const NVector& n);
inline Integer pair(const NVector& n, const MVector& m) { return pair(m, n); }

template <class A, class B>
concept Pairable = requires(const A& a, const B& b) { pair(a, b); };

/// Pairing of a rational point of one lattice's real span with a lattice
/// vector of the dual.
template <class Tag>
Rational pair_rational(const RatVector& x, const LatticeVector<Dual<Tag>>& y) {
  if (x.size() != y.dim()) throw DimensionError("pairing dimension mismatch");
  Rational s = 0;
  for (Index i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::string to_string(const MVector& v);
std::string to_string(const NVector& v);

}  // namespace mirrorkit
