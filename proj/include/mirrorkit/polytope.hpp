// Full-dimensional lattice polytopes with exact vertex and facet descriptions.
#pragma once

#include "mirrorkit/lattice.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mirrorkit {

/// Input points do not affinely span the ambient space.
class DegeneracyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polar duality needs the origin strictly inside.
class OriginNotInteriorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Facet {x : <x, normal> = offset}; the polytope lies on the >= side.
/// The normal is primitive in the dual lattice.
template <class Tag>
struct Facet {
  LatticeVector<Dual<Tag>> normal;
  Rational offset;

  Rational evaluate(const RatVector& x) const { return pair_rational<Tag>(x, normal); }
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Convex polytope in the real span of lattice Tag. Vertices are stored
/// exactly; they are integral for lattice polytopes but may be rational for
/// the polar of a non-reflexive polytope.
template <class Tag>
class Polytope {
 public:
  /// Convex hull of rational points; throws DegeneracyError unless the points
  /// affinely span the ambient space.
  static Polytope hull(std::span<const RatVector> points);

  Index dimension() const { return dimension_; }
  /// Extreme points, lexicographically sorted.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  /// Facets sorted by normal.
  const std::vector<Facet<Tag>>& facets() const { return facets_; }

  bool is_integral() const;
  /// Throws ExactnessError if some vertex is not a lattice point.
  std::vector<LatticeVector<Tag>> lattice_vertices() const;

  bool contains(const RatVector& x) const;
  bool contains_in_interior(const RatVector& x) const;
  /// Indices of vertices lying on facet f.
  std::vector<std::size_t> facet_vertices(std::size_t f) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    if (a.dimension_ != b.dimension_ || a.vertices_.size() != b.vertices_.size()) return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i)
      if (!equal(a.vertices_[i], b.vertices_[i])) return false;
    return a.facets_ == b.facets_;
  }

 private:
  Index dimension_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet<Tag>> facets_;
};

template <class Tag>
Polytope<Tag> convex_hull(std::span<const LatticeVector<Tag>> points);
template <class Tag>
Polytope<Tag> convex_hull(std::initializer_list<LatticeVector<Tag>> points) {
  std::vector<LatticeVector<Tag>> v(points);
  return convex_hull<Tag>(std::span<const LatticeVector<Tag>>(v));
}

/// {y : <x, y> >= -1 for all x in p}. Vertices may be rational; check
/// is_integral() on the result.
template <class Tag>
Polytope<Dual<Tag>> polar_dual(const Polytope<Tag>& p);

/// Integral, origin in the interior, integral polar dual.
template <class Tag>
bool is_reflexive(const Polytope<Tag>& p);

/// Reflexive and the vertices of every facet form a lattice basis.
template <class Tag>
bool is_fano_polytope(const Polytope<Tag>& p);

/// All k-dimensional faces as sorted vertex-index subsets, sorted.
template <class Tag>
std::vector<std::vector<std::size_t>> faces(const Polytope<Tag>& p, Index k);

/// Every lattice point of p, lexicographically sorted.
template <class Tag>
std::vector<LatticeVector<Tag>> lattice_points(const Polytope<Tag>& p);

/// Dimension of the affine hull of a finite point set (-1 for the empty set).
Index affine_dimension(std::span<const RatVector> points);

}  // namespace mirrorkit
