// Torus-equivariant vector bundles as Klyachko filtration data.
//
// A bundle of rank r is a vector space E = Q^r with one decreasing filtration
// E_rho(i) per ray. Over a smooth maximal cone sigma the filtrations of the
// rays of sigma split simultaneously, E = sum_m E^sigma(m), with
//
//   E_rho(i) = sum_{<m, n_rho> >= i} E^sigma(m)    for every rho in sigma.
//
// The splitting is computed constructively: for a multi-index a of levels on
// the rays of sigma put F(a) = intersection_j E_{rho_j}(a_j). Then
// dim E^sigma(a) is the inclusion-exclusion sum over the unit cube above a,
// and E^sigma(a) is taken to be a complement in F(a) of the sum of the F(a + e_j).
// The identity above is re-verified after the fact, so representatives are
// never trusted blindly. Only basis-independent data (dimensions, weights) is
// meaningful across runs.
#pragma once

#include "mirrorkit/toric_fan.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <span>
#include <stdexcept>
#include <vector>

namespace mirrorkit {

/// The filtrations of some cone admit no common splitting basis, or the
/// filtration data itself is malformed.
class CompatibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear subspace of Q^r in canonical (reduced row echelon) form, so that
/// equality is entrywise comparison of bases.
class Subspace {
 public:
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  /// Span of the rows of `rows`.
  static Subspace span(const RatMatrix& rows);
  static Subspace span(Index ambient, std::span<const RatVector> vectors);
  /// {x : <functional, x> = 0}.
  static Subspace kernel_of(const RatVector& functional);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  /// Rows form the reduced echelon basis.
  const RatMatrix& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  /// Block embedding: a in the first coordinates, b in the last ones.
  friend Subspace direct_sum(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(Index ambient, RatMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  Index ambient_ = 0;
  RatMatrix basis_;
};

/// Decreasing filtration of Q^r indexed by the integers. Stored as its jumps:
/// E(i) is the subspace at the smallest stored level >= i, and 0 above the
/// largest stored level. The smallest stored level carries the full space.
class Filtration {
 public:
  /// Levels may contain redundant entries; they are dropped. Throws
  /// CompatibilityError if the data is not a decreasing filtration starting
  /// at the full space.
  Filtration(std::size_t ray, std::map<long, Subspace> levels);

  std::size_t ray() const { return ray_; }
  Index rank() const { return rank_; }
  Subspace at(long i) const;
  /// Levels i with dim E(i) > dim E(i+1), ascending.
  std::vector<long> jump_indices() const;
  /// Below this level the filtration is the full space.
  long lower_bound() const { return levels_.begin()->first; }
  /// Above this level the filtration is zero.
  long upper_bound() const { return levels_.rbegin()->first; }
  const std::map<long, Subspace>& levels() const { return levels_; }

 private:
  std::size_t ray_;
  Index rank_;
  std::map<long, Subspace> levels_;
};

using Decomposition = std::map<MVector, Subspace>;
/// weight -> dim E^sigma(weight), zero pieces omitted.
using WeightMultiset = std::map<MVector, Index>;

class EquivariantBundle {
 public:
  const FanPtr& fan() const { return fan_; }
  Index rank() const { return rank_; }
  const std::vector<Filtration>& filtrations() const { return filtrations_; }
  /// E^sigma(m) for maximal cone `cone`, zero pieces omitted.
  const Decomposition& decomposition(std::size_t cone) const { return decompositions_.at(cone); }

 private:
  friend EquivariantBundle make_bundle(FanPtr fan, std::vector<Filtration> filtrations);
  FanPtr fan_;
  Index rank_ = 0;
  std::vector<Filtration> filtrations_;
  std::vector<Decomposition> decompositions_;
};

/// Builds the bundle and eagerly computes and verifies every cone decomposition.
/// Throws CompatibilityError naming the offending cone.
EquivariantBundle make_bundle(FanPtr fan, std::vector<Filtration> filtrations);

const Decomposition& decomposition(const EquivariantBundle& e, std::size_t cone);

/// W(E, sigma) as a set.
std::set<MVector> weights(const EquivariantBundle& e, std::size_t cone);
/// W(E, sigma) with multiplicities dim E^sigma(m).
WeightMultiset weight_multiset(const EquivariantBundle& e, std::size_t cone);
/// Dimension-weighted sum of W(E, sigma).
MVector weight_sum(const EquivariantBundle& e, std::size_t cone);

/// O(D): one-dimensional, E_rho(i) = Q for i <= a_rho and 0 above, so its
/// weight at sigma is m(psi_D, sigma) under the library's sign convention.
EquivariantBundle line_bundle(const ToricDivisor& d);

EquivariantBundle direct_sum(std::span<const EquivariantBundle> summands);

/// Omega^1 on M_Q: full space below level 0, Ker rho at 0, zero above.
EquivariantBundle cotangent_bundle(const FanPtr& fan);

/// Checks E_rho(i) = sum_{<m,n_rho> >= i} E^sigma(m) for every cone, every ray
/// of the cone and every level between the saturation bounds (one beyond on
/// each side). Returns a description of the first failure, if any.
std::optional<std::string> reconstruction_failure(const EquivariantBundle& e);

/// Known weights of Omega^1 on P^n at cone k in the standard labelling:
/// {-e_1^*, ..., -e_n^*} at k = 0 and {e_k^*} U {e_k^* - e_i^* : i != k} otherwise.
std::set<MVector> cotangent_weights_closed_form(Index n, std::size_t k);

}  // namespace mirrorkit
