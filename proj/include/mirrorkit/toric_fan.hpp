// Fans of smooth Fano polytopes, torus-invariant divisors and support functions.
//
// Sign convention, used everywhere in the library: a support function psi
// corresponds to the divisor D_psi = sum_rho psi(n_rho) V(rho), and psi is
// linear on each maximal cone sigma with psi(n) = <m(psi, sigma), n>. The
// line bundle O(D_psi) has weight m(psi, sigma) at the fixed point of sigma.
//
// anticanonical_support is the function with value -1 on every ray: its cone
// functionals are the vertices of the anticanonical polytope, and it is the
// sum of the support functions of the -V(rho_i). Its divisor under the
// convention above is -sum V(rho) = K, so the name follows the polytope, not
// the divisor.
#pragma once

#include "mirrorkit/polytope.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace mirrorkit {

class FanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a solved table disagrees with its closed form.
class LemmaVerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Cone = std::vector<std::size_t>;  // sorted ray indices

/// Complete simplicial fan given by its rays and maximal cones.
class Fan {
 public:
  /// Validates primitivity, distinctness and per-cone linear independence.
  Fan(Index dimension, std::vector<NVector> rays, std::vector<Cone> maximal_cones);

  Index dimension() const { return dimension_; }
  const std::vector<NVector>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return cones_; }
  std::size_t ray_count() const { return rays_.size(); }
  std::size_t cone_count() const { return cones_.size(); }

  /// Every maximal cone is generated by a lattice basis.
  bool is_smooth() const;
  /// Square matrix whose rows are the ray generators of cone c.
  IntMatrix cone_matrix(std::size_t c) const;
  bool cone_contains_ray(std::size_t c, std::size_t ray) const;
  /// Pairs of distinct maximal cones sharing at least one ray.
  std::vector<std::pair<std::size_t, std::size_t>> adjacent_cones() const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  Index dimension_;
  std::vector<NVector> rays_;
  std::vector<Cone> cones_;
};

using FanPtr = std::shared_ptr<const Fan>;

/// sum_rho a_rho V(rho).
struct ToricDivisor {
  FanPtr fan;
  std::vector<Integer> coefficients;

  ToricDivisor(FanPtr fan, std::vector<Integer> coefficients);
  static ToricDivisor zero(FanPtr fan);
  /// a * V(ray).
  static ToricDivisor prime(FanPtr fan, std::size_t ray, const Integer& a = 1);

  friend ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
  friend ToricDivisor operator-(const ToricDivisor& a);
  friend bool operator==(const ToricDivisor& a, const ToricDivisor& b) {
    return *a.fan == *b.fan && a.coefficients == b.coefficients;
  }
};

/// Conewise-linear integral function on the fan, stored as one functional
/// m(psi, sigma) per maximal cone. Continuity across shared rays is checked
/// at construction.
class SupportFunction {
 public:
  SupportFunction(FanPtr fan, std::vector<MVector> functionals);

  const FanPtr& fan() const { return fan_; }
  const std::vector<MVector>& functionals() const { return functionals_; }
  const MVector& functional(std::size_t cone) const { return functionals_.at(cone); }
  /// psi(n_rho).
  Integer value_on_ray(std::size_t ray) const;
  /// D_psi = sum psi(n_rho) V(rho).
  ToricDivisor divisor() const;

  friend bool operator==(const SupportFunction& a, const SupportFunction& b) {
    return *a.fan_ == *b.fan_ && a.functionals_ == b.functionals_;
  }

 private:
  FanPtr fan_;
  std::vector<MVector> functionals_;
};

/// Fan over the faces of a smooth Fano polytope: rays are its vertices, maximal
/// cones its facets. Rays are in the polytope's (lexicographic) vertex order.
Fan fan_from_fano_polytope(const Polytope<NTag>& fano);

/// Inverse of psi -> D_psi: per cone, solves <m, n_rho> = a_rho for rho in sigma.
SupportFunction support_function_of_divisor(const ToricDivisor& d);

/// Projective space with the standard labelling: ray i is e_i for i >= 1 and
/// e_0 = -(e_1 + ... + e_n); maximal cone k is spanned by every ray except ray
/// k, so the fixed point of cone k is the vertex cone_vertices[k] of the
/// anticanonical polytope.
struct ProjectiveSpace {
  Index n;
  Polytope<NTag> fano;            // Conv(e_0, ..., e_n)
  Polytope<MTag> anticanonical;   // polar dual of fano
  FanPtr fan;
  std::vector<MVector> cone_vertices;
};

ProjectiveSpace projective_space(Index n);

/// Closed forms for m(psi_i, sigma_k), psi_i the support function of -V(rho_i).
MVector euler_summand_closed_form(Index n, std::size_t i, std::size_t k);

/// table[i][k] = m(psi_i, sigma_k) solved from the divisor -V(rho_i); throws
/// LemmaVerificationError if any entry differs from the closed form.
std::vector<std::vector<MVector>> euler_summand_table(Index n);

/// psi_{-K}: value -1 on every ray, so m(psi_{-K}, sigma_k) is the vertex of
/// the anticanonical polytope at cone k.
SupportFunction anticanonical_support(const ProjectiveSpace& space);
SupportFunction anticanonical_support(Index n);

/// Cokernel of M -> Div_T, m -> (<m, n_rho>)_rho.
struct PicardGroup {
  Index rank;
  std::vector<Integer> torsion;  // invariant factors > 1
  SmithForm smith;
  Index lattice_rank;            // rank of the image of M

  /// Coordinates of the class of d: torsion coordinates reduced mod their
  /// order, followed by the free coordinates.
  std::vector<Integer> class_of(const ToricDivisor& d) const;
};

PicardGroup picard_quotient(const Fan& fan);

}  // namespace mirrorkit
