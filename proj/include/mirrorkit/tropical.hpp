// Tropical Lagrangian sections of the annulus-type fibration over a simplex,
// modelled in the universal cover Delta x M_R.
//
// A lift is the graph over Delta of the affine map that raises each vertex
// m_sigma to an integral height. The deck group M acts by translating every
// height. Only combinatorial invariants are modelled: fibres over vertices,
// intersections with another lift, and the effect of surgery on fibres.
#pragma once

#include "mirrorkit/klyachko.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorkit {

/// The configuration is outside the combinatorial surgery model.
class SurgeryModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonTransverseError : public SurgeryModelError {
 public:
  using SurgeryModelError::SurgeryModelError;
};

/// Two components would contribute the same height to one fibre.
class CoincidentWeightsError : public SurgeryModelError {
 public:
  using SurgeryModelError::SurgeryModelError;
};

class AffineLift {
 public:
  /// vertices[k] is the vertex of Delta at cone k; they must span a simplex.
  AffineLift(std::vector<MVector> vertices, std::vector<MVector> heights, std::string label = {});

  Index dimension() const { return vertices_.front().dim(); }
  const std::vector<MVector>& vertices() const { return vertices_; }
  const std::vector<MVector>& heights() const { return heights_; }
  const MVector& height(std::size_t vertex) const { return heights_.at(vertex); }
  const std::string& label() const { return label_; }

  /// Height of the affine interpolant at barycentric coordinates.
  RatVector height_at(const RatVector& barycentric) const;

  friend bool operator==(const AffineLift& a, const AffineLift& b) {
    return a.vertices_ == b.vertices_ && a.heights_ == b.heights_;
  }

 private:
  std::vector<MVector> vertices_;
  std::vector<MVector> heights_;
  std::string label_;
};

AffineLift zero_section(const std::vector<MVector>& vertices);
AffineLift zero_section(const ProjectiveSpace& space);

/// Raises the vertex of cone k to height m(psi, sigma_k).
AffineLift lift_of_support_function(const ProjectiveSpace& space, const SupportFunction& psi, std::string label = {});

AffineLift deck_translate(const AffineLift& lift, const MVector& m);

class MultiSection {
 public:
  explicit MultiSection(std::vector<AffineLift> components);
  const std::vector<AffineLift>& components() const { return components_; }
  const std::vector<MVector>& vertices() const { return components_.front().vertices(); }

 private:
  std::vector<AffineLift> components_;
};

MultiSection deck_translate(const MultiSection& s, const MVector& m);

enum class IntersectionKind {
  Empty,
  Vertex,              // a single point, at a vertex of Delta
  InteriorPoint,       // a single point that is not a vertex of Delta
  PositiveDimensional
};

std::string to_string(IntersectionKind kind);

struct Intersection {
  IntersectionKind kind;
  std::optional<RatVector> barycentric;  // set for single-point intersections
  std::optional<std::size_t> vertex;     // set for IntersectionKind::Vertex
};

/// Exact classification of {x in Delta : a(x) = b(x)}; never throws on
/// positive-dimensional intersections.
Intersection classify_intersection(const AffineLift& a, const AffineLift& b);
/// As classify_intersection, but a positive-dimensional intersection raises
/// NonTransverseError.
Intersection intersect(const AffineLift& a, const AffineLift& b);
Intersection intersections_with_zero_section(const AffineLift& lift);

struct SurgeryPoint {
  std::size_t vertex;
  std::size_t component;
  RatVector barycentric;
};

/// Result of surgering a multisection against one further section (the base)
/// at the points where each component meets the base.
class SurgeredSection {
 public:
  const MultiSection& multisection() const { return multisection_; }
  const AffineLift& base() const { return base_; }
  const std::vector<SurgeryPoint>& surgery_points() const { return points_; }
  bool has_surgery_at(std::size_t vertex) const;

 private:
  friend SurgeredSection surgery(const MultiSection& components, const AffineLift& base);
  SurgeredSection(MultiSection m, AffineLift base) : multisection_(std::move(m)), base_(std::move(base)) {}
  MultiSection multisection_;
  AffineLift base_;
  std::vector<SurgeryPoint> points_;
};

/// Requires every component to meet the base in exactly one vertex, with the
/// vertices pairwise distinct; raises SurgeryModelError (or a subclass)
/// otherwise. Surgery at a vertex removes the base's height from that fibre.
SurgeredSection surgery(const MultiSection& components, const AffineLift& base);

/// W(L, m_sigma) at vertex index `vertex` (= cone index).
std::set<MVector> lagrangian_weights(const AffineLift& lift, std::size_t vertex);
std::set<MVector> lagrangian_weights(const MultiSection& s, std::size_t vertex);
std::set<MVector> lagrangian_weights(const SurgeredSection& s, std::size_t vertex);

/// The n+1 lifts of the support functions of -V(rho_i) over Delta(P^n).
MultiSection euler_multisection(const ProjectiveSpace& space);
MultiSection euler_multisection(Index n);

struct ConeComparison {
  std::size_t cone;
  MVector vertex;
  std::set<MVector> surgered;
  std::set<MVector> cotangent;
  bool match;
};

struct TheoremReport {
  Index n;
  std::vector<ConeComparison> cones;
  bool pass;
};

/// Surgers the Euler multisection against the zero section and compares the
/// fibre over every vertex with the Klyachko weights of the cotangent bundle.
TheoremReport verify_main_theorem(Index n);

/// Winding number of a section over a segment: height at the left endpoint
/// minus height at the right endpoint. Only defined in dimension 1.
Integer rotation_class(const AffineLift& lift);
/// Same, for a surgered section whose fibres are single points.
Integer rotation_class(const SurgeredSection& s);

struct PlanarPoint {
  Rational x;
  Rational y;
};

/// A fixed surgery handle t -> a(t) + i b(t): a = t, b = 0 for t <= -1;
/// a = 0, b = t for t >= 1; and a = -((1-t)/2)^2, b = ((1+t)/2)^2 between,
/// which is C^1 with a', b' > 0 on (-1, 1).
PlanarPoint handle_curve(const Rational& t);

}  // namespace mirrorkit
