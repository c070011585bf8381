#include "mirrorkit/tropical.hpp"

#include <algorithm>

namespace mirrorkit {

AffineLift::AffineLift(std::vector<MVector> vertices, std::vector<MVector> heights, std::string label)
    : vertices_(std::move(vertices)), heights_(std::move(heights)), label_(std::move(label)) {
  if (vertices_.empty()) throw DimensionError("lift over an empty polytope");
  const Index n = vertices_.front().dim();
  if (heights_.size() != vertices_.size()) throw DimensionError("need one height per vertex");
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k].dim() != n || heights_[k].dim() != n) throw DimensionError("lift data of mixed dimension");
  std::vector<RatVector> pts;
  for (const auto& v : vertices_) pts.push_back(v.rational());
  if (static_cast<Index>(vertices_.size()) != n + 1 || affine_dimension(pts) != n)
    throw SurgeryModelError("affine lifts are only defined over a simplex");
}

RatVector AffineLift::height_at(const RatVector& barycentric) const {
  if (barycentric.size() != static_cast<Index>(heights_.size())) throw DimensionError("barycentric size");
  RatVector h = RatVector::Zero(dimension());
  for (std::size_t k = 0; k < heights_.size(); ++k) h += barycentric[static_cast<Index>(k)] * heights_[k].rational();
  return h;
}

AffineLift zero_section(const std::vector<MVector>& vertices) {
  std::vector<MVector> heights(vertices.size(), MVector::zero(vertices.front().dim()));
  return AffineLift(vertices, std::move(heights), "0");
}

AffineLift zero_section(const ProjectiveSpace& space) { return zero_section(space.cone_vertices); }

AffineLift lift_of_support_function(const ProjectiveSpace& space, const SupportFunction& psi, std::string label) {
  if (!(*psi.fan() == *space.fan)) throw FanError("support function lives on another fan");
  return AffineLift(space.cone_vertices, psi.functionals(), std::move(label));
}

AffineLift deck_translate(const AffineLift& lift, const MVector& m) {
  std::vector<MVector> heights;
  for (const auto& h : lift.heights()) heights.push_back(h + m);
  return AffineLift(lift.vertices(), std::move(heights), lift.label());
}

MultiSection::MultiSection(std::vector<AffineLift> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multisection needs at least one component");
  for (const auto& c : components_)
    if (c.vertices() != components_.front().vertices()) throw SurgeryModelError("components over different polytopes");
}

MultiSection deck_translate(const MultiSection& s, const MVector& m) {
  std::vector<AffineLift> out;
  for (const auto& c : s.components()) out.push_back(deck_translate(c, m));
  return MultiSection(std::move(out));
}

std::string to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Empty: return "empty";
    case IntersectionKind::Vertex: return "vertex";
    case IntersectionKind::InteriorPoint: return "interior-point";
    case IntersectionKind::PositiveDimensional: return "positive-dimensional";
  }
  return "unknown";
}

Intersection classify_intersection(const AffineLift& a, const AffineLift& b) {
  if (a.vertices() != b.vertices()) throw SurgeryModelError("lifts over different polytopes");
  const Index n = a.dimension();
  const Index count = n + 1;

  // Solutions are lambda >= 0 with sum lambda = 1 and sum lambda_k (a_k - b_k) = 0.
  RatMatrix constraints(n + 1, count);
  for (Index k = 0; k < count; ++k) {
    constraints.block(0, k, n, 1) = (a.height(static_cast<std::size_t>(k)) - b.height(static_cast<std::size_t>(k))).rational();
    constraints(n, k) = 1;
  }
  RatVector rhs = RatVector::Zero(n + 1);
  rhs[n] = 1;
  const Index r = rank(constraints);

  // The feasible set is a polytope; its vertices are the basic feasible solutions.
  std::vector<RatVector> basic;
  std::vector<bool> pick(static_cast<std::size_t>(count), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    RatMatrix sub(n + 1, r);
    std::vector<Index> cols;
    for (Index k = 0; k < count; ++k)
      if (pick[static_cast<std::size_t>(k)]) cols.push_back(k);
    for (Index j = 0; j < r; ++j) sub.col(j) = constraints.col(cols[static_cast<std::size_t>(j)]);
    const auto sol = solve_affine(sub, rhs);
    if (!sol || sol->directions.cols() != 0) continue;
    RatVector lambda = RatVector::Zero(count);
    bool feasible = true;
    for (Index j = 0; j < r; ++j) {
      if (sol->particular[j] < 0) feasible = false;
      lambda[cols[static_cast<std::size_t>(j)]] = sol->particular[j];
    }
    if (!feasible) continue;
    if (std::none_of(basic.begin(), basic.end(), [&](const RatVector& v) { return equal(v, lambda); }))
      basic.push_back(std::move(lambda));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  if (basic.empty()) return {IntersectionKind::Empty, std::nullopt, std::nullopt};
  if (basic.size() > 1) return {IntersectionKind::PositiveDimensional, std::nullopt, std::nullopt};
  const RatVector& lambda = basic.front();
  for (Index k = 0; k < count; ++k)
    if (lambda[k] == 1) return {IntersectionKind::Vertex, lambda, static_cast<std::size_t>(k)};
  return {IntersectionKind::InteriorPoint, lambda, std::nullopt};
}

Intersection intersect(const AffineLift& a, const AffineLift& b) {
  Intersection out = classify_intersection(a, b);
  if (out.kind == IntersectionKind::PositiveDimensional)
    throw NonTransverseError("lifts " + a.label() + " and " + b.label() + " meet in a positive-dimensional set");
  return out;
}

Intersection intersections_with_zero_section(const AffineLift& lift) {
  return intersect(lift, zero_section(lift.vertices()));
}

bool SurgeredSection::has_surgery_at(std::size_t vertex) const {
  return std::any_of(points_.begin(), points_.end(), [&](const SurgeryPoint& p) { return p.vertex == vertex; });
}

SurgeredSection surgery(const MultiSection& components, const AffineLift& base) {
  if (components.vertices() != base.vertices()) throw SurgeryModelError("base lives over another polytope");
  SurgeredSection out(components, base);
  for (std::size_t c = 0; c < components.components().size(); ++c) {
    const AffineLift& lift = components.components()[c];
    const Intersection meet = intersect(lift, base);
    if (meet.kind != IntersectionKind::Vertex)
      throw SurgeryModelError("component " + std::to_string(c) + " meets the base in a " + to_string(meet.kind) +
                              " intersection, not a single vertex");
    if (out.has_surgery_at(*meet.vertex))
      throw SurgeryModelError("two components meet the base at vertex " + std::to_string(*meet.vertex));
    out.points_.push_back({*meet.vertex, c, *meet.barycentric});
  }
  for (std::size_t v = 0; v < components.vertices().size(); ++v) {
    std::set<MVector> seen;
    for (const auto& lift : components.components())
      if (!seen.insert(lift.height(v)).second)
        throw CoincidentWeightsError("coincident heights " + to_string(lift.height(v)) + " over vertex " +
                                     std::to_string(v));
  }
  return out;
}

std::set<MVector> lagrangian_weights(const AffineLift& lift, std::size_t vertex) { return {lift.height(vertex)}; }

std::set<MVector> lagrangian_weights(const MultiSection& s, std::size_t vertex) {
  std::set<MVector> out;
  for (const auto& c : s.components()) out.insert(c.height(vertex));
  return out;
}

std::set<MVector> lagrangian_weights(const SurgeredSection& s, std::size_t vertex) {
  std::set<MVector> out = lagrangian_weights(s.multisection(), vertex);
  if (s.has_surgery_at(vertex))
    out.erase(s.base().height(vertex));
  else
    out.insert(s.base().height(vertex));
  return out;
}

MultiSection euler_multisection(const ProjectiveSpace& space) {
  std::vector<AffineLift> lifts;
  for (std::size_t i = 0; i < space.fan->ray_count(); ++i) {
    const SupportFunction psi = support_function_of_divisor(ToricDivisor::prime(space.fan, i, -1));
    lifts.push_back(lift_of_support_function(space, psi, "-V(rho_" + std::to_string(i) + ")"));
  }
  return MultiSection(std::move(lifts));
}

MultiSection euler_multisection(Index n) { return euler_multisection(projective_space(n)); }

TheoremReport verify_main_theorem(Index n) {
  const ProjectiveSpace space = projective_space(n);
  const SurgeredSection surgered = surgery(euler_multisection(space), zero_section(space));
  const EquivariantBundle omega = cotangent_bundle(space.fan);

  TheoremReport report{n, {}, true};
  for (std::size_t k = 0; k < space.fan->cone_count(); ++k) {
    ConeComparison row{k, space.cone_vertices[k], lagrangian_weights(surgered, k), weights(omega, k), false};
    row.match = row.surgered == row.cotangent;
    report.pass = report.pass && row.match;
    report.cones.push_back(std::move(row));
  }
  return report;
}

namespace {

// Vertex indices of the left and right endpoints of a segment.
std::pair<std::size_t, std::size_t> segment_ends(const std::vector<MVector>& vertices) {
  if (vertices.front().dim() != 1) throw DimensionError("rotation class is only defined over a segment");
  return vertices[0][0] < vertices[1][0] ? std::pair<std::size_t, std::size_t>{0, 1}
                                         : std::pair<std::size_t, std::size_t>{1, 0};
}

}  // namespace

Integer rotation_class(const AffineLift& lift) {
  const auto [left, right] = segment_ends(lift.vertices());
  return lift.height(left)[0] - lift.height(right)[0];
}

Integer rotation_class(const SurgeredSection& s) {
  const auto [left, right] = segment_ends(s.base().vertices());
  const auto lw = lagrangian_weights(s, left);
  const auto rw = lagrangian_weights(s, right);
  if (lw.size() != 1 || rw.size() != 1) throw SurgeryModelError("surgered section is not single-valued over the ends");
  return (*lw.begin())[0] - (*rw.begin())[0];
}

PlanarPoint handle_curve(const Rational& t) {
  if (t <= -1) return {t, 0};
  if (t >= 1) return {0, t};
  const Rational left = (1 - t) / 2;
  const Rational right = (1 + t) / 2;
  return {-left * left, right * right};
}

}  // namespace mirrorkit
