#include "mirrorkit/toric_fan.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace mirrorkit {

Fan::Fan(Index dimension, std::vector<NVector> rays, std::vector<Cone> maximal_cones)
    : dimension_(dimension), rays_(std::move(rays)), cones_(std::move(maximal_cones)) {
  if (dimension_ < 1) throw FanError("fan dimension must be at least 1");
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (rays_[r].dim() != dimension_) throw DimensionError("ray " + std::to_string(r) + " has wrong dimension");
    if (content(rays_[r].coords()) != 1) throw FanError("ray " + to_string(rays_[r]) + " is not primitive");
    for (std::size_t s = 0; s < r; ++s)
      if (rays_[s] == rays_[r]) throw FanError("duplicate ray " + to_string(rays_[r]));
  }
  for (auto& cone : cones_) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) throw FanError("cone repeats a ray");
    if (static_cast<Index>(cone.size()) != dimension_) throw FanError("maximal cone is not simplicial of full dimension");
    for (std::size_t r : cone)
      if (r >= rays_.size()) throw FanError("cone references unknown ray " + std::to_string(r));
  }
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (rank(cone_matrix(c)) != dimension_) throw FanError("cone " + std::to_string(c) + " is degenerate");
}

bool Fan::is_smooth() const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const Integer det = determinant(cone_matrix(c));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

IntMatrix Fan::cone_matrix(std::size_t c) const {
  const Cone& cone = cones_.at(c);
  IntMatrix m(static_cast<Index>(cone.size()), dimension_);
  for (std::size_t j = 0; j < cone.size(); ++j) m.row(static_cast<Index>(j)) = rays_[cone[j]].coords().transpose();
  return m;
}

bool Fan::cone_contains_ray(std::size_t c, std::size_t ray) const {
  const Cone& cone = cones_.at(c);
  return std::binary_search(cone.begin(), cone.end(), ray);
}

std::vector<std::pair<std::size_t, std::size_t>> Fan::adjacent_cones() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < cones_.size(); ++a)
    for (std::size_t b = a + 1; b < cones_.size(); ++b) {
      std::vector<std::size_t> shared;
      std::set_intersection(cones_[a].begin(), cones_[a].end(), cones_[b].begin(), cones_[b].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) out.emplace_back(a, b);
    }
  return out;
}

ToricDivisor::ToricDivisor(FanPtr f, std::vector<Integer> coeffs) : fan(std::move(f)), coefficients(std::move(coeffs)) {
  if (!fan) throw FanError("divisor without a fan");
  if (coefficients.size() != fan->ray_count()) throw DimensionError("divisor needs one coefficient per ray");
}

ToricDivisor ToricDivisor::zero(FanPtr fan) {
  const auto count = fan->ray_count();
  return ToricDivisor(std::move(fan), std::vector<Integer>(count, Integer(0)));
}

ToricDivisor ToricDivisor::prime(FanPtr fan, std::size_t ray, const Integer& a) {
  ToricDivisor d = zero(std::move(fan));
  d.coefficients.at(ray) = a;
  return d;
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
  if (!(*a.fan == *b.fan)) throw FanError("divisors on different fans");
  ToricDivisor out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

ToricDivisor operator-(const ToricDivisor& a) {
  ToricDivisor out = a;
  for (auto& c : out.coefficients) c = -c;
  return out;
}

SupportFunction::SupportFunction(FanPtr fan, std::vector<MVector> functionals)
    : fan_(std::move(fan)), functionals_(std::move(functionals)) {
  if (!fan_) throw FanError("support function without a fan");
  if (functionals_.size() != fan_->cone_count()) throw DimensionError("need one functional per maximal cone");
  for (const auto& m : functionals_)
    if (m.dim() != fan_->dimension()) throw DimensionError("functional has wrong dimension");
  for (std::size_t ray = 0; ray < fan_->ray_count(); ++ray) {
    std::optional<Integer> value;
    for (std::size_t c = 0; c < fan_->cone_count(); ++c) {
      if (!fan_->cone_contains_ray(c, ray)) continue;
      const Integer v = pair(functionals_[c], fan_->rays()[ray]);
      if (value && *value != v)
        throw FanError("support function is discontinuous across ray " + to_string(fan_->rays()[ray]));
      value = v;
    }
  }
}

Integer SupportFunction::value_on_ray(std::size_t ray) const {
  for (std::size_t c = 0; c < fan_->cone_count(); ++c)
    if (fan_->cone_contains_ray(c, ray)) return pair(functionals_[c], fan_->rays()[ray]);
  throw FanError("ray " + std::to_string(ray) + " lies in no maximal cone");
}

ToricDivisor SupportFunction::divisor() const {
  std::vector<Integer> coeffs;
  for (std::size_t ray = 0; ray < fan_->ray_count(); ++ray) coeffs.push_back(value_on_ray(ray));
  return ToricDivisor(fan_, std::move(coeffs));
}

Fan fan_from_fano_polytope(const Polytope<NTag>& fano) {
  if (!is_fano_polytope(fano)) throw FanError("polytope is not a Fano polytope");
  std::vector<NVector> rays = fano.lattice_vertices();
  std::vector<Cone> cones;
  for (std::size_t f = 0; f < fano.facets().size(); ++f) cones.push_back(fano.facet_vertices(f));
  std::sort(cones.begin(), cones.end());
  Fan fan(fano.dimension(), std::move(rays), std::move(cones));
  if (!fan.is_smooth()) throw FanError("fan of a Fano polytope is not smooth");
  return fan;
}

SupportFunction support_function_of_divisor(const ToricDivisor& d) {
  const Fan& fan = *d.fan;
  if (!fan.is_smooth()) throw FanError("support functions are only built on smooth fans");
  std::vector<MVector> functionals;
  for (std::size_t c = 0; c < fan.cone_count(); ++c) {
    const Cone& cone = fan.maximal_cones()[c];
    RatVector rhs(static_cast<Index>(cone.size()));
    for (std::size_t j = 0; j < cone.size(); ++j) rhs[static_cast<Index>(j)] = d.coefficients[cone[j]];
    auto m = solve_unique(to_rational(fan.cone_matrix(c)), rhs);
    if (!m) throw ExactnessError("singular cone matrix on a smooth fan");
    functionals.emplace_back(to_integer(*m));
  }
  return SupportFunction(d.fan, std::move(functionals));
}

ProjectiveSpace projective_space(Index n) {
  if (n < 1) throw DimensionError("projective space needs n >= 1");
  std::vector<NVector> rays;
  rays.push_back(-[&] {
    NVector sum = NVector::zero(n);
    for (Index i = 0; i < n; ++i) sum += NVector::basis(n, i);
    return sum;
  }());
  for (Index i = 0; i < n; ++i) rays.push_back(NVector::basis(n, i));

  std::vector<Cone> cones;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    Cone cone;
    for (std::size_t r = 0; r <= static_cast<std::size_t>(n); ++r)
      if (r != k) cone.push_back(r);
    cones.push_back(std::move(cone));
  }

  ProjectiveSpace space{n, convex_hull<NTag>(std::span<const NVector>(rays)), Polytope<MTag>{}, nullptr, {}};
  space.anticanonical = polar_dual(space.fano);
  auto fan = std::make_shared<const Fan>(n, rays, cones);

  // The labelled fan must agree with the one read off the polytope.
  const Fan derived = fan_from_fano_polytope(space.fano);
  std::set<std::set<std::string>> expected, actual;
  for (const auto& cone : fan->maximal_cones()) {
    std::set<std::string> s;
    for (auto r : cone) s.insert(to_string(fan->rays()[r]));
    expected.insert(s);
  }
  for (const auto& cone : derived.maximal_cones()) {
    std::set<std::string> s;
    for (auto r : cone) s.insert(to_string(derived.rays()[r]));
    actual.insert(s);
  }
  if (expected != actual) throw std::logic_error("projective space fan disagrees with its Fano polytope");

  space.fan = fan;
  const auto vertices = space.anticanonical.lattice_vertices();
  for (std::size_t k = 0; k < fan->cone_count(); ++k) {
    auto m = solve_unique(to_rational(fan->cone_matrix(k)), RatVector::Constant(n, Rational(-1)));
    MVector vertex(to_integer(*m));
    if (std::find(vertices.begin(), vertices.end(), vertex) == vertices.end())
      throw std::logic_error("cone functional is not a vertex of the anticanonical polytope");
    space.cone_vertices.push_back(std::move(vertex));
  }
  return space;
}

MVector euler_summand_closed_form(Index n, std::size_t i, std::size_t k) {
  const auto top = static_cast<std::size_t>(n);
  if (i > top || k > top) throw std::out_of_range("summand or cone index out of range");
  auto dual = [n](std::size_t j) { return MVector::basis(n, static_cast<Index>(j) - 1); };
  if (i == 0) return k == 0 ? MVector::zero(n) : dual(k);
  if (k == i) return MVector::zero(n);
  if (k == 0) return -dual(i);
  return dual(k) - dual(i);
}

std::vector<std::vector<MVector>> euler_summand_table(Index n) {
  const ProjectiveSpace space = projective_space(n);
  std::vector<std::vector<MVector>> table;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
    const SupportFunction psi = support_function_of_divisor(ToricDivisor::prime(space.fan, i, -1));
    for (std::size_t k = 0; k < psi.functionals().size(); ++k) {
      const MVector expected = euler_summand_closed_form(n, i, k);
      if (psi.functional(k) != expected)
        throw LemmaVerificationError("m(psi_" + std::to_string(i) + ", sigma_" + std::to_string(k) + ") = " +
                                     to_string(psi.functional(k)) + " but closed form gives " + to_string(expected));
    }
    table.push_back(psi.functionals());
  }
  return table;
}

SupportFunction anticanonical_support(const ProjectiveSpace& space) {
  return support_function_of_divisor(
      ToricDivisor(space.fan, std::vector<Integer>(space.fan->ray_count(), Integer(-1))));
}

SupportFunction anticanonical_support(Index n) { return anticanonical_support(projective_space(n)); }

std::vector<Integer> PicardGroup::class_of(const ToricDivisor& d) const {
  IntVector x(static_cast<Index>(d.coefficients.size()));
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) x[static_cast<Index>(i)] = d.coefficients[i];
  if (x.size() != smith.left.cols()) throw DimensionError("divisor does not live on this fan");
  const IntVector y = smith.left * x;
  std::vector<Integer> out;
  for (Index i = 0; i < lattice_rank; ++i) {
    const Integer& order = smith.diagonal(i, i);
    if (order == 1) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), order.get_mpz_t());
    out.push_back(r);
  }
  for (Index i = lattice_rank; i < y.size(); ++i) out.push_back(y[i]);
  return out;
}

PicardGroup picard_quotient(const Fan& fan) {
  IntMatrix a(static_cast<Index>(fan.ray_count()), fan.dimension());
  for (std::size_t r = 0; r < fan.ray_count(); ++r) a.row(static_cast<Index>(r)) = fan.rays()[r].coords().transpose();
  PicardGroup pic{0, {}, smith_normal_form(a), 0};
  pic.lattice_rank = pic.smith.rank();
  pic.rank = static_cast<Index>(fan.ray_count()) - pic.lattice_rank;
  for (const auto& f : pic.smith.invariant_factors())
    if (f != 1) pic.torsion.push_back(f);
  return pic;
}

}  // namespace mirrorkit
