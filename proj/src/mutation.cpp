#include "mirrorkit/mutation.hpp"

#include "mirrorkit/polytope.hpp"

#include <map>
#include <sstream>

namespace mirrorkit {

namespace {

Integer binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

void check_n(Index n) {
  if (n < 1) throw DimensionError("projective space needs n >= 1");
}

}  // namespace

K0Class::K0Class(Index n, std::vector<Integer> coefficients) : n_(n), coefficients_(std::move(coefficients)) {
  check_n(n);
  if (static_cast<Index>(coefficients_.size()) != n + 1) throw DimensionError("K0 class needs n+1 coefficients");
}

K0Class K0Class::zero(Index n) { return K0Class(n, std::vector<Integer>(static_cast<std::size_t>(n + 1), 0)); }

Integer K0Class::rank() const {
  Integer out = 0;
  for (const auto& c : coefficients_) out += c;
  return out;
}

Integer K0Class::c1() const {
  Integer out = 0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out += coefficients_[k] * static_cast<long>(k);
  return out;
}

Integer K0Class::chi() const {
  Integer out = 0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out += coefficients_[k] * chi_line_bundle(n_, static_cast<long>(k));
  return out;
}

std::optional<long> K0Class::as_line_bundle() const {
  if (rank() != 1) return std::nullopt;
  const Integer d = c1();
  if (!d.fits_slong_p()) return std::nullopt;
  if (line_bundle_class(n_, d.get_si()) == *this) return d.get_si();
  return std::nullopt;
}

K0Class operator+(const K0Class& a, const K0Class& b) {
  if (a.n_ != b.n_) throw DimensionError("K0 classes on different projective spaces");
  K0Class out = a;
  for (std::size_t k = 0; k < out.coefficients_.size(); ++k) out.coefficients_[k] += b.coefficients_[k];
  return out;
}

K0Class operator-(const K0Class& a, const K0Class& b) { return a + Integer(-1) * b; }

K0Class operator*(const Integer& s, const K0Class& a) {
  K0Class out = a;
  for (auto& c : out.coefficients_) c *= s;
  return out;
}

std::string to_string(const K0Class& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.coefficients().size(); ++k) {
    const Integer& a = c.coefficients()[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    const Integer mag = abs(a);
    if (mag != 1) os << mag.get_str();
    os << "[O(" << k << ")]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Integer chi_line_bundle(Index n, long k) {
  // (k+1)(k+2)...(k+n)/n!, exact for every integer k.
  Integer num = 1;
  for (long j = 1; j <= n; ++j) num *= k + j;
  Integer fact = 1;
  for (long j = 2; j <= n; ++j) fact *= j;
  return num / fact;
}

K0Class line_bundle_class(Index n, long k) {
  check_n(n);
  const long top = static_cast<long>(n);
  std::map<long, K0Class> known;
  for (long j = 0; j <= top; ++j) {
    std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
    c[static_cast<std::size_t>(j)] = 1;
    known.emplace(j, K0Class(n, std::move(c)));
  }
  // Walk upwards: [O(m)] = -sum_{j>=1} (-1)^j C(n+1,j) [O(m-j)].
  for (long m = top + 1; m <= k; ++m) {
    K0Class acc = K0Class::zero(n);
    for (long j = 1; j <= top + 1; ++j) {
      const Integer sign = (j % 2 == 0) ? -1 : 1;
      acc = acc + (sign * binomial(top + 1, j)) * known.at(m - j);
    }
    known.emplace(m, acc);
  }
  // Walk downwards: (-1)^{n+1} [O(m)] = -sum_{j<=n} (-1)^j C(n+1,j) [O(m+n+1-j)].
  for (long m = -1; m >= k; --m) {
    K0Class acc = K0Class::zero(n);
    for (long j = 0; j <= top; ++j) {
      const Integer sign = (j % 2 == 0) ? -1 : 1;
      acc = acc + (sign * binomial(top + 1, j)) * known.at(m + top + 1 - j);
    }
    if ((top + 1) % 2 == 1) acc = Integer(-1) * acc;
    known.emplace(m, acc);
  }
  return known.at(k);
}

K0Class twist(const K0Class& c, long k) {
  K0Class out = K0Class::zero(c.n());
  for (std::size_t j = 0; j < c.coefficients().size(); ++j)
    if (c.coefficients()[j] != 0) out = out + c.coefficients()[j] * line_bundle_class(c.n(), static_cast<long>(j) + k);
  return out;
}

Integer hom_dimension(Index n, long a, long b) {
  check_n(n);
  const long d = b - a;
  if (d < 0) return 0;
  if (d == 0) return 1;  // the dilated simplex is a single point
  std::vector<MVector> corners{MVector::zero(n)};
  for (Index i = 0; i < n; ++i) corners.push_back(d * MVector::basis(n, i));
  const auto simplex = convex_hull<MTag>(std::span<const MVector>(corners));
  return static_cast<long>(lattice_points(simplex).size());
}

K0Class left_mutation(const K0Class& e, const K0Class& f) {
  if (e.n() != f.n()) throw DimensionError("K0 classes on different projective spaces");
  const auto a = e.as_line_bundle();
  const auto b = f.as_line_bundle();
  if (!a || !b) throw MutationError("left mutation is only implemented for line bundle classes");
  const Integer hom = hom_dimension(e.n(), *a, *b);
  if (hom == 0)
    throw MutationError("Hom(O(" + std::to_string(*a) + "), O(" + std::to_string(*b) + ")) vanishes; mutation undefined");
  return hom * e - f;
}

Integer klyachko_degree(const EquivariantBundle& e) {
  const Fan& fan = *e.fan();
  Integer out = 0;
  for (std::size_t r = 0; r < fan.ray_count(); ++r) {
    std::size_t c = 0;
    while (!fan.cone_contains_ray(c, r)) ++c;
    out += pair(weight_sum(e, c), fan.rays()[r]);
  }
  return out;
}

MutationReport verify_beilinson_mutation(Index n) {
  check_n(n);
  MutationReport report{n, {}, true};
  auto add = [&](std::string name, std::vector<Integer> lhs, std::vector<Integer> rhs) {
    const bool ok = lhs == rhs;
    report.pass = report.pass && ok;
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  };
  auto invariants = [](const K0Class& c) { return std::vector<Integer>{c.rank(), c.c1(), c.chi()}; };

  const K0Class o = line_bundle_class(n, 0);
  const K0Class o1 = line_bundle_class(n, 1);
  const K0Class om1 = line_bundle_class(n, -1);
  const K0Class mutated = twist(left_mutation(o, o1), -1);

  const ProjectiveSpace space = projective_space(n);
  const EquivariantBundle omega = cotangent_bundle(space.fan);
  const Integer klyachko_rank = static_cast<long>(weights(omega, 0).size());
  const Integer klyachko_c1 = klyachko_degree(omega);

  // The class of Omega^1 as defined by the Euler sequence.
  const K0Class omega_class = Integer(n + 1) * om1 - o;

  add("hom(O,O(1))", {hom_dimension(n, 0, 1)}, {n + 1});
  add("rank", {mutated.rank()}, {klyachko_rank});
  add("c1", {mutated.c1()}, {klyachko_c1});
  add("class", mutated.coefficients(), omega_class.coefficients());
  add("euler-identity", {klyachko_rank + o.rank(), klyachko_c1 + o.c1(), omega_class.chi() + o.chi()},
      invariants(Integer(n + 1) * om1));
  if (n == 1) add("omega-is-O(-2)", mutated.coefficients(), line_bundle_class(1, -2).coefficients());
  return report;
}

}  // namespace mirrorkit
