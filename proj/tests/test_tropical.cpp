#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mirrorkit/tropical.hpp"
#include "support.hpp"

using namespace mirrorkit;
using testing::Gen;

namespace {

const std::vector<MVector>& delta2() {
  static const std::vector<MVector> v = projective_space(2).cone_vertices;
  return v;
}

AffineLift lift2(std::vector<MVector> heights) { return AffineLift(delta2(), std::move(heights)); }

// The segment [-1, 1] with vertex 0 at -1.
AffineLift lift1(long at_minus, long at_plus) {
  return AffineLift({MVector{-1}, MVector{1}}, {MVector{at_minus}, MVector{at_plus}});
}

}  // namespace

TEST_CASE("lifts of support functions") {
  const ProjectiveSpace p2 = projective_space(2);
  const auto psi1 = support_function_of_divisor(ToricDivisor::prime(p2.fan, 1, -1));
  const AffineLift l = lift_of_support_function(p2, psi1);
  CHECK(l.height(0) == MVector{-1, 0});
  CHECK(l.height(1) == MVector{0, 0});
  CHECK(l.height(2) == MVector{-1, 1});

  const AffineLift z = lift_of_support_function(p2, support_function_of_divisor(ToricDivisor::zero(p2.fan)));
  CHECK(z == zero_section(p2));

  // n = 1 table: psi_0 has heights 0 at -1 and 1 at +1.
  const ProjectiveSpace p1 = projective_space(1);
  const AffineLift l0 = lift_of_support_function(p1, support_function_of_divisor(ToricDivisor::prime(p1.fan, 0, -1)));
  CHECK(l0.height(0) == MVector{0});
  CHECK(l0.height(1) == MVector{1});

  CHECK_THROWS_AS(lift_of_support_function(p1, psi1), FanError);
}

TEST_CASE("lift weights equal support function functionals") {
  Gen gen(51);
  for (Index n = 1; n <= 4; ++n) {
    const ProjectiveSpace space = projective_space(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Integer> coeffs;
      for (std::size_t r = 0; r < space.fan->ray_count(); ++r) coeffs.push_back(gen.integer(-3, 3));
      const auto psi = support_function_of_divisor(ToricDivisor(space.fan, coeffs));
      const AffineLift l = lift_of_support_function(space, psi);
      for (std::size_t k = 0; k < space.fan->cone_count(); ++k)
        CHECK(lagrangian_weights(l, k) == std::set<MVector>{psi.functional(k)});
    }
  }
}

TEST_CASE("non-simplex bases are rejected") {
  const std::vector<MVector> square{MVector{-1, -1}, MVector{1, -1}, MVector{1, 1}, MVector{-1, 1}};
  CHECK_THROWS_AS(AffineLift(square, std::vector<MVector>(4, MVector{0, 0})), SurgeryModelError);
  CHECK_THROWS_AS(AffineLift({MVector{0, 0}, MVector{1, 1}, MVector{2, 2}}, std::vector<MVector>(3, MVector{0, 0})),
                  SurgeryModelError);
  CHECK_THROWS_AS(AffineLift(delta2(), {MVector{0, 0}}), DimensionError);
}

TEST_CASE("deck translation") {
  const AffineLift z = zero_section(delta2());
  CHECK(deck_translate(z, MVector{0, 0}) == z);
  const AffineLift t = deck_translate(z, MVector{1, 0});
  for (std::size_t k = 0; k < 3; ++k) CHECK(t.height(k) == MVector{1, 0});

  // L(-2) with (h_+, h_-) = (1, -1), translated by -1.
  const AffineLift l = deck_translate(lift1(-1, 1), MVector{-1});
  CHECK(l.height(1) == MVector{0});
  CHECK(l.height(0) == MVector{-2});
  CHECK(rotation_class(l) == rotation_class(lift1(-1, 1)));
}

TEST_CASE("weights of multisections and surgered sections") {
  const MultiSection l1 = euler_multisection(2);
  CHECK(lagrangian_weights(l1, 1) == std::set<MVector>{MVector{1, 0}, MVector{0, 0}, MVector{1, -1}});
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(lagrangian_weights(zero_section(delta2()), k) == std::set<MVector>{MVector{0, 0}});

  const SurgeredSection s = surgery(l1, zero_section(delta2()));
  CHECK(lagrangian_weights(s, 1) == std::set<MVector>{MVector{1, 0}, MVector{1, -1}});
}

TEST_CASE("multisection weights are the union of component weights") {
  Gen gen(52);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<AffineLift> comps;
    const int count = static_cast<int>(gen.integer(1, 4));
    for (int c = 0; c < count; ++c) {
      std::vector<MVector> hs;
      for (int k = 0; k < 3; ++k) hs.push_back(gen.lattice_vector<MTag>(2, -2, 2));
      comps.push_back(lift2(hs));
    }
    const MultiSection m(comps);
    for (std::size_t k = 0; k < 3; ++k) {
      std::set<MVector> expect;
      for (const auto& c : comps) expect.insert(c.height(k));
      CHECK(lagrangian_weights(m, k) == expect);
    }
  }
}

TEST_CASE("intersections with the zero section") {
  const ProjectiveSpace p2 = projective_space(2);
  const AffineLift l = lift_of_support_function(p2, support_function_of_divisor(ToricDivisor::prime(p2.fan, 1, -1)));
  const Intersection hit = intersections_with_zero_section(l);
  CHECK(hit.kind == IntersectionKind::Vertex);
  REQUIRE(hit.vertex.has_value());
  CHECK(*hit.vertex == 1);
  CHECK(equal(*hit.barycentric, RatVector(RatVector::Unit(3, 1))));

  CHECK_THROWS_AS(intersections_with_zero_section(zero_section(p2)), NonTransverseError);
  CHECK(classify_intersection(zero_section(p2), zero_section(p2)).kind == IntersectionKind::PositiveDimensional);

  // Oracle: lambda = (1/2, 1/2, 0) solves lambda_0 (1,0) + lambda_1 (-1,0) = 0 uniquely on the simplex.
  const Intersection mid = intersections_with_zero_section(lift2({MVector{1, 0}, MVector{-1, 0}, MVector{0, 1}}));
  CHECK(mid.kind == IntersectionKind::InteriorPoint);
  RatVector half(3);
  half << Rational(1, 2), Rational(1, 2), 0;
  CHECK(equal(*mid.barycentric, half));

  CHECK(intersections_with_zero_section(deck_translate(zero_section(p2), MVector{1, 0})).kind == IntersectionKind::Empty);
}

TEST_CASE("random intersections are solutions of the height system") {
  Gen gen(53);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MVector> hs;
    for (int k = 0; k < 3; ++k) hs.push_back(gen.lattice_vector<MTag>(2, -2, 2));
    const AffineLift l = lift2(hs);
    const Intersection x = classify_intersection(l, zero_section(delta2()));
    if (x.barycentric) {
      const RatVector& lambda = *x.barycentric;
      CHECK(lambda.sum() == 1);
      for (Index k = 0; k < 3; ++k) CHECK(lambda[k] >= 0);
      CHECK(l.height_at(lambda).isZero());
    }
    if (x.kind == IntersectionKind::Vertex) CHECK(hs[*x.vertex].is_zero());
    // A zero vertex height forces a nonempty intersection.
    bool any_zero = false;
    for (const auto& h : hs) any_zero = any_zero || h.is_zero();
    if (any_zero) CHECK(x.kind != IntersectionKind::Empty);
  }
}

TEST_CASE("Euler multisections") {
  const MultiSection e1 = euler_multisection(1);
  REQUIRE(e1.components().size() == 2);
  CHECK(e1.components()[0].heights() == std::vector<MVector>{MVector{0}, MVector{1}});
  CHECK(e1.components()[1].heights() == std::vector<MVector>{MVector{-1}, MVector{0}});

  for (Index n : {2, 4}) {
    const MultiSection e = euler_multisection(n);
    CHECK(static_cast<Index>(e.components().size()) == n + 1);
    std::set<std::size_t> vertices;
    for (const auto& c : e.components()) {
      const Intersection x = intersections_with_zero_section(c);
      REQUIRE(x.kind == IntersectionKind::Vertex);
      vertices.insert(*x.vertex);
    }
    CHECK(static_cast<Index>(vertices.size()) == n + 1);
  }
}

TEST_CASE("surgery in the Euler configuration") {
  const ProjectiveSpace p1 = projective_space(1);
  const SurgeredSection s1 = surgery(euler_multisection(p1), zero_section(p1));
  CHECK(lagrangian_weights(s1, 0) == std::set<MVector>{MVector{-1}});
  CHECK(lagrangian_weights(s1, 1) == std::set<MVector>{MVector{1}});
  CHECK(rotation_class(s1) == -2);
  CHECK(s1.surgery_points().size() == 2);

  const ProjectiveSpace p2 = projective_space(2);
  const SurgeredSection s2 = surgery(euler_multisection(p2), zero_section(p2));
  const auto omega = cotangent_bundle(p2.fan);
  for (std::size_t k = 0; k < 3; ++k) CHECK(lagrangian_weights(s2, k) == weights(omega, k));
}

TEST_CASE("surgery refuses configurations outside the model") {
  const ProjectiveSpace p2 = projective_space(2);
  const AffineLift z = zero_section(p2);
  CHECK_THROWS_AS(surgery(MultiSection({z}), z), NonTransverseError);
  CHECK_THROWS_AS(surgery(MultiSection({deck_translate(z, MVector{1, 0})}), z), SurgeryModelError);
  CHECK_THROWS_AS(surgery(MultiSection({lift2({MVector{1, 0}, MVector{-1, 0}, MVector{0, 1}})}), z), SurgeryModelError);

  const auto l1 = euler_multisection(p2).components()[1];
  CHECK_THROWS_AS(surgery(MultiSection({l1, l1}), z), SurgeryModelError);

  // Two components meeting the base at different vertices but sharing a height elsewhere.
  const AffineLift a = lift2({MVector{0, 0}, MVector{1, 0}, MVector{0, 1}});
  const AffineLift b = lift2({MVector{1, 1}, MVector{0, 0}, MVector{0, 1}});
  CHECK_THROWS_AS(surgery(MultiSection({a, b}), z), CoincidentWeightsError);
}

TEST_CASE("surgery cardinality rule") {
  for (Index n = 1; n <= 5; ++n) {
    const ProjectiveSpace space = projective_space(n);
    const MultiSection e = euler_multisection(space);
    const SurgeredSection s = surgery(e, zero_section(space));
    for (std::size_t k = 0; k < space.fan->cone_count(); ++k) {
      long nonzero = 0;
      for (const auto& c : e.components())
        if (!c.height(k).is_zero()) ++nonzero;
      const long expect = nonzero + 1 - (s.has_surgery_at(k) ? 1 : 0);
      CHECK(static_cast<long>(lagrangian_weights(s, k).size()) == expect);
      CHECK(expect == n);
    }
  }
}

TEST_CASE("main theorem report") {
  for (Index n = 1; n <= 5; ++n) {
    const TheoremReport r = verify_main_theorem(n);
    CHECK(r.pass);
    CHECK(static_cast<Index>(r.cones.size()) == n + 1);
    for (const auto& c : r.cones) {
      CHECK(c.match);
      CHECK(static_cast<Index>(c.surgered.size()) == n);
    }
  }
  const TheoremReport r1 = verify_main_theorem(1);
  CHECK(r1.cones[0].surgered == std::set<MVector>{MVector{-1}});
  CHECK(r1.cones[1].cotangent == std::set<MVector>{MVector{1}});
}

TEST_CASE("deck translation moves surgered weights and keeps the verdict") {
  Gen gen(54);
  for (Index n = 1; n <= 4; ++n) {
    const ProjectiveSpace space = projective_space(n);
    const MultiSection e = euler_multisection(space);
    const SurgeredSection base = surgery(e, zero_section(space));
    const auto omega = cotangent_bundle(space.fan);
    for (int trial = 0; trial < 5; ++trial) {
      const MVector m = gen.lattice_vector<MTag>(n, -3, 3);
      const SurgeredSection moved = surgery(deck_translate(e, m), deck_translate(zero_section(space), m));
      bool verdict = true;
      for (std::size_t k = 0; k < space.fan->cone_count(); ++k) {
        std::set<MVector> shifted;
        for (const auto& w : lagrangian_weights(base, k)) shifted.insert(w + m);
        CHECK(lagrangian_weights(moved, k) == shifted);
        std::set<MVector> back;
        for (const auto& w : lagrangian_weights(moved, k)) back.insert(w - m);
        verdict = verdict && back == weights(omega, k);
      }
      CHECK(verdict == verify_main_theorem(n).pass);
    }
  }
}

TEST_CASE("rotation class") {
  CHECK(rotation_class(lift1(0, 0)) == 0);
  CHECK(rotation_class(lift1(-1, 0)) == -1);
  CHECK(rotation_class(lift1(-1, 1)) == -2);
  CHECK_THROWS_AS(rotation_class(zero_section(delta2())), DimensionError);
}

TEST_CASE("handle curve") {
  auto at = [](long p, long q) { return handle_curve(Rational(p, q)); };
  CHECK(at(-2, 1).x == -2);
  CHECK(at(-2, 1).y == 0);
  CHECK(at(2, 1).x == 0);
  CHECK(at(2, 1).y == 2);
  CHECK(at(-1, 1).x == -1);
  CHECK(at(1, 1).y == 1);

  // Strictly increasing real and imaginary parts over 101 samples of (-1, 1).
  PlanarPoint prev = handle_curve(Rational(-1));
  for (int j = 1; j <= 101; ++j) {
    Rational t = Rational(2 * j, 102) - 1;
    t.canonicalize();
    const PlanarPoint p = handle_curve(t);
    CHECK(p.x > prev.x);
    CHECK(p.y > prev.y);
    prev = p;
  }
  CHECK(handle_curve(Rational(1)).x > prev.x);

  // C^1 at the joins: one-sided difference quotients approach the tail slopes.
  const Rational h(1, 1000000);
  CHECK(abs((handle_curve(Rational(-1) + h).x - handle_curve(Rational(-1)).x) / h - 1) < Rational(1, 1000));
  CHECK(abs((handle_curve(Rational(1)).y - handle_curve(Rational(1) - h).y) / h - 1) < Rational(1, 1000));
  CHECK(abs((handle_curve(Rational(-1) + h).y - handle_curve(Rational(-1)).y) / h) < Rational(1, 1000));
  CHECK(abs((handle_curve(Rational(1)).x - handle_curve(Rational(1) - h).x) / h) < Rational(1, 1000));
}
