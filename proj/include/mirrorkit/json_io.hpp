// JSON views of the library types. Keys are emitted in a fixed order so that
// serialized output is byte-stable. Integers that fit a machine word are JSON
// numbers; larger integers and non-integral rationals are strings "p/q".
#pragma once

#include "mirrorkit/mutation.hpp"
#include "mirrorkit/tropical.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace mirrorkit {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

template <class Tag>
Json to_json(const LatticeVector<Tag>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.dim(); ++i) out.push_back(to_json(v[i]));
  return out;
}

template <class Tag>
LatticeVector<Tag> lattice_vector_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("lattice vector must be an array");
  IntVector c(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) c[static_cast<Index>(i)] = integer_from_json(j[i]);
  return LatticeVector<Tag>(c);
}

Json to_json(const RatVector& v);

template <class Tag>
Json to_json(const std::set<LatticeVector<Tag>>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(to_json(v));
  return out;
}

/// {dimension, vertices, facets: [{normal, offset}]}
template <class Tag>
Json to_json(const Polytope<Tag>& p);
/// Rebuilds from the vertices and checks any facets given against the hull.
template <class Tag>
Polytope<Tag> polytope_from_json(const Json& j);

/// {dimension, rays, cones}
Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

/// {fan, coefficients}
Json to_json(const ToricDivisor& d);
/// {fan, functionals}
Json to_json(const SupportFunction& psi);

/// {rank, torsion}
Json to_json(const PicardGroup& pic);

/// {ray, jumps: [{i, basis}]}, basis rows as "p/q" strings.
Json to_json(const Filtration& f);
/// {cone, weights}, weights sorted, each repeated by multiplicity.
Json weight_table_json(const EquivariantBundle& e, std::size_t cone);

/// {n, cones: [{vertex, surgered, cotangent, match}], pass}
Json to_json(const TheoremReport& r);

/// {n, coefficients, rank, c1, chi}
Json to_json(const K0Class& c);
/// {checks: [{name, lhs, rhs, pass}], pass}
Json to_json(const MutationReport& r);

}  // namespace mirrorkit
