#include "mirrorkit/json_io.hpp"

namespace mirrorkit {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) {
  if (is_integral(x)) return to_json(Integer(x.get_num()));
  return Json(to_string(x));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (is_integral(r)) return Integer(r.get_num());
  }
  throw JsonFormatError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw JsonFormatError("expected a rational, got " + j.dump());
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

template <class Tag>
Json to_json(const Polytope<Tag>& p) {
  Json out;
  out["dimension"] = p.dimension();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  out["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json fj;
    fj["normal"] = to_json(f.normal);
    fj["offset"] = to_json(f.offset);
    facets.push_back(std::move(fj));
  }
  out["facets"] = std::move(facets);
  return out;
}

template <class Tag>
Polytope<Tag> polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw JsonFormatError("polytope needs a vertex list");
  std::vector<RatVector> pts;
  for (const auto& row : j.at("vertices")) {
    if (!row.is_array()) throw JsonFormatError("vertex must be an array");
    RatVector v(static_cast<Index>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) v[static_cast<Index>(i)] = rational_from_json(row[i]);
    pts.push_back(std::move(v));
  }
  auto p = Polytope<Tag>::hull(pts);
  if (j.contains("dimension") && j.at("dimension").get<Index>() != p.dimension())
    throw JsonFormatError("declared dimension disagrees with the vertices");
  if (j.contains("facets") && to_json(p).at("facets") != j.at("facets"))
    throw JsonFormatError("declared facets disagree with the hull of the vertices");
  return p;
}

template Json to_json(const Polytope<MTag>&);
template Json to_json(const Polytope<NTag>&);
template Polytope<MTag> polytope_from_json<MTag>(const Json&);
template Polytope<NTag> polytope_from_json<NTag>(const Json&);

Json to_json(const Fan& fan) {
  Json out;
  out["dimension"] = fan.dimension();
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(to_json(r));
  out["rays"] = std::move(rays);
  out["cones"] = fan.maximal_cones();
  return out;
}

Fan fan_from_json(const Json& j) {
  try {
    std::vector<NVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(lattice_vector_from_json<NTag>(r));
    return Fan(j.at("dimension").get<Index>(), std::move(rays), j.at("cones").get<std::vector<Cone>>());
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("malformed fan: ") + e.what());
  }
}

Json to_json(const ToricDivisor& d) {
  Json out;
  out["fan"] = to_json(*d.fan);
  Json c = Json::array();
  for (const auto& a : d.coefficients) c.push_back(to_json(a));
  out["coefficients"] = std::move(c);
  return out;
}

Json to_json(const SupportFunction& psi) {
  Json out;
  out["fan"] = to_json(*psi.fan());
  Json fs = Json::array();
  for (const auto& m : psi.functionals()) fs.push_back(to_json(m));
  out["functionals"] = std::move(fs);
  return out;
}

Json to_json(const PicardGroup& pic) {
  Json out;
  out["rank"] = pic.rank;
  Json t = Json::array();
  for (const auto& x : pic.torsion) t.push_back(to_json(x));
  out["torsion"] = std::move(t);
  return out;
}

Json to_json(const Filtration& f) {
  Json out;
  out["ray"] = f.ray();
  Json jumps = Json::array();
  for (const auto& [level, space] : f.levels()) {
    Json entry;
    entry["i"] = level;
    Json basis = Json::array();
    for (Index r = 0; r < space.basis().rows(); ++r) {
      Json row = Json::array();
      for (Index c = 0; c < space.basis().cols(); ++c) row.push_back(to_string(Rational(space.basis()(r, c))));
      basis.push_back(std::move(row));
    }
    entry["basis"] = std::move(basis);
    jumps.push_back(std::move(entry));
  }
  out["jumps"] = std::move(jumps);
  return out;
}

Json weight_table_json(const EquivariantBundle& e, std::size_t cone) {
  Json out;
  out["cone"] = cone;
  Json ws = Json::array();
  for (const auto& [m, mult] : weight_multiset(e, cone))
    for (Index k = 0; k < mult; ++k) ws.push_back(to_json(m));
  out["weights"] = std::move(ws);
  return out;
}

Json to_json(const TheoremReport& r) {
  Json out;
  out["n"] = r.n;
  Json cones = Json::array();
  for (const auto& c : r.cones) {
    Json cj;
    cj["vertex"] = to_json(c.vertex);
    cj["surgered"] = to_json(c.surgered);
    cj["cotangent"] = to_json(c.cotangent);
    cj["match"] = c.match;
    cones.push_back(std::move(cj));
  }
  out["cones"] = std::move(cones);
  out["pass"] = r.pass;
  return out;
}

Json to_json(const K0Class& c) {
  Json out;
  out["n"] = c.n();
  Json coeffs = Json::array();
  for (const auto& a : c.coefficients()) coeffs.push_back(to_json(a));
  out["coefficients"] = std::move(coeffs);
  out["rank"] = to_json(c.rank());
  out["c1"] = to_json(c.c1());
  out["chi"] = to_json(c.chi());
  return out;
}

namespace {

Json side_json(const std::vector<Integer>& v) {
  if (v.size() == 1) return to_json(v.front());
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const MutationReport& r) {
  Json out;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["lhs"] = side_json(c.lhs);
    cj["rhs"] = side_json(c.rhs);
    cj["pass"] = c.pass;
    checks.push_back(std::move(cj));
  }
  out["checks"] = std::move(checks);
  out["pass"] = r.pass;
  return out;
}

}  // namespace mirrorkit
