#include "mirrorkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace mirrorkit {

namespace {

const std::vector<std::pair<Command, std::string>> kCommands{
    {Command::Info, "info"},     {Command::Divisors, "divisors"}, {Command::Cotangent, "cotangent"},
    {Command::EulerCobordism, "euler-cobordism"}, {Command::Mutate, "mutate"}, {Command::Figure, "figure"}};

const std::vector<std::pair<Format, std::string>> kFormats{
    {Format::Json, "json"}, {Format::Text, "text"}, {Format::Svg, "svg"}};

Json info_json(Index n) {
  const ProjectiveSpace space = projective_space(n);
  Json out;
  out["n"] = n;
  out["fano_polytope"] = to_json(space.fano);
  out["anticanonical_polytope"] = to_json(space.anticanonical);
  out["reflexive"] = {{"fano_polytope", is_reflexive(space.fano)},
                      {"anticanonical_polytope", is_reflexive(space.anticanonical)}};
  out["fano"] = {{"fano_polytope", is_fano_polytope(space.fano)},
                 {"anticanonical_polytope", is_fano_polytope(space.anticanonical)}};
  out["fan"] = to_json(*space.fan);
  Json verts = Json::array();
  for (const auto& v : space.cone_vertices) verts.push_back(to_json(v));
  out["cone_vertices"] = std::move(verts);
  out["picard"] = to_json(picard_quotient(*space.fan));
  return out;
}

Report divisors_report(Index n) {
  const ProjectiveSpace space = projective_space(n);
  Report r;
  Json table = Json::array();
  for (std::size_t i = 0; i < space.fan->ray_count(); ++i) {
    const SupportFunction psi = support_function_of_divisor(ToricDivisor::prime(space.fan, i, -1));
    for (std::size_t k = 0; k < space.fan->cone_count(); ++k) {
      const MVector closed = euler_summand_closed_form(n, i, k);
      const bool match = psi.functional(k) == closed;
      r.pass = r.pass && match;
      table.push_back({{"divisor", i}, {"cone", k}, {"solved", to_json(psi.functional(k))},
                       {"closed_form", to_json(closed)}, {"match", match}});
    }
  }
  r.json["n"] = n;
  r.json["table"] = std::move(table);
  r.json["pass"] = r.pass;
  return r;
}

Report cotangent_report(Index n) {
  const ProjectiveSpace space = projective_space(n);
  const EquivariantBundle omega = cotangent_bundle(space.fan);
  Report r;
  Json filtrations = Json::array();
  for (const auto& f : omega.filtrations()) filtrations.push_back(to_json(f));
  Json cones = Json::array();
  for (std::size_t k = 0; k < space.fan->cone_count(); ++k) {
    Json row = weight_table_json(omega, k);
    const auto closed = cotangent_weights_closed_form(n, k);
    const bool match = weights(omega, k) == closed;
    r.pass = r.pass && match;
    row["vertex"] = to_json(space.cone_vertices[k]);
    row["closed_form"] = to_json(closed);
    row["match"] = match;
    cones.push_back(std::move(row));
  }
  r.json["n"] = n;
  r.json["rank"] = omega.rank();
  r.json["filtrations"] = std::move(filtrations);
  r.json["cones"] = std::move(cones);
  r.json["pass"] = r.pass;
  return r;
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured() && !e.is_array(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "unknown";
}

std::optional<Command> parse_command(const std::string& s) {
  for (const auto& [cmd, name] : kCommands)
    if (name == s) return cmd;
  return std::nullopt;
}

std::string to_string(Format f) {
  for (const auto& [fmt, name] : kFormats)
    if (fmt == f) return name;
  return "unknown";
}

std::optional<Format> parse_format(const std::string& s) {
  for (const auto& [fmt, name] : kFormats)
    if (name == s) return fmt;
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (config.n < 1) throw UsageError("--n must be at least 1");
  const bool figure = config.command == Command::Figure;
  if (figure) {
    if (!config.kind) throw UsageError("figure needs --kind");
    if (config.format != Format::Svg) throw UsageError("figure output is svg only");
    if (config.n != figure_dimension(*config.kind))
      throw UsageError(to_string(*config.kind) + " is only drawn for n = " +
                       std::to_string(figure_dimension(*config.kind)));
    if (config.samples < 16) throw UsageError("--samples must be at least 16");
  } else {
    if (config.kind) throw UsageError("--kind only applies to figure");
    if (config.format == Format::Svg) throw UsageError("svg output only applies to figure");
  }
}

Report build_report(const RunConfig& config) {
  switch (config.command) {
    case Command::Info: return {info_json(config.n), {}, true};
    case Command::Divisors: return divisors_report(config.n);
    case Command::Cotangent: return cotangent_report(config.n);
    case Command::EulerCobordism: {
      const TheoremReport t = verify_main_theorem(config.n);
      return {to_json(t), {}, t.pass};
    }
    case Command::Mutate: {
      const MutationReport m = verify_beilinson_mutation(config.n);
      return {to_json(m), {}, m.pass};
    }
    case Command::Figure: {
      FigureSpec spec;
      spec.kind = *config.kind;
      spec.n = config.n;
      spec.samples = config.samples;
      return {Json(), emit_figure(spec), true};
    }
  }
  throw UsageError("unknown command");
}

std::string render(const RunConfig& config, const Report& report) {
  if (config.format == Format::Svg) return report.svg;
  if (config.format == Format::Json) return report.json.dump(2) + "\n";
  std::ostringstream os;
  os << to_string(config.command) << " n=" << config.n << '\n';
  flatten(report.json, "", os);
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Report report = build_report(config);
  const std::string text = render(config, report);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "cannot write " << config.out << '\n';
      return kExitUsage;
    }
    file << text;
  }
  if (!report.pass) err << to_string(config.command) << ": verification FAILED\n";
  return report.pass ? kExitPass : kExitFail;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric mirror constructions for projective space"};
  std::string command, kind, format;
  std::optional<Index> n;
  RunConfig config;

  std::vector<std::string> command_names, format_names;
  for (const auto& c : kCommands) command_names.push_back(c.second);
  for (const auto& f : kFormats) format_names.push_back(f.second);
  std::vector<std::string> kind_names;
  for (auto k : {FigureKind::AnnulusCurves, FigureKind::CoverLifts, FigureKind::CoverSurgery, FigureKind::PolytopeWeights})
    kind_names.push_back(to_string(k));

  app.add_option("command", command, "What to run")->required()->check(CLI::IsMember(command_names));
  app.add_option("--n", n, "Dimension of projective space")->check(CLI::PositiveNumber);
  app.add_option("--kind", kind, "Figure kind")->check(CLI::IsMember(kind_names));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember(format_names));
  app.add_option("--out", config.out, "Output file (default: stdout)");
  app.add_option("--samples", config.samples, "Samples per figure curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  config.command = *parse_command(command);
  if (!kind.empty()) config.kind = parse_figure_kind(kind);
  if (config.command == Command::Figure) {
    config.format = format.empty() ? Format::Svg : *parse_format(format);
    config.n = n.value_or(config.kind ? figure_dimension(*config.kind) : 1);
  } else {
    config.format = format.empty() ? Format::Json : *parse_format(format);
    config.n = n.value_or(2);
  }
  return run(config, out, err);
}

}  // namespace mirrorkit
