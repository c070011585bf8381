#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_cases.hpp"
#include "mirrorkit/cli.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <regex>
#include <sstream>

using namespace mirrorkit;

namespace {

struct InProcess {
  int code;
  std::string out;
  std::string err;
};

InProcess cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mirrorkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> elements_with_class(const std::string& svg, const std::string& cls) {
  std::vector<std::string> out;
  const std::regex re("<[a-z]+ class=\"" + cls + "\"[^>]*>[^<]*");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back(it->str());
  return out;
}

std::vector<std::pair<double, double>> points_of(const std::string& polyline) {
  std::smatch m;
  std::regex_search(polyline, m, std::regex("points=\"([^\"]*)\""));
  std::vector<std::pair<double, double>> out;
  std::istringstream in(m[1].str());
  std::string pt;
  while (in >> pt) {
    const auto comma = pt.find(',');
    out.push_back({std::stod(pt.substr(0, comma)), std::stod(pt.substr(comma + 1))});
  }
  return out;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("euler-cobordism report") {
  const auto r = cli({"euler-cobordism", "--n", "2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"n", "cones", "pass"});
  CHECK(j["pass"] == true);
  REQUIRE(j["cones"].size() == 3);
  for (const auto& c : j["cones"]) {
    CHECK(keys(c) == std::vector<std::string>{"vertex", "surgered", "cotangent", "match"});
    CHECK(c["surgered"].size() == 2);
  }
  CHECK(j["cones"][1]["vertex"] == Json::parse("[2,-1]"));
  CHECK(j["cones"][1]["surgered"] == Json::parse("[[1,-1],[1,0]]"));
}

TEST_CASE("divisors table for n = 1 matches the hand-solved oracle") {
  const auto r = cli({"divisors", "--n", "1"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["table"].size() == 4);
  // (divisor, cone) -> functional.
  const std::map<std::pair<int, int>, int> oracle{{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, -1}, {{1, 1}, 0}};
  for (const auto& row : j["table"]) {
    const auto key = std::make_pair(row["divisor"].get<int>(), row["cone"].get<int>());
    CHECK(row["solved"] == Json::array({oracle.at(key)}));
    CHECK(row["match"] == true);
  }
  CHECK(j["pass"] == true);
}

TEST_CASE("mutate and cotangent reports") {
  const auto m = cli({"mutate", "--n", "2"});
  CHECK(m.code == 0);
  const Json mj = Json::parse(m.out);
  CHECK(keys(mj) == std::vector<std::string>{"checks", "pass"});
  for (const auto& c : mj["checks"]) CHECK(keys(c) == std::vector<std::string>{"name", "lhs", "rhs", "pass"});

  const auto c = cli({"cotangent", "--n", "2"});
  CHECK(c.code == 0);
  const Json cj = Json::parse(c.out);
  CHECK(cj["rank"] == 2);
  CHECK(cj["cones"][0]["weights"] == Json::parse("[[-1,0],[0,-1]]"));
  CHECK(cj["cones"][2]["weights"] == Json::parse("[[-1,1],[0,1]]"));
  REQUIRE(cj["filtrations"].size() == 3);
  CHECK(keys(cj["filtrations"][0]) == std::vector<std::string>{"ray", "jumps"});
  CHECK(cj["filtrations"][0]["jumps"][0]["basis"][0][0].is_string());
}

TEST_CASE("info report") {
  const auto r = cli({"info", "--n", "2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["anticanonical_polytope"]["vertices"] == Json::parse("[[-1,-1],[-1,2],[2,-1]]"));
  CHECK(j["fano"]["fano_polytope"] == true);
  CHECK(j["fano"]["anticanonical_polytope"] == false);
  CHECK(j["picard"]["rank"] == 1);
  CHECK(polytope_from_json<MTag>(j["anticanonical_polytope"]) == projective_space(2).anticanonical);
  CHECK(fan_from_json(j["fan"]) == *projective_space(2).fan);
}

TEST_CASE("polytope JSON round trip and validation") {
  const auto p = projective_space(3).fano;
  CHECK(polytope_from_json<NTag>(to_json(p)) == p);
  Json bad = to_json(p);
  bad["facets"][0]["offset"] = 7;
  CHECK_THROWS_AS(polytope_from_json<NTag>(bad), JsonFormatError);
  CHECK_THROWS_AS(polytope_from_json<NTag>(Json::parse("{\"vertices\": [[1, \"x\"]]}")), std::invalid_argument);
  CHECK(to_json(Rational(1, 2)) == "1/2");
  CHECK(to_json(Integer("100000000000000000000000")) == "100000000000000000000000");
}

TEST_CASE("text format") {
  const auto r = cli({"euler-cobordism", "--n", "1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass: true") != std::string::npos);
  CHECK(r.out.find("cones[0].surgered: [[-1]]") != std::string::npos);
}

TEST_CASE("CLI verdicts equal library verdicts") {
  for (Index n = 1; n <= 4; ++n) {
    const auto r = cli({"euler-cobordism", "--n", std::to_string(n)});
    CHECK((r.code == 0) == verify_main_theorem(n).pass);
    CHECK(Json::parse(r.out) == to_json(verify_main_theorem(n)));
    const auto m = cli({"mutate", "--n", std::to_string(n)});
    CHECK((m.code == 0) == verify_beilinson_mutation(n).pass);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"info", "--n", "0"}).code == 2);
  CHECK(cli({"info", "--n", "two"}).code == 2);
  CHECK(cli({"info", "--format", "svg"}).code == 2);
  CHECK(cli({"info", "--kind", "cover-lifts"}).code == 2);
  CHECK(cli({"figure"}).code == 2);
  CHECK(cli({"figure", "--kind", "nope"}).code == 2);
  CHECK(cli({"figure", "--kind", "cover-lifts", "--n", "2"}).code == 2);
  CHECK(cli({"figure", "--kind", "polytope-weights", "--n", "1"}).code == 2);
  CHECK(cli({"figure", "--kind", "cover-lifts", "--format", "json"}).code == 2);
  CHECK(cli({"figure", "--kind", "cover-lifts", "--samples", "8"}).code == 2);
  const auto e = cli({"figure", "--kind", "cover-lifts", "--n", "3"});
  CHECK(e.err.find("only drawn for n = 1") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("--out writes the artifact to a file") {
  const auto path = std::filesystem::temp_directory_path() / "mirrorkit_cli_out_test.json";
  const auto r = cli({"mutate", "--n", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(testing::read_file(path.string()) == cli({"mutate", "--n", "2"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("annulus curve samples") {
  const auto g0 = annulus_curve(0, 0);
  CHECK(std::abs(g0.real() - 1 / std::numbers::e) < 1e-12);
  CHECK(std::abs(g0.imag()) < 1e-12);
  const auto g1 = annulus_curve(-1, 1);
  CHECK(std::abs(g1.real() - std::numbers::e) < 1e-12);
  CHECK(std::abs(g1.imag()) < 1e-12);
  CHECK(std::abs(std::abs(annulus_curve(-2, 0.5)) - (std::numbers::e + 1 / std::numbers::e) / 2) < 1e-12);
}

TEST_CASE("cover-lifts figure") {
  const auto r = cli({"figure", "--kind", "cover-lifts", "--n", "1"});
  CHECK(r.code == 0);
  const auto lifts = elements_with_class(r.out, "lift");
  const auto zero = elements_with_class(r.out, "zero-section");
  REQUIRE(lifts.size() == 2);
  REQUIRE(zero.size() == 1);
  // Screen coordinates: x = 200 + 150 s, y = 200 - 80 h.
  auto height = [](double y) { return (200 - y) / 80; };
  const std::vector<std::pair<double, double>> ends{{0, 1}, {-1, 0}};  // n = 1 table
  for (std::size_t c = 0; c < 2; ++c) {
    const auto pts = points_of(lifts[c]);
    CHECK(pts.front().first == doctest::Approx(50));
    CHECK(pts.back().first == doctest::Approx(350));
    CHECK(height(pts.front().second) == doctest::Approx(ends[c].first));
    CHECK(height(pts.back().second) == doctest::Approx(ends[c].second));
  }
  for (const auto& p : points_of(zero[0])) CHECK(height(p.second) == doctest::Approx(0));
}

TEST_CASE("cover-surgery figure") {
  const auto r = cli({"figure", "--kind", "cover-surgery"});
  CHECK(r.code == 0);
  CHECK(elements_with_class(r.out, "lift").size() == 2);
  // One handle per surgery point.
  CHECK(elements_with_class(r.out, "handle").size() == 2);
  const auto labels = elements_with_class(r.out, "surgered");
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].substr(labels[0].size() - 2) == "-1");
  CHECK(labels[1].substr(labels[1].size() - 2) == "+1");
  // Each handle meets the pieces it joins.
  const auto handles = elements_with_class(r.out, "handle");
  const auto zero = points_of(elements_with_class(r.out, "zero-section")[0]);
  const auto h0 = points_of(handles[0]);
  CHECK(h0.front().first == doctest::Approx(zero.front().first));
  CHECK(h0.front().second == doctest::Approx(zero.front().second));
  CHECK(points_of(handles[1]).back().first == doctest::Approx(zero.back().first));
}

TEST_CASE("figures are deterministic and match the golden files") {
  for (const auto& g : testing::golden_cases()) {
    CAPTURE(g.args);
    const auto first = testing::run_binary(MIRRORKIT_CLI_PATH, g.args);
    const auto second = testing::run_binary(MIRRORKIT_CLI_PATH, g.args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == testing::read_file(std::string(MIRRORKIT_GOLDEN_DIR) + "/" + g.file));
  }
}

TEST_CASE("binary exit codes") {
  CHECK(testing::run_binary(MIRRORKIT_CLI_PATH, "euler-cobordism --n 2").exit_code == 0);
  CHECK(testing::run_binary(MIRRORKIT_CLI_PATH, "figure --kind cover-lifts --n 2").exit_code == 2);
  CHECK(testing::run_binary(MIRRORKIT_CLI_PATH, "frobnicate").exit_code == 2);
}
