// CLI invocations frozen as golden files, and a helper to run the binary.
#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testing {

struct GoldenCase {
  std::string args;
  std::string file;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"info --n 2", "info-n2.json"},
      {"divisors --n 1", "divisors-n1.json"},
      {"divisors --n 3", "divisors-n3.json"},
      {"cotangent --n 2", "cotangent-n2.json"},
      {"euler-cobordism --n 1", "euler-cobordism-n1.json"},
      {"euler-cobordism --n 2", "euler-cobordism-n2.json"},
      {"euler-cobordism --n 3 --format text", "euler-cobordism-n3.txt"},
      {"mutate --n 2", "mutate-n2.json"},
      {"figure --kind annulus-curves --n 1", "annulus-curves.svg"},
      {"figure --kind cover-lifts --n 1", "cover-lifts.svg"},
      {"figure --kind cover-surgery --n 1", "cover-surgery.svg"},
      {"figure --kind polytope-weights --n 2", "polytope-weights.svg"},
  };
  return cases;
}

struct CliRun {
  int exit_code;
  std::string out;
};

// Runs the CLI binary with `args`, capturing stdout; stderr is discarded.
inline CliRun run_binary(const std::string& binary, const std::string& args) {
  const std::string cmd = "'" + binary + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing
