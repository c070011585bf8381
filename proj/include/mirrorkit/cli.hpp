// Command-line front end. Everything except argument parsing is a pure
// function of RunConfig, so the same code path serves the binary and tests.
#pragma once

#include "mirrorkit/figures.hpp"
#include "mirrorkit/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace mirrorkit {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Info, Divisors, Cotangent, EulerCobordism, Mutate, Figure };
enum class Format { Json, Text, Svg };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& s);
std::string to_string(Format f);
std::optional<Format> parse_format(const std::string& s);

struct RunConfig {
  Command command = Command::Info;
  Index n = 2;
  std::optional<FigureKind> kind;  // figure only
  Format format = Format::Json;
  std::string out;                 // empty: write to the output stream
  int samples = 64;                // figure only
};

/// Throws UsageError for inconsistent configurations.
void validate(const RunConfig& config);

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Report {
  Json json;          // null for figures
  std::string svg;    // figures only
  bool pass = true;   // verdict of the underlying library check
};

/// Runs the command without any I/O.
Report build_report(const RunConfig& config);

/// Renders a report in the requested format (trailing newline included).
std::string render(const RunConfig& config, const Report& report);

/// Validates, runs, writes the artifact to config.out or `out`; returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv parsing followed by run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mirrorkit
