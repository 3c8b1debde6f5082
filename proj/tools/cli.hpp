#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shapewalk/scalar.hpp"
#include "shapewalk/sim.hpp"

namespace shapewalk::cli {

enum class Subcommand { graph, hodge, sigma, simulate, verify };
enum class Format { json, csv, text };
enum class SigmaMethod { automatic, graph, closed_form };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Environment variable naming the directory that relative --output paths resolve against.
inline constexpr const char* kOutputDirEnv = "SHAPEWALK_OUTPUT_DIR";

struct CommandConfig {
  Subcommand subcommand = Subcommand::sigma;
  int k = 2;
  std::int64_t steps = 10000;
  std::int64_t trials = 10000;
  std::uint64_t seed = 42;
  Format format = Format::json;
  std::optional<std::string> output;
  Mode mode = Mode::exact;
  int k_max = 8;
  Representation representation = Representation::graph;
  SigmaMethod method = SigmaMethod::automatic;
  bool trajectory = false;
  bool timing = false;
  unsigned threads = 0;
};

/// Parses argv. On --help or a parse error returns nullopt and sets `exit_code`.
std::optional<CommandConfig> parse(const std::vector<std::string>& args, std::ostream& out,
                                   std::ostream& err, int& exit_code);

/// Executes a parsed command, writing the document to `out` (or to the
/// configured output file). Returns the process exit status.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapewalk::cli
