#pragma once

// Command-line front end. `run` executes one parsed command; `cli_main`
// parses argv with CLI11 and prints the result.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace moonshine {

enum class Command {
  JExpand,
  Faber,
  Replicates,
  Hecke,
  VerifyHeckeEquivalence,
  VerifyReplicability,
  VerifySymExp,
  Pairs,
  Transitive,
  Cocycle,
  Fricke,
  RandomNorton,
};

enum class Format { Table, Structured };

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct RunConfig {
  Command command = Command::JExpand;
  std::string group = "1";
  std::optional<std::string> series_path;
  std::optional<std::string> norton_path;
  bool use_j = false;

  unsigned n = 1;
  unsigned n_max = 1;
  std::vector<unsigned> n_list;
  /// Target q-order (j-based commands, replicates) or t-order (replicability).
  std::optional<unsigned> order;
  unsigned var_order = 4;
  unsigned terms = 12;  // j-expand rows, random fixture size
  std::string impl = "geometric";

  std::int64_t s = 0;
  bool check_all = false;
  std::optional<std::int64_t> generator;  // fricke --g

  std::uint64_t seed = 1;
  std::optional<std::string> out_path;
  Format format = Format::Table;
};

struct RunResult {
  int exit_code = kOk;
  /// Human-readable table (or the error message when exit_code == kInputError).
  std::string text;
  nlohmann::json report;
};

/// Never throws for bad input: those come back as kInputError with a message.
RunResult run(const RunConfig& config);

/// Parses arguments (argv[0] is the program name), runs, writes the table or
/// JSON to `out` and the report to --out if given. Returns the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moonshine
