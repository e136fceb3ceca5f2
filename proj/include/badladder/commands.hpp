#pragma once

// Subcommands of the badladder tool. Each takes a parsed RunConfig, writes
// its report to `out` and returns a process exit code.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "badladder/ladder.hpp"

namespace badladder {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

struct RunConfig {
  std::string command;
  int radius = 10;
  int truncation = 100;
  std::string variant = "both";  // plain | cubulated | both
  LadderEnd end = LadderEnd::Plus;
  LadderCoord x{0, Level::Top};
  LadderCoord y{0, Level::Mid};
  std::string format;  // json | csv | text; empty picks the command default
  std::string out;     // empty writes to stdout
  std::size_t vertex_cap = 50'000'000;
  std::uint64_t seed = 7;
  std::string graph = "cayley";  // free-tree | ladder | cayley
  std::size_t samples = 1000;
  bool exhaustive = false;
  std::string presentation;  // path; empty uses <p,q,s | s^-2 p s^2 q>
};

int cmd_ladder_exact(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cayley(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_delta(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export_ball(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name), dispatches, and maps library
/// errors onto exit codes. Honors --out by writing there instead of `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace badladder
