#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotid/homfly.hpp"
#include "knotid/knotdb.hpp"

namespace knotid::cli {

// Marker for reading standard input instead of a file.
inline constexpr const char* kStdinMarker = "--";

struct PipelineConfig {
  bool simplify_enabled = true;              // -n turns it off
  std::optional<std::string> table_path;     // -f PATH
  bool builtin_table = false;                // -j
  std::string input;                         // path or "--"
  std::optional<std::string> output;         // default: standard output
  std::uint64_t projection_seed = 0;
  unsigned jobs = 1;
  HomflyLimits limits;
};

// Loads the table selected by `config`: -f PATH, otherwise the built-in one.
KnotTable select_table(const PipelineConfig& config);

// Runs one command line. args[0] is the program name: when its basename is a
// subcommand (coords2egc, xinger, jhomfly, jidknot, ...) it selects that
// subcommand, otherwise args[1] does. Returns the process exit status:
// 0 success, 1 data/processing failure, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace knotid::cli
