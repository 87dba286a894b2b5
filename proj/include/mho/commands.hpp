#pragma once

// Command implementations behind the CLI: each loads its inputs, runs the
// corresponding library operation, and renders a report with a stable field
// order. Exit codes: 0 condition holds / witness found / file generated,
// 1 condition fails (with certificate), 2 parse or validation error.
// Commands throw (ParseError, DomainError, CapacityError, ClosureError) for
// exit-2 situations unless they can report something more structured.

#include <cstdint>
#include <optional>
#include <string>

#include "mho/json_io.hpp"

namespace mho {

struct CommandResult {
  int exit_code = 0;
  json report;
  std::optional<json> artifact;  // written to --out when given
};

CommandResult cmd_check(const std::string& path, int parallel, int max_vertices);
CommandResult cmd_orient(const std::string& path, bool debug_recheck, int parallel,
                         int max_vertices);
CommandResult cmd_verify(const std::string& path, int parallel, int max_vertices);
CommandResult cmd_funcs(const std::string& path, int max_vertices);
CommandResult cmd_uncross(const std::string& path, const std::string& p1_json,
                          const std::string& p2_json, int max_vertices);
CommandResult cmd_pack_check(const std::string& path);
CommandResult cmd_pack_search(const std::string& path);

struct GenArgs {
  uint64_t seed = 0;
  int n = 4;
  int hyperedges = -1;
  int dyperedges = -1;
  std::string h_family = "any";
  std::string b_family = "any";
  std::string mode;  // empty for a condition instance, else a packing mode
  int edges = -1;    // total packing edge copies
};

CommandResult cmd_gen(const GenArgs& args);

}  // namespace mho
