#pragma once

#include <string>
#include <vector>

#include "og4/constructions.hpp"

namespace og4 {

// exit-code contract: 0 pass, 1 checks failed, 2 bad parameters,
// 3 budget exceeded, 4 malformed input
enum ExitCode : int {
  exit_ok = 0,
  exit_checks_failed = 1,
  exit_bad_params = 2,
  exit_budget = 3,
  exit_bad_input = 4,
};

int run_cli(int argc, const char *const *argv);
int run_cli(const std::vector<std::string> &args);

// JSON serialization used by the CLI and the python module
std::string permutation_to_json_string(const Permutation &p);
std::string group_to_json_string(const PermGroup &g);

// {"graph": {...}, "group": {...}} pair loader for `verify --input`
OrientedPair load_pair_json(const std::string &text);
std::string pair_to_json_string(const OrientedPair &pair);

} // namespace og4
