#pragma once

// Command-line front end:
//
//   specon eval   --gaps a1,a2,...   [--bandwidth W]
//   specon eval   --endpoints x1,... [--bandwidth W]
//   specon verify --suite {identities|thresholds|l2|avg|special|all} --samples N --seed S
//   specon search --n N --restarts R --seed S [--t-max T] [--mode {minimize|scan|remark1}] [--t T]
//
// Files go to $SPECON_OUT (default ./out). Exit codes: 0 success, 1 a
// verification failed, 2 bad arguments.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace specon {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// $SPECON_OUT, or ./out when unset or empty.
std::filesystem::path output_directory();

}  // namespace specon
