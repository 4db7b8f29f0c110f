#ifndef ATTDEL_CLI_HPP
#define ATTDEL_CLI_HPP

#include <string>
#include <vector>

namespace attdel {

// Command-line entry point, also callable from tests. Exit codes:
// 0 success / true, 1 false / mismatch, 2 usage or IO error.
int run_cli(const std::vector<std::string>& args);

}  // namespace attdel

#endif
