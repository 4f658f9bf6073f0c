#ifndef ANET_TOOLS_CLI_HPP
#define ANET_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace anet::cli {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anet::cli

#endif  // ANET_TOOLS_CLI_HPP
