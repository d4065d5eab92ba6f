#ifndef SCRUTINEER_CLI_HPP
#define SCRUTINEER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace scrutineer {

/// Runs one command line (without the program name).
/// Returns 0 on success, 1 on invalid input, 2 when a budget is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scrutineer

#endif
