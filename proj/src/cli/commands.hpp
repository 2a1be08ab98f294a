#ifndef NEWBASIS_CLI_COMMANDS_HPP
#define NEWBASIS_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace newbasis::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

// args without the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace newbasis::cli

#endif
