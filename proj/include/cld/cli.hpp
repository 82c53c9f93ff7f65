#ifndef CLD_CLI_HPP
#define CLD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cld::cli {

// Command-line entry point, stream-parameterized so it can be driven
// in-process. args excludes the program name.
//
// Exit codes: 0 success; 1 usage error; 2 script error; 3 the audit ran and
// refuted at least one checked claim (still a successful run).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cld::cli

#endif
