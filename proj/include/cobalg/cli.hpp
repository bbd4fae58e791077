#ifndef COBALG_CLI_HPP
#define COBALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cobalg {

// Runs one CLI invocation (args exclude the program name) and writes all
// output to the given streams.  Exit status: 0 on success and on passing
// verifications, 1 on any failing verification, 2 on usage or input errors.
// Output for a given invocation is byte-identical across runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobalg

#endif
