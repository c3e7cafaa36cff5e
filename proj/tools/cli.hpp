#ifndef KOP_CLI_HPP
#define KOP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kop {

// Command line front end; returns the process exit code. Streams are injected
// so tests can capture output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace kop

#endif
