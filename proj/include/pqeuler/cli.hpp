#ifndef PQEULER_CLI_HPP
#define PQEULER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pqeuler
{

// Runs the command line (arguments without the program name). Returns 0 on
// success, 1 when a verification fails, 2 on usage errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pqeuler

#endif
