#ifndef STREAMND_CLI_HPP_
#define STREAMND_CLI_HPP_

#include <ostream>

namespace streamnd {

/// Exit codes: 0 success, 1 usage/parse/file error, 2 infeasible instance,
/// 3 size guard exceeded, 4 internal contract violation.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace streamnd

#endif // STREAMND_CLI_HPP_
