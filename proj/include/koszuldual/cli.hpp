#ifndef KOSZULDUAL_CLI_HPP
#define KOSZULDUAL_CLI_HPP

#include <ostream>

namespace koszuldual {

/// Whole command line: 0 success, 1 analysis error, 2 usage or parse error.
/// `terminal` says whether `out` is a terminal (colour default when
/// KOSZULDUAL_COLOR is unset).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool terminal = false);

}  // namespace koszuldual

#endif
