#ifndef SOBOLEV2D_CLI_HPP
#define SOBOLEV2D_CLI_HPP

#include <iostream>

namespace sobolev2d {

/// Entry point of the sobolev2d command line tool. Returns the process exit
/// code: 0 on success, 1 on a failed check or internal invariant, 2 on
/// invalid parameters or malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_CLI_HPP
