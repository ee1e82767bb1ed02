#pragma once

#include <iosfwd>

namespace gsavbq {

/// Command-line front end. Subcommands: run, converge, marsigli, shear, verify.
/// Returns 0 on success, 2 when a simulation diverges, 1 on usage or I/O errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsavbq
