#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympair {

/// Command-line entry point.  Subcommands: orbits, cone, hasse, triple,
/// verify, dim, siegel.  Returns 0 on success, 1 on domain errors (odd
/// partition, bad diagram, signature mismatch), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympair
