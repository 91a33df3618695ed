#pragma once

// The `cck` command line.
//
//   cck <expand|fpoly|gvector|chi|oracle|selftest> [--surface FILE] [--arc SPEC]
//       [--coeffs FILE] [--budget N] [--jobs N] [--compare] [--corpus NAME]
//
// FILE may be "@octagon" or "@annulus" for the bundled fixtures. Without
// --arc every arc line of the surface file is processed.
//
// Exit status: 0 success, 1 fixture or comparison mismatch, 2 malformed input
// or arguments, 3 invariant violation or exhausted search.

#include <iosfwd>
#include <string>
#include <vector>

namespace cck {

/// args excludes the program name.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cck
