#pragma once

// Command-line driver. run_cli executes one invocation (args excludes the
// program name) against the given streams and returns the process exit
// code: 0 on success, 2 when the input was rejected (bad flags, bad
// literals, violated preconditions), 1 on an internal error.
//
// Subcommands:
//   cfrac <p/q> [--canonical | --ht [--depth D]]
//   spectrum <knot> [--primitive] [--conjectural]
//   tunnel <knot>
//   surfaces <p/q> --expansion <[b..]> --sheets N (--euler | --classes)
//   braid (--torus m n | --correction m p | --residual <pretzel> n | --reduce <word>)
//   render (--fourplat <[b..]> [--closed] | --pillowcase p/q) --out FILE
//
// Every subcommand accepts --json. KNOTSPEC_COLOR=0 disables ANSI styling
// of diagnostics; unset, styling follows whether stderr is a terminal.

#include <ostream>
#include <string>
#include <vector>

namespace knotspec {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace knotspec
