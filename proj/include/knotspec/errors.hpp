#pragma once

#include <stdexcept>
#include <string>

namespace knotspec {

// Base for every rejected input. The CLI maps these to exit code 2;
// anything else escaping to main is an internal error (exit 1).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q = 0, or a fraction outside the domain of the requested operation.
struct invalid_fraction : validation_error {
    using validation_error::validation_error;
};

// Continued-fraction tower hits an intermediate value of 0 that would
// have to be inverted.
struct degenerate_tower : validation_error {
    using validation_error::validation_error;
};

// The requested family value is a link, not a knot.
struct not_a_knot : validation_error {
    using validation_error::validation_error;
};

// Meridional stabilization of a (g,0)-splitting.
struct no_arc_to_stabilize : validation_error {
    using validation_error::validation_error;
};

// A stated precondition was violated by the caller.
struct precondition_violation : validation_error {
    using validation_error::validation_error;
};

// A conjectural evaluator was invoked outside its hypothesis.
struct hypothesis_not_satisfied : validation_error {
    using validation_error::validation_error;
};

// Expansion has a coefficient with |b| < 2 (or is empty) where an
// admissible one is required.
struct not_ht_admissible : validation_error {
    using validation_error::validation_error;
};

// Braid word operations need at least 2 strands.
struct invalid_strand_count : validation_error {
    using validation_error::validation_error;
};

// Residual-word computation is defined on 2 strands only.
struct unsupported_strand_count : validation_error {
    using validation_error::validation_error;
};

// Text input (knot literal, fraction, expansion, braid word) that does
// not match the grammar; message names the offending token.
struct parse_error : validation_error {
    using validation_error::validation_error;
};

} // namespace knotspec
