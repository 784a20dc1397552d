#pragma once

// Continued-fraction calculus for towers of the form
//
//                          1
//     r + ---------------------
//                        1
//         b_1 - ----------------
//               b_2 - ... - 1/b_k
//
// evaluated exactly, together with the canonical (uniform-sign, odd-k)
// decomposition and enumeration of all expansions with every |b_i| >= 2.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "knotspec/rational.hpp"

namespace knotspec {

// Integer part r plus coefficients [b_1,...,b_k]. Invariants: every
// b_i != 0; k = 0 encodes the integer value r.
struct ContinuedFraction {
    std::int64_t integer_part = 0;
    std::vector<std::int64_t> coefficients;

    std::size_t k() const { return coefficients.size(); }

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
    friend auto operator<=>(const ContinuedFraction&, const ContinuedFraction&) = default;
};

// Exact value of the tower, folded from the innermost term:
// t_k = b_k, t_i = b_i - 1/t_{i+1}, value = r + 1/t_1.
// Throws degenerate_tower if any t_i = 0 (every t_i gets inverted).
ReducedFraction cf_eval(const ContinuedFraction& cf);

// The unique expansion whose coefficients all share one sign with k odd
// (b_i = +-1 permitted). Integers yield k = 0. Round-trips through cf_eval.
ContinuedFraction cf_canonical(const ReducedFraction& x);

// All expansions of x with every |b_i| >= 2 and k <= depth_limit, sorted,
// duplicate-free. Integers yield exactly the empty expansion.
// pre: depth_limit >= 1.
std::vector<ContinuedFraction> cf_enumerate_ht(const ReducedFraction& x,
                                               std::int64_t depth_limit);

// Text form "r+[b1,b2,...,bk]"; k = 0 prints "r+[]".
std::string to_string(const ContinuedFraction& cf);

// Parses "r+[b1,...,bk]", "[b1,...,bk]" (r = 0), or a bare comma list.
ContinuedFraction parse_continued_fraction(const std::string& text);

inline std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
    return os << to_string(cf);
}

} // namespace knotspec
