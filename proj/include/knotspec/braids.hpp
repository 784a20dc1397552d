#pragma once

// Braid words as free-group words over the generators s1..s(m-1): torus
// words, cable framing corrections, free reduction, and the 2-strand
// residual word whose exponent sum feeds the cable-spectrum conjecture.
// Words are reduced in the free group only; braid relations are never
// applied.

#include <cstdint>
#include <string>
#include <vector>

#include "knotspec/families.hpp"

namespace knotspec {

struct BraidLetter {
    std::int64_t index = 1; // generator subscript, in [1, strands-1]
    std::int64_t sign = 1;  // +1 for s_i, -1 for its inverse

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    std::int64_t strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Validates strand count >= 1, indices in [1, strands-1], signs in {-1,+1}.
BraidWord make_braid_word(std::int64_t strands, std::vector<BraidLetter> letters);

// (s1^-1 s2^-1 ... s(m-1)^-1)^n; a negative n repeats the inverse block
// (reversed order, flipped signs). Throws invalid_strand_count when m < 2.
BraidWord torus_braid_word(std::int64_t m, std::int64_t n);

// (s(m-1) ... s2 s1)^(p_sum * m), the framing correction contributed by
// p_sum accumulated half-twists; negative powers use the inverse block.
// Throws invalid_strand_count when m < 2.
BraidWord pretzel_cable_correction(std::int64_t m, std::int64_t p_sum);

// a followed by b, on max(strands) strands.
BraidWord concatenate(const BraidWord& a, const BraidWord& b);

// Deletes adjacent mutually-inverse pairs until none remain; the result is
// the unique free reduction.
BraidWord free_reduce(const BraidWord& w);

// Sum of letter signs (the abelianization image).
std::int64_t exponent_sum(const BraidWord& w);

// free_reduce(pretzel_cable_correction(2, sum of twists) * torus_braid_word(2, n)):
// on two strands the free reduction is a normal form, with exponent sum
// 2*(sum of twists) - n. Throws unsupported_strand_count when m != 2.
BraidWord residual_two_strand_word(const PretzelKnot& p, std::int64_t m,
                                   std::int64_t n);

// "s1^-6 s1^7" with run-length exponents; the empty word prints as "".
std::string to_string(const BraidWord& w);

// Parses the text form; bare "s1" means "s1^1". Throws parse_error.
BraidWord parse_braid_word(const std::string& text);

} // namespace knotspec
