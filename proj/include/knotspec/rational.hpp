#pragma once

// Exact rational arithmetic on int64. Values stay desk-scale (denominators
// from knot descriptions, |q| <= 50 in practice), so no big-integer backend.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "knotspec/errors.hpp"

namespace knotspec {

// Lowest-terms fraction. Invariants: denominator >= 1,
// gcd(|numerator|, denominator) = 1, zero is 0/1.
struct ReducedFraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
};

// Unique lowest-terms representative with positive denominator.
inline ReducedFraction reduce(std::int64_t p, std::int64_t q) {
    if (q == 0)
        throw invalid_fraction("fraction with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p == 0)
        return {0, 1};
    return {p, q};
}

inline ReducedFraction operator+(const ReducedFraction& a, const ReducedFraction& b) {
    return reduce(a.numerator * b.denominator + b.numerator * a.denominator,
                  a.denominator * b.denominator);
}

inline ReducedFraction operator-(const ReducedFraction& a) {
    return {-a.numerator, a.denominator};
}

inline ReducedFraction operator-(const ReducedFraction& a, const ReducedFraction& b) {
    return a + (-b);
}

inline ReducedFraction operator*(const ReducedFraction& a, const ReducedFraction& b) {
    return reduce(a.numerator * b.numerator, a.denominator * b.denominator);
}

inline ReducedFraction operator/(const ReducedFraction& a, const ReducedFraction& b) {
    if (b.numerator == 0)
        throw invalid_fraction("division by zero fraction");
    return reduce(a.numerator * b.denominator, a.denominator * b.numerator);
}

inline std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
}

inline ReducedFraction reciprocal(const ReducedFraction& a) {
    if (a.numerator == 0)
        throw invalid_fraction("reciprocal of zero");
    return reduce(a.denominator, a.numerator);
}

inline bool is_integer(const ReducedFraction& a) { return a.denominator == 1; }

inline ReducedFraction abs(const ReducedFraction& a) {
    return a.numerator < 0 ? -a : a;
}

// Largest integer <= a.
inline std::int64_t floor_div(const ReducedFraction& a) {
    std::int64_t q = a.numerator / a.denominator;
    if (a.numerator % a.denominator != 0 && a.numerator < 0)
        --q;
    return q;
}

// Smallest integer >= a.
inline std::int64_t ceil_div(const ReducedFraction& a) {
    std::int64_t q = a.numerator / a.denominator;
    if (a.numerator % a.denominator != 0 && a.numerator > 0)
        ++q;
    return q;
}

inline ReducedFraction from_integer(std::int64_t n) { return {n, 1}; }

// Fractional part in [0, 1): a - floor(a). Used for congruence mod 1.
inline ReducedFraction mod_one(const ReducedFraction& a) {
    return a - from_integer(floor_div(a));
}

// Text form "p/q"; integers print without the "/q" part.
std::string to_string(const ReducedFraction& a);

// Parses "p/q" or "p". Throws parse_error naming the offending token.
ReducedFraction parse_fraction(const std::string& text);

inline std::ostream& operator<<(std::ostream& os, const ReducedFraction& a) {
    return os << to_string(a);
}

} // namespace knotspec
