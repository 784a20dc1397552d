#pragma once

// Parameterized knot families: value types, validating constructors, text
// forms, and classification predicates.
//
// Text grammar (also the CLI's knot-literal grammar):
//   T(m,n)  2b(p/q)  P(p1,...,pn)  M(b1/a1,...,br/ar|e)  cable(m,n; <knot>)

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotspec/continued_fraction.hpp"
#include "knotspec/rational.hpp"

namespace knotspec {

// T(m,n): closed curve on the torus meeting the meridian m times and the
// longitude n times. Invariants: |m| >= 1, gcd(|m|,|n|) = 1.
struct TorusKnot {
    std::int64_t m = 1;
    std::int64_t n = 0;

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

// K_{p/q} with 0 < p < q, q odd; q = 1 (stored as 0/1) is the unknot.
struct TwoBridgeKnot {
    ReducedFraction fraction{0, 1};

    bool is_unknot() const { return fraction.denominator == 1; }

    friend bool operator==(const TwoBridgeKnot&, const TwoBridgeKnot&) = default;
};

// P(p_1,...,p_n): a row of vertical twist regions, region i joined to
// region i+1 cyclically by top and bottom arcs. Invariants: n >= 1, every
// p_i != 0, and the closure has one component (certified at construction).
struct PretzelKnot {
    std::vector<std::int64_t> twists;

    std::size_t branches() const { return twists.size(); }

    friend bool operator==(const PretzelKnot&, const PretzelKnot&) = default;
};

// M(b_1/a_1,...,b_r/a_r | e): r rational tangles closed with e half-twists.
// Invariant: every alpha_i >= 1.
struct MontesinosKnot {
    std::vector<ReducedFraction> tangles; // beta_i / alpha_i
    std::int64_t e = 0;

    std::size_t branch_count() const { return tangles.size(); }

    friend bool operator==(const MontesinosKnot&, const MontesinosKnot&) = default;
};

// Grid of rational tangles (beta_{i,j}, alpha_{i,j}) interleaved with
// doubled braids B_1..B_{l-1}, closed as a 2n-plat. The braids are opaque
// labels: every implemented result depends only on the alpha grid and n.
struct GeneralizedMontesinosKnot {
    std::vector<std::vector<ReducedFraction>> grid; // l rows of m tangles
    std::vector<std::string> braid_labels;          // l-1 entries
    std::int64_t plat_width = 2;                    // the n of "2n-plat"

    friend bool operator==(const GeneralizedMontesinosKnot&,
                           const GeneralizedMontesinosKnot&) = default;
};

struct CableKnot;

using KnotFamily = std::variant<TorusKnot, TwoBridgeKnot, PretzelKnot,
                                MontesinosKnot, GeneralizedMontesinosKnot,
                                CableKnot>;

// cable(T_{m,n}, K0): satellite with pattern T(m,n) in the solid torus,
// glued along K0 by the preferred framing. Invariant: pattern.m >= 2.
struct CableKnot {
    TorusKnot pattern;
    std::shared_ptr<const KnotFamily> companion; // never null

    bool operator==(const CableKnot& o) const;
};

// Validating constructors. All throw validation_error subtypes on rejection.

// |m| >= 1 and gcd(|m|,|n|) = 1; otherwise not_a_knot / invalid argument.
TorusKnot make_torus(std::int64_t m, std::int64_t n);

// Reduces, rejects even denominators (not_a_knot: 2-component link) and
// p = 0 mod q with q > 1 (invalid_fraction), normalizes p into (0, q) by
// adding multiples of q; q = 1 yields the unknot marker. Idempotent on its
// own output.
TwoBridgeKnot make_two_bridge(std::int64_t p, std::int64_t q);

// Requires n >= 1, all p_i != 0, and a one-component closure (not_a_knot).
PretzelKnot make_pretzel(std::vector<std::int64_t> twists);

// Requires r >= 1 tangles, each with alpha >= 1 (denominator of the
// reduced fraction; invalid_fraction otherwise).
MontesinosKnot make_montesinos(std::vector<ReducedFraction> tangles, std::int64_t e);

// Requires a rectangular nonempty grid, braid label count = rows - 1, and
// plat_width >= 1.
GeneralizedMontesinosKnot
make_generalized_montesinos(std::vector<std::vector<ReducedFraction>> grid,
                            std::vector<std::string> braid_labels,
                            std::int64_t plat_width);

// Pattern index m >= 2 (a genuine cable), pattern a valid torus knot.
CableKnot make_cable(std::int64_t m, std::int64_t n, KnotFamily companion);

// True iff the pretzel closure has one component: all p_i odd with n odd,
// or exactly one p_i even. Counted by union-find over the region corners.
// pre: all p_i != 0.
bool pretzel_is_knot(const std::vector<std::int64_t>& twists);

// True iff some expansion of p/q with all |b_i| >= 2 has k <= 1 (the
// unknot's empty expansion makes it degenerate-true). These are exactly
// the T(2,q) two-bridge knots.
bool is_torus_two_bridge(const TwoBridgeKnot& k);

// true for two-bridge knots and for cables of meridionally small
// companions; nullopt (unknown) otherwise. Never returns false.
std::optional<bool> is_meridionally_small(const KnotFamily& k);

// Text forms per the grammar above.
std::string to_string(const KnotFamily& k);

// Parses a knot literal. Throws parse_error naming the offending token.
KnotFamily parse_knot(const std::string& text);

} // namespace knotspec
