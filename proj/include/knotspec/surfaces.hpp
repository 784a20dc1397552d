#pragma once

// Surfaces carried by the branched surface of an admissible expansion
// [b1,...,bk] (all |bi| >= 2): Euler characteristic, incompressibility
// admissibility, and isotopy classification of the n-sheeted surfaces
// S_n(n1,...,n_{k-1}).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotspec/continued_fraction.hpp"

namespace knotspec {

// An n-sheeted carried surface: nᵢ sheets pass through the i-th inner
// plumbing square, 0 <= nᵢ <= n, one slot per square (k-1 of them).
struct HTSurface {
    ContinuedFraction expansion; // all |bᵢ| >= 2, k >= 1
    std::int64_t sheets = 1;     // n >= 1
    std::vector<std::int64_t> vector;

    friend bool operator==(const HTSurface&, const HTSurface&) = default;
};

// Validates admissibility (not_ht_admissible), sheet count >= 1 and the
// vector bounds (precondition_violation).
HTSurface make_ht_surface(ContinuedFraction expansion, std::int64_t sheets,
                          std::vector<std::int64_t> vector);

// -n(k-1): independent of the vector.
std::int64_t euler_characteristic(const HTSurface& s);

// True iff every |bᵢ| >= 2. pre: k >= 1.
bool is_carried_incompressible(const ContinuedFraction& expansion);

struct IsotopyClasses {
    ContinuedFraction expansion;
    std::int64_t sheets = 1;
    // Lexicographically least vector of each class, in lexicographic order.
    std::vector<std::vector<std::int64_t>> representatives;

    std::size_t class_count() const { return representatives.size(); }

    friend bool operator==(const IsotopyClasses&, const IsotopyClasses&) = default;
};

// Partition of {0..n}^{k-1} under the closure of the generating moves: for
// each index i with bᵢ = +-2, add 1 simultaneously to vector slots i-1 and i
// (only slot 1 when i = 1, only slot k-1 when i = k), defined only when the
// result stays within [0, n]. Throws not_ht_admissible on an inadmissible
// expansion.
IsotopyClasses isotopy_classes(const ContinuedFraction& expansion, std::int64_t n);

// The lexicographically least vector isotopic to s's vector.
std::vector<std::int64_t> canonical_vector(const HTSurface& s);

// Same expansion, same sheet count, same canonical vector. Surfaces carried
// by distinct admissible expansions are never isotopic.
bool surfaces_isotopic(const HTSurface& a, const HTSurface& b);

// {"expansion": "...", "n": ..., "class_count": ..., "representatives": [...]}
std::string to_json_text(const IsotopyClasses& c);

} // namespace knotspec
