#pragma once

// Deterministic SVG renderings of the two tangle pictures: the 4-plat
// alternating-twist diagram of an expansion [a1,...,ak] and the pillowcase
// picture of a slope p/q. Identical inputs produce byte-identical output.

#include <string>
#include <variant>

#include "knotspec/continued_fraction.hpp"
#include "knotspec/rational.hpp"

namespace knotspec {

enum class DiagramKind { fourplat, pillowcase };

struct DiagramSpec {
    DiagramKind kind = DiagramKind::fourplat;
    std::variant<ContinuedFraction, ReducedFraction> payload;
    bool closed = false; // knot closure; meaningful for 4-plats only
};

// Four vertical strands; band i holds |aᵢ| crossings between the middle-left
// pair (odd bands) or middle-right pair (even bands). The open tangle keeps
// its built-in top-left and bottom-right caps; closure joins the remaining
// top pair and bottom pair with two more arcs. Crossing glyphs are <g
// class="crossing" data-sign="..."> groups so they can be counted without
// geometry. pre: k >= 1.
std::string fourplat_svg(const ContinuedFraction& cf, bool closed);

// Billiard picture on the unit square: arcs of slope p/q on the front face
// (solid, class="front") and -p/q on the back face (dashed, class="back"),
// reflecting at the boundary. Accepts 0 < p <= q; p = q = 1 degenerates to
// one diagonal per face.
std::string pillowcase_svg(const ReducedFraction& x);

// Dispatch on spec.kind; the payload alternative must match the kind.
std::string render_svg(const DiagramSpec& spec);

} // namespace knotspec
