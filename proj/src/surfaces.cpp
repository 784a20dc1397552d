#include "knotspec/surfaces.hpp"

#include <algorithm>

#include <json.hpp>

#include "knotspec/errors.hpp"
#include "knotspec/union_find.hpp"

namespace knotspec {

namespace {

void require_admissible(const ContinuedFraction& expansion) {
    if (expansion.k() < 1)
        throw not_ht_admissible("an integer expansion carries no branched surface");
    for (std::int64_t b : expansion.coefficients)
        if (b > -2 && b < 2)
            throw not_ht_admissible("coefficient " + std::to_string(b) +
                                    " breaks the |b| >= 2 admissibility bound");
}

// States of {0..n}^{k-1} are coded most-significant-slot-first, so numeric
// order on codes equals lexicographic order on vectors.
std::vector<std::int64_t> decode(std::size_t code, std::size_t slots, std::int64_t n) {
    std::vector<std::int64_t> v(slots, 0);
    for (std::size_t i = slots; i-- > 0;) {
        v[i] = static_cast<std::int64_t>(code % static_cast<std::size_t>(n + 1));
        code /= static_cast<std::size_t>(n + 1);
    }
    return v;
}

std::size_t encode(const std::vector<std::int64_t>& v, std::int64_t n) {
    std::size_t code = 0;
    for (std::int64_t x : v)
        code = code * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(x);
    return code;
}

} // namespace

HTSurface make_ht_surface(ContinuedFraction expansion, std::int64_t sheets,
                          std::vector<std::int64_t> vector) {
    require_admissible(expansion);
    if (sheets < 1)
        throw precondition_violation("sheet count must be at least 1");
    if (vector.size() != expansion.k() - 1)
        throw precondition_violation("vector needs one slot per inner plumbing square");
    for (std::int64_t x : vector)
        if (x < 0 || x > sheets)
            throw precondition_violation("vector slots must lie in [0, sheet count]");
    return HTSurface{std::move(expansion), sheets, std::move(vector)};
}

std::int64_t euler_characteristic(const HTSurface& s) {
    return -s.sheets * (static_cast<std::int64_t>(s.expansion.k()) - 1);
}

bool is_carried_incompressible(const ContinuedFraction& expansion) {
    if (expansion.k() < 1)
        throw precondition_violation("expansion must have at least one coefficient");
    return std::all_of(expansion.coefficients.begin(), expansion.coefficients.end(),
                       [](std::int64_t b) { return b >= 2 || b <= -2; });
}

IsotopyClasses isotopy_classes(const ContinuedFraction& expansion, std::int64_t n) {
    require_admissible(expansion);
    if (n < 1)
        throw precondition_violation("sheet count must be at least 1");
    const std::size_t k = expansion.k();
    const std::size_t slots = k - 1;

    constexpr std::size_t state_cap = std::size_t{1} << 22;
    std::size_t states = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        const auto radix = static_cast<std::size_t>(n) + 1;
        if (states > state_cap / radix)
            throw precondition_violation("vector space too large to enumerate");
        states *= radix;
    }

    union_find uf(states);
    for (std::size_t code = 0; code < states; ++code) {
        std::vector<std::int64_t> v = decode(code, slots, n);
        // One generating move per +-2 coefficient; index i is 1-based.
        for (std::size_t i = 1; i <= k; ++i) {
            if (expansion.coefficients[i - 1] != 2 && expansion.coefficients[i - 1] != -2)
                continue;
            std::vector<std::int64_t> image = v;
            bool defined = true;
            // The move raises slots i-1 and i; only one of them exists at the
            // two ends of the row.
            for (std::size_t slot : {i - 1, i}) {
                if (slot < 1 || slot > slots)
                    continue;
                if (++image[slot - 1] > n)
                    defined = false;
            }
            if (defined)
                uf.unite(code, encode(image, n));
        }
    }

    // Lex-least member of each class = numerically least code per root.
    std::vector<std::size_t> least(states, states);
    for (std::size_t code = 0; code < states; ++code) {
        const std::size_t root = uf.find(code);
        if (least[root] == states)
            least[root] = code; // codes ascend, first hit is least
    }
    IsotopyClasses out{expansion, n, {}};
    for (std::size_t code = 0; code < states; ++code)
        if (least[code] != states)
            out.representatives.push_back(decode(least[code], slots, n));
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

std::vector<std::int64_t> canonical_vector(const HTSurface& s) {
    require_admissible(s.expansion);
    // Breadth-first closure of s.vector under the moves and their inverses
    // (the relation is symmetric), tracking the least vector reached.
    const std::size_t k = s.expansion.k();
    const std::int64_t n = s.sheets;
    std::vector<std::vector<std::int64_t>> frontier{s.vector};
    std::vector<std::vector<std::int64_t>> seen{s.vector};
    std::vector<std::int64_t> best = s.vector;
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& v : frontier) {
            for (std::size_t i = 1; i <= k; ++i) {
                if (s.expansion.coefficients[i - 1] != 2 &&
                    s.expansion.coefficients[i - 1] != -2)
                    continue;
                for (const int dir : {+1, -1}) {
                    std::vector<std::int64_t> image = v;
                    bool defined = true;
                    for (const std::size_t slot : {i - 1, i}) {
                        if (slot < 1 || slot > k - 1)
                            continue;
                        image[slot - 1] += dir;
                        if (image[slot - 1] < 0 || image[slot - 1] > n)
                            defined = false;
                    }
                    if (!defined)
                        continue;
                    if (!std::binary_search(seen.begin(), seen.end(), image)) {
                        seen.insert(std::lower_bound(seen.begin(), seen.end(), image),
                                    image);
                        best = std::min(best, image);
                        next.push_back(std::move(image));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

bool surfaces_isotopic(const HTSurface& a, const HTSurface& b) {
    if (a.expansion != b.expansion || a.sheets != b.sheets)
        return false;
    return canonical_vector(a) == canonical_vector(b);
}

std::string to_json_text(const IsotopyClasses& c) {
    nlohmann::ordered_json doc;
    doc["expansion"] = to_string(c.expansion);
    doc["n"] = c.sheets;
    doc["class_count"] = c.class_count();
    doc["representatives"] = nlohmann::ordered_json::array();
    for (const auto& rep : c.representatives)
        doc["representatives"].push_back(rep);
    return doc.dump(2);
}

} // namespace knotspec
