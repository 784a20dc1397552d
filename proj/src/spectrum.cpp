#include "knotspec/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "knotspec/errors.hpp"

namespace knotspec {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

SpectrumEntry exact_entry(std::int64_t g, std::int64_t b, std::string tag) {
    return SpectrumEntry{g, b, EntryStatus::exact, std::move(tag)};
}

SpectrumEntry unknown_entry(std::int64_t g) {
    return SpectrumEntry{g, std::nullopt, EntryStatus::unknown, "open"};
}

SpectrumEntry conjectural_entry(std::int64_t g, std::int64_t b, std::string tag) {
    return SpectrumEntry{g, b, EntryStatus::conjectural, std::move(tag)};
}

SpectrumResult unknot_spectrum(SpectrumVariant v) {
    return SpectrumResult{v, {exact_entry(0, 0, "unknot")}};
}

SpectrumResult all_unknown(SpectrumVariant v) {
    return SpectrumResult{v, {unknown_entry(0)}};
}

std::int64_t torus_bridge_number(const TorusKnot& t) {
    return std::min(abs64(t.m), abs64(t.n));
}

// Structurally trivial values: the explicit unknot markers of each family.
// (A pretzel or Montesinos value is never classified here.)
bool is_structural_unknot(const KnotFamily& k) {
    if (const auto* t = std::get_if<TorusKnot>(&k))
        return torus_bridge_number(*t) <= 1;
    if (const auto* b = std::get_if<TwoBridgeKnot>(&k))
        return b->is_unknot();
    if (const auto* g = std::get_if<GeneralizedMontesinosKnot>(&k))
        return g->plat_width == 1; // a 2-plat closes to the unknot
    if (const auto* c = std::get_if<CableKnot>(&k))
        return abs64(c->pattern.n) <= 1 && is_structural_unknot(*c->companion);
    return false;
}

std::int64_t twist_gcd(const std::vector<std::int64_t>& twists) {
    std::int64_t g = 0;
    for (std::int64_t p : twists)
        g = std::gcd(g, p);
    return g;
}

std::int64_t grid_gcd(const GeneralizedMontesinosKnot& k) {
    std::int64_t g = 0;
    for (const auto& row : k.grid)
        for (const ReducedFraction& t : row)
            g = std::gcd(g, t.denominator);
    return g;
}

// b0 = min{|m|,|n|}; b1 = 0 (only torus knots reach 0 at genus 1); the
// primitive variant keeps one bridge at genus 1 before closing at genus 2.
SpectrumResult torus_spectrum(const TorusKnot& t, SpectrumVariant v) {
    const std::int64_t b0 = torus_bridge_number(t);
    if (b0 <= 1)
        return unknot_spectrum(v);
    if (v == SpectrumVariant::standard)
        return SpectrumResult{
            v, {exact_entry(0, b0, "torus-knot"), exact_entry(1, 0, "torus-knot")}};
    return SpectrumResult{v,
                          {exact_entry(0, b0, "torus-knot"),
                           exact_entry(1, 1, "torus-knot"),
                           exact_entry(2, 0, "torus-knot")}};
}

SpectrumResult two_bridge_spectrum(const TwoBridgeKnot& k, SpectrumVariant v) {
    if (k.is_unknot())
        return unknot_spectrum(v);
    if (is_torus_two_bridge(k)) {
        // These are exactly the T(2,q), so the torus formulas apply with
        // bridge number 2.
        if (v == SpectrumVariant::standard)
            return SpectrumResult{v,
                                  {exact_entry(0, 2, "torus-knot"),
                                   exact_entry(1, 0, "torus-knot")}};
        return SpectrumResult{v,
                              {exact_entry(0, 2, "torus-knot"),
                               exact_entry(1, 1, "torus-knot"),
                               exact_entry(2, 0, "torus-knot")}};
    }
    // Non-torus 2-bridge knots: (2, 1, 0) in both variants.
    return SpectrumResult{v,
                          {exact_entry(0, 2, "two-bridge"),
                           exact_entry(1, 1, "two-bridge"),
                           exact_entry(2, 0, "two-bridge")}};
}

SpectrumResult pretzel_spectrum(const PretzelKnot& p, SpectrumVariant v) {
    const auto n = static_cast<std::int64_t>(p.branches());
    if (n >= 3 && twist_gcd(p.twists) != 1) {
        // Stair-step spectrum. Standard: (n, n-1, ..., 3, 2, 0); primitive:
        // (n, n-1, ..., 2, 1, 0).
        std::vector<SpectrumEntry> entries;
        if (v == SpectrumVariant::primitive) {
            for (std::int64_t g = 0; g <= n; ++g)
                entries.push_back(exact_entry(g, n - g, "pretzel-stairstep"));
        } else {
            for (std::int64_t g = 0; g <= n - 2; ++g)
                entries.push_back(exact_entry(g, n - g, "pretzel-stairstep"));
            entries.push_back(exact_entry(n - 1, 0, "pretzel-stairstep"));
        }
        return SpectrumResult{v, std::move(entries)};
    }
    const bool no_integer_tangles =
        std::all_of(p.twists.begin(), p.twists.end(),
                    [](std::int64_t t) { return t >= 2 || t <= -2; });
    if (n >= 3 && no_integer_tangles) {
        // Bridge number n; later genera are open.
        return SpectrumResult{
            v, {exact_entry(0, n, "montesinos-bridge-number"), unknown_entry(1)}};
    }
    return all_unknown(v);
}

SpectrumResult generalized_montesinos_spectrum(const GeneralizedMontesinosKnot& k,
                                               SpectrumVariant v) {
    if (grid_gcd(k) == 1)
        return all_unknown(v);
    // The rank result pins the bridge number at the plat width and forces
    // the full stair-step in the primitive variant.
    const std::int64_t n = k.plat_width;
    std::vector<SpectrumEntry> entries;
    if (v == SpectrumVariant::primitive) {
        for (std::int64_t g = 0; g <= n; ++g)
            entries.push_back(exact_entry(g, n - g, "generalized-montesinos-rank"));
    } else {
        // Where the primitive entry is >= 2 the standard entry matches it;
        // at the genus where the primitive spectrum holds 1 the standard
        // value is 0 or 1 (open which), and 0 follows either way.
        for (std::int64_t g = 0; g <= n - 2; ++g)
            entries.push_back(exact_entry(g, n - g, "generalized-montesinos-rank"));
        entries.push_back(unknown_entry(n - 1));
        entries.push_back(exact_entry(n, 0, "generalized-montesinos-rank"));
    }
    return SpectrumResult{v, std::move(entries)};
}

SpectrumResult cable_spectrum(const CableKnot& c, SpectrumVariant v) {
    const KnotFamily& companion = *c.companion;
    if (is_structural_unknot(companion))
        return torus_spectrum(c.pattern, v); // the cable of the unknot is T(m,n)
    const std::int64_t m = c.pattern.m;

    // A T(2,q) companion is a 2-bridge knot; normalize it so the 2-bridge
    // cable results see it.
    const bool torus_two_bridge_companion = [&] {
        if (const auto* t = std::get_if<TorusKnot>(&companion))
            return torus_bridge_number(*t) == 2;
        if (const auto* b = std::get_if<TwoBridgeKnot>(&companion))
            return is_torus_two_bridge(*b);
        return false;
    }();

    if (torus_two_bridge_companion) {
        // Any 2-bridge companion pins the bridge number at 2m; for a torus
        // companion the rest of the spectrum is open.
        return SpectrumResult{
            v, {exact_entry(0, 2 * m, "cable-bridge-number"), unknown_entry(1)}};
    }
    if (const auto* b = std::get_if<TwoBridgeKnot>(&companion)) {
        (void)b; // non-torus, non-trivial 2-bridge companion
        if (v == SpectrumVariant::standard)
            return SpectrumResult{v,
                                  {exact_entry(0, 2 * m, "cable-two-bridge"),
                                   exact_entry(1, m, "cable-two-bridge"),
                                   exact_entry(2, 0, "cable-two-bridge")}};
        // Where the standard entry is nonzero the variants agree; the
        // genus-2 primitive entry is 0 or 1 (open which), which forces 0 at
        // genus 3 either way.
        return SpectrumResult{v,
                              {exact_entry(0, 2 * m, "cable-two-bridge"),
                               exact_entry(1, m, "cable-two-bridge"),
                               unknown_entry(2),
                               exact_entry(3, 0, "meridional-stabilization")}};
    }
    return all_unknown(v);
}

const char* status_name(EntryStatus s) {
    switch (s) {
    case EntryStatus::exact: return "exact";
    case EntryStatus::upper_bound: return "upper-bound";
    case EntryStatus::conjectural: return "conjectural";
    case EntryStatus::unknown: return "unknown";
    }
    return "unknown";
}

const char* variant_name(SpectrumVariant v) {
    return v == SpectrumVariant::standard ? "standard" : "primitive";
}

} // namespace

SpectrumResult bridge_spectrum(const KnotFamily& k, SpectrumVariant variant) {
    if (is_structural_unknot(k))
        return unknot_spectrum(variant);
    return std::visit(
        overloaded{
            [&](const TorusKnot& t) { return torus_spectrum(t, variant); },
            [&](const TwoBridgeKnot& b) { return two_bridge_spectrum(b, variant); },
            [&](const PretzelKnot& p) { return pretzel_spectrum(p, variant); },
            [&](const MontesinosKnot&) { return all_unknown(variant); },
            [&](const GeneralizedMontesinosKnot& g) {
                return generalized_montesinos_spectrum(g, variant);
            },
            [&](const CableKnot& c) { return cable_spectrum(c, variant); },
        },
        k);
}

std::vector<std::int64_t> stair_step(std::int64_t b0) {
    if (b0 < 1)
        throw precondition_violation("stair step needs a positive bridge number");
    std::vector<std::int64_t> run;
    for (std::int64_t v = b0; v >= 0; --v)
        run.push_back(v);
    return run;
}

Splitting meridional_stabilize(const Splitting& s) {
    if (s.g < 0 || s.b < 0)
        throw precondition_violation("splitting indices must be nonnegative");
    if (s.b == 0)
        throw no_arc_to_stabilize("a (g,0)-splitting has no bridge arc to tube along");
    return Splitting{s.g + 1, s.b - 1};
}

std::int64_t satellite_lower_bound(std::int64_t index, std::int64_t companion_b0) {
    if (index < 1 || companion_b0 < 1)
        throw precondition_violation("satellite bound needs positive index and bridge number");
    return index * companion_b0;
}

std::int64_t tunnel_upper_bound(const Splitting& s, bool primitive) {
    if (s.g < 0 || s.b < 0)
        throw precondition_violation("splitting indices must be nonnegative");
    if (s.b == 0 && !primitive)
        throw precondition_violation(
            "a (g,0)-splitting bounds the tunnel number only when primitive");
    return s.g + s.b - 1;
}

TunnelResult tunnel_number(const KnotFamily& k) {
    if (is_structural_unknot(k))
        return TunnelResult{0, true, "unknot"};
    if (const auto* g = std::get_if<GeneralizedMontesinosKnot>(&k)) {
        if (grid_gcd(*g) != 1)
            return TunnelResult{g->plat_width - 1, true, "generalized-montesinos-rank"};
    }
    if (const auto* p = std::get_if<PretzelKnot>(&k)) {
        if (p->branches() >= 3 && twist_gcd(p->twists) != 1)
            return TunnelResult{static_cast<std::int64_t>(p->branches()) - 1, true,
                                "generalized-montesinos-rank"};
    }
    if (const auto* m = std::get_if<MontesinosKnot>(&k)) {
        if (montesinos_tunnel_one(*m))
            return TunnelResult{1, true, "montesinos-tunnel-one"};
    }
    // Fall back to the best splitting bound the primitive spectrum offers.
    const SpectrumResult prim = bridge_spectrum(k, SpectrumVariant::primitive);
    std::optional<std::int64_t> best;
    for (const SpectrumEntry& e : prim.entries) {
        if (e.status != EntryStatus::exact || !e.value)
            continue;
        const std::int64_t bound =
            std::max<std::int64_t>(*e.value >= 1 ? e.genus + *e.value - 1 : e.genus - 1, 0);
        best = best ? std::min(*best, bound) : bound;
    }
    if (best)
        return TunnelResult{*best, false, "splitting-bound"};
    return TunnelResult{std::nullopt, false, "open"};
}

bool montesinos_tunnel_one(const MontesinosKnot& m) {
    const std::size_t r = m.tangles.size();
    if (r == 2)
        return true; // two rational tangles
    if (r != 3)
        return false;
    const ReducedFraction third = reduce(1, 3);
    const ReducedFraction two_thirds = reduce(2, 3); // -1/3 mod 1
    const auto is_pm_third = [&](const ReducedFraction& f) {
        const ReducedFraction part = mod_one(f);
        return part == third || part == two_thirds;
    };
    ReducedFraction total = from_integer(m.e);
    for (const ReducedFraction& t : m.tangles)
        total = total + t;
    for (std::size_t rot = 0; rot < 3; ++rot) {
        const ReducedFraction& a1 = m.tangles[rot];
        const ReducedFraction& a2 = m.tangles[(rot + 1) % 3];
        const ReducedFraction& a3 = m.tangles[(rot + 2) % 3];
        // Distinguished tangle of even order, other two odd.
        if (a1.denominator == 2 && a2.denominator % 2 == 1 && a3.denominator % 2 == 1)
            return true;
        // Other two congruent to +-1/3, total twisting +-1/(3*alpha1).
        if (is_pm_third(a2) && is_pm_third(a3) &&
            (total == reduce(1, 3 * a1.denominator) ||
             total == reduce(-1, 3 * a1.denominator)))
            return true;
    }
    return false;
}

std::optional<std::int64_t> pretzel_bridge_distance(const PretzelKnot& p) {
    if (p.branches() >= 4)
        return 1;
    return std::nullopt;
}

SpectrumResult conjectured_pretzel_cable_spectrum(const PretzelKnot& p,
                                                  std::int64_t m, std::int64_t n) {
    const auto j = static_cast<std::int64_t>(p.branches());
    if (j < 3 || twist_gcd(p.twists) == 1)
        throw hypothesis_not_satisfied(
            "pretzel lacks the stair-step hypothesis: need at least 3 twist "
            "regions sharing a common factor");
    if (m < 2)
        throw hypothesis_not_satisfied("cable index m must be at least 2");
    if (std::gcd(m, abs64(n)) != 1)
        throw hypothesis_not_satisfied("cable indices must be coprime");
    const std::int64_t sum = std::accumulate(p.twists.begin(), p.twists.end(),
                                             std::int64_t{0});
    std::vector<SpectrumEntry> entries;
    for (std::int64_t g = 0; g <= j - 2; ++g)
        entries.push_back(conjectural_entry(g, m * (j - g), "pretzel-cable-conjecture"));
    entries.push_back(conjectural_entry(
        j - 1, std::min(m, abs64(m * sum - n)), "pretzel-cable-conjecture"));
    entries.push_back(conjectural_entry(j, 0, "pretzel-cable-conjecture"));
    return SpectrumResult{SpectrumVariant::primitive, std::move(entries)};
}

SpectrumResult conjectured_cable_spectrum(const SpectrumResult& base,
                                          std::int64_t m, std::int64_t n) {
    (void)n; // the slot the cable indices govern stays Unknown
    if (m < 2)
        throw hypothesis_not_satisfied("cable index m must be at least 2");
    if (base.entries.empty())
        throw hypothesis_not_satisfied("base spectrum is empty");
    for (const SpectrumEntry& e : base.entries)
        if (e.status != EntryStatus::exact || !e.value)
            throw hypothesis_not_satisfied("base spectrum must be fully exact");
    if (base.entries.back().value != 0)
        throw hypothesis_not_satisfied("base spectrum must terminate at 0");
    std::vector<SpectrumEntry> entries;
    std::int64_t g = 0;
    for (const SpectrumEntry& e : base.entries) {
        if (*e.value == 0)
            break;
        entries.push_back(conjectural_entry(g, m * *e.value, "cable-spectrum-conjecture"));
        ++g;
    }
    entries.push_back(unknown_entry(g));
    entries.push_back(conjectural_entry(g + 1, 0, "cable-spectrum-conjecture"));
    return SpectrumResult{base.variant, std::move(entries)};
}

std::string to_text(const SpectrumResult& s) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i)
            out << ", ";
        const SpectrumEntry& e = s.entries[i];
        switch (e.status) {
        case EntryStatus::exact: out << *e.value; break;
        case EntryStatus::upper_bound: out << "<=" << *e.value; break;
        case EntryStatus::conjectural: out << '~' << *e.value; break;
        case EntryStatus::unknown: out << '?'; break;
        }
    }
    out << ')';
    return out.str();
}

std::string to_json_text(const SpectrumResult& s) {
    nlohmann::ordered_json doc;
    doc["variant"] = variant_name(s.variant);
    doc["entries"] = nlohmann::ordered_json::array();
    for (const SpectrumEntry& e : s.entries) {
        nlohmann::ordered_json entry;
        entry["g"] = e.genus;
        if (e.value)
            entry["b"] = *e.value;
        else
            entry["b"] = nullptr;
        entry["status"] = status_name(e.status);
        entry["provenance"] = e.provenance;
        doc["entries"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

std::string to_text(const TunnelResult& t) {
    if (!t.value)
        return "?";
    if (t.exact)
        return std::to_string(*t.value);
    return "<= " + std::to_string(*t.value);
}

std::string to_json_text(const TunnelResult& t) {
    nlohmann::ordered_json doc;
    if (t.value)
        doc["value"] = *t.value;
    else
        doc["value"] = nullptr;
    doc["exact"] = t.exact;
    doc["provenance"] = t.provenance;
    return doc.dump(2);
}

} // namespace knotspec
