#pragma once

// Bridge spectra and tunnel numbers for the knot families, filled in exactly
// where a classification result pins the value and left Unknown otherwise.
//
// A spectrum is reported as entries (genus, value, status, provenance). The
// entry list stops at the first exact 0; a trailing Unknown entry stands for
// "this genus and everything after it is undetermined". Provenance is a short
// machine-readable tag naming the result that justified the entry.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotspec/families.hpp"

namespace knotspec {

enum class SpectrumVariant { standard, primitive };

enum class EntryStatus { exact, upper_bound, conjectural, unknown };

struct SpectrumEntry {
    std::int64_t genus = 0;
    std::optional<std::int64_t> value; // absent iff status == unknown
    EntryStatus status = EntryStatus::unknown;
    std::string provenance = "open";

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumResult {
    SpectrumVariant variant = SpectrumVariant::standard;
    std::vector<SpectrumEntry> entries;

    friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

// A (g,b)-splitting: genus-g surface meeting the knot in b bridges per side.
struct Splitting {
    std::int64_t g = 0;
    std::int64_t b = 0;

    friend bool operator==(const Splitting&, const Splitting&) = default;
};

struct TunnelResult {
    // Exact tunnel number when exact, otherwise an upper bound; absent when
    // nothing is known.
    std::optional<std::int64_t> value;
    bool exact = false;
    std::string provenance = "open";

    friend bool operator==(const TunnelResult&, const TunnelResult&) = default;
};

// The bridge spectrum of k in the requested variant. Exact entries appear
// only where a classification result applies; everything else is Unknown.
SpectrumResult bridge_spectrum(const KnotFamily& k, SpectrumVariant variant);

// (b0, b0-1, ..., 1, 0). pre: b0 >= 1.
std::vector<std::int64_t> stair_step(std::int64_t b0);

// (g, b) -> (g+1, b-1): tube along one bridge arc. Throws
// no_arc_to_stabilize when b = 0.
Splitting meridional_stabilize(const Splitting& s);

// index * companion_b0, the genus-0 lower bound for an index-`index`
// satellite. pre: both arguments >= 1.
std::int64_t satellite_lower_bound(std::int64_t index, std::int64_t companion_b0);

// g + b - 1 from a (g,b)-splitting with b >= 1; a (g,0) splitting bounds the
// tunnel number only when the splitting is primitive (then g - 1).
std::int64_t tunnel_upper_bound(const Splitting& s, bool primitive = false);

// Exact tunnel number where a rank or tunnel-one result applies; otherwise
// the best splitting bound extracted from the primitive spectrum.
TunnelResult tunnel_number(const KnotFamily& k);

// The three sufficient conditions for tunnel number one, tested with exact
// rational arithmetic over every cyclic position of the distinguished tangle.
bool montesinos_tunnel_one(const MontesinosKnot& m);

// Distance of the standard genus-0 bridge surface: 1 for pretzels with at
// least 4 twist regions, undetermined below that.
std::optional<std::int64_t> pretzel_bridge_distance(const PretzelKnot& p);

// Conjectured primitive spectrum (m*j, m*(j-1), ..., 2m, min{m, |m*sum - n|}, 0)
// for the (m,n)-cable of a stair-step pretzel. Every entry is flagged
// Conjectural. Throws hypothesis_not_satisfied when the pretzel lacks the
// stair-step hypothesis (>= 3 twist regions with a common factor) or when
// (m,n) is not a cable pair (m >= 2, gcd(m,n) = 1).
SpectrumResult conjectured_pretzel_cable_spectrum(const PretzelKnot& p,
                                                  std::int64_t m, std::int64_t n);

// Conjectured cable spectrum from a fully exact companion spectrum:
// multiplies each nonzero entry by m, leaves one Unknown slot where the
// companion spectrum reached 0, then terminates with 0. Throws
// hypothesis_not_satisfied unless every base entry is Exact, the base
// terminates at 0, and m >= 2. The n index is carried for interface
// completeness; the conjecture leaves the slot it governs Unknown.
SpectrumResult conjectured_cable_spectrum(const SpectrumResult& base,
                                          std::int64_t m, std::int64_t n);

// "(4, 2, 0)"; "?" for Unknown, "~" prefix for Conjectural, "<=" for bounds.
std::string to_text(const SpectrumResult& s);

// {"variant": ..., "entries": [{"g", "b", "status", "provenance"}, ...]}
std::string to_json_text(const SpectrumResult& s);

// "3" when exact, "<= 2" for a bound, "?" when nothing is known.
std::string to_text(const TunnelResult& t);

std::string to_json_text(const TunnelResult& t);

} // namespace knotspec
