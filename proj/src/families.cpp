#include "knotspec/families.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "knotspec/errors.hpp"
#include "knotspec/union_find.hpp"

namespace knotspec {

bool CableKnot::operator==(const CableKnot& o) const {
    return pattern == o.pattern && *companion == *o.companion;
}

TorusKnot make_torus(std::int64_t m, std::int64_t n) {
    if (m == 0)
        throw precondition_violation("torus knot index m must be nonzero");
    if (std::gcd(m < 0 ? -m : m, n < 0 ? -n : n) != 1)
        throw not_a_knot("T(" + std::to_string(m) + "," + std::to_string(n) +
                         ") is a link: gcd(|m|,|n|) > 1");
    return TorusKnot{m, n};
}

TwoBridgeKnot make_two_bridge(std::int64_t p, std::int64_t q) {
    if (q == 0)
        throw invalid_fraction("two-bridge denominator must be nonzero");
    if (q < 0) {
        q = -q;
        p = -p;
    }
    if (q == 1)
        return TwoBridgeKnot{ReducedFraction{0, 1}}; // unknot marker
    if (p % q == 0)
        throw invalid_fraction("two-bridge fraction " + std::to_string(p) + "/" +
                               std::to_string(q) + " is an integer");
    const ReducedFraction f = reduce(p, q);
    if (f.denominator % 2 == 0)
        throw not_a_knot("even denominator " + std::to_string(f.denominator) +
                         ": the closure is a 2-component link");
    // Normalize the numerator into (0, q): translation by full twists.
    std::int64_t num = f.numerator % f.denominator;
    if (num < 0)
        num += f.denominator;
    return TwoBridgeKnot{ReducedFraction{num, f.denominator}};
}

bool pretzel_is_knot(const std::vector<std::int64_t>& twists) {
    const std::size_t n = twists.size();
    // Corners of twist region i: 4i+0 = top-left, 4i+1 = top-right,
    // 4i+2 = bottom-left, 4i+3 = bottom-right.
    union_find uf(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (twists[i] == 0)
            throw precondition_violation("pretzel twist count must be nonzero");
        const bool odd = (twists[i] % 2) != 0;
        if (odd) {
            uf.unite(4 * i + 0, 4 * i + 3); // strands cross an odd number of times
            uf.unite(4 * i + 1, 4 * i + 2);
        } else {
            uf.unite(4 * i + 0, 4 * i + 2); // strands return to their side
            uf.unite(4 * i + 1, 4 * i + 3);
        }
        const std::size_t j = (i + 1) % n;
        uf.unite(4 * i + 1, 4 * j + 0); // top arc
        uf.unite(4 * i + 3, 4 * j + 2); // bottom arc
    }
    return uf.components() == 1;
}

PretzelKnot make_pretzel(std::vector<std::int64_t> twists) {
    if (twists.empty())
        throw precondition_violation("pretzel needs at least one twist region");
    if (!pretzel_is_knot(twists))
        throw not_a_knot("pretzel closure has more than one component");
    return PretzelKnot{std::move(twists)};
}

MontesinosKnot make_montesinos(std::vector<ReducedFraction> tangles, std::int64_t e) {
    if (tangles.empty())
        throw precondition_violation("Montesinos knot needs at least one tangle");
    for (const ReducedFraction& t : tangles)
        if (t.denominator < 1)
            throw invalid_fraction("tangle denominator must be positive");
    return MontesinosKnot{std::move(tangles), e};
}

GeneralizedMontesinosKnot
make_generalized_montesinos(std::vector<std::vector<ReducedFraction>> grid,
                            std::vector<std::string> braid_labels,
                            std::int64_t plat_width) {
    if (grid.empty() || grid.front().empty())
        throw precondition_violation("tangle grid must be nonempty");
    for (const auto& row : grid)
        if (row.size() != grid.front().size())
            throw precondition_violation("tangle grid must be rectangular");
    if (braid_labels.size() + 1 != grid.size())
        throw precondition_violation("need one braid label between consecutive grid rows");
    if (plat_width < 1)
        throw precondition_violation("plat width must be at least 1");
    return GeneralizedMontesinosKnot{std::move(grid), std::move(braid_labels), plat_width};
}

CableKnot make_cable(std::int64_t m, std::int64_t n, KnotFamily companion) {
    if (m < 2)
        throw precondition_violation("cable pattern index m must be at least 2");
    return CableKnot{make_torus(m, n),
                     std::make_shared<const KnotFamily>(std::move(companion))};
}

bool is_torus_two_bridge(const TwoBridgeKnot& k) {
    if (k.is_unknot())
        return true; // empty expansion, k = 0
    return !cf_enumerate_ht(k.fraction, 1).empty();
}

std::optional<bool> is_meridionally_small(const KnotFamily& k) {
    if (std::holds_alternative<TwoBridgeKnot>(k))
        return true;
    if (const auto* c = std::get_if<CableKnot>(&k))
        return is_meridionally_small(*c->companion) == std::optional<bool>{true}
                   ? std::optional<bool>{true}
                   : std::nullopt;
    return std::nullopt;
}

namespace {

struct printer {
    std::ostringstream out;

    void fraction(const ReducedFraction& f) {
        out << f.numerator << '/' << f.denominator;
    }

    void operator()(const TorusKnot& k) { out << "T(" << k.m << ',' << k.n << ')'; }

    void operator()(const TwoBridgeKnot& k) {
        out << "2b(";
        fraction(k.is_unknot() ? ReducedFraction{1, 1} : k.fraction);
        out << ')';
    }

    void operator()(const PretzelKnot& k) {
        out << "P(";
        for (std::size_t i = 0; i < k.twists.size(); ++i) {
            if (i)
                out << ',';
            out << k.twists[i];
        }
        out << ')';
    }

    void operator()(const MontesinosKnot& k) {
        out << "M(";
        for (std::size_t i = 0; i < k.tangles.size(); ++i) {
            if (i)
                out << ',';
            fraction(k.tangles[i]);
        }
        out << '|' << k.e << ')';
    }

    void operator()(const GeneralizedMontesinosKnot& k) {
        // Diagnostic form only: there is no literal for this family.
        out << "GM(" << k.grid.size() << 'x' << k.grid.front().size()
            << " tangles, 2n=" << 2 * k.plat_width << "-plat)";
    }

    void operator()(const CableKnot& k) {
        out << "cable(" << k.pattern.m << ',' << k.pattern.n << "; "
            << knotspec::to_string(*k.companion) << ')';
    }
};

// Recursive-descent parser over the knot-literal grammar.
class knot_parser {
  public:
    explicit knot_parser(const std::string& text) : text_(text) {}

    KnotFamily parse() {
        KnotFamily k = knot();
        skip_space();
        if (pos_ != text_.size())
            throw parse_error("trailing characters after knot literal: '" +
                              text_.substr(pos_) + "'");
        return k;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c, const char* where) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "' " + where +
                              " in knot literal");
        ++pos_;
    }

    std::int64_t integer(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            throw parse_error(std::string("expected ") + what + " in knot literal");
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            throw parse_error(std::string(what) + " out of range in knot literal");
        }
    }

    std::pair<std::int64_t, std::int64_t> raw_fraction(const char* what) {
        const std::int64_t p = integer(what);
        expect('/', "between numerator and denominator");
        const std::int64_t q = integer("denominator");
        return {p, q};
    }

    KnotFamily knot() {
        skip_space();
        if (consume("cable(")) {
            const std::int64_t m = integer("cable index m");
            expect(',', "after cable index");
            const std::int64_t n = integer("cable index n");
            expect(';', "before the companion");
            KnotFamily companion = knot();
            expect(')', "closing the cable literal");
            return make_cable(m, n, std::move(companion));
        }
        if (consume("T(")) {
            const std::int64_t m = integer("torus index m");
            expect(',', "between torus indices");
            const std::int64_t n = integer("torus index n");
            expect(')', "closing the torus literal");
            return make_torus(m, n);
        }
        if (consume("2b(")) {
            const auto [p, q] = raw_fraction("two-bridge numerator");
            expect(')', "closing the two-bridge literal");
            return make_two_bridge(p, q);
        }
        if (consume("P(")) {
            std::vector<std::int64_t> twists;
            twists.push_back(integer("twist count"));
            while (consume(","))
                twists.push_back(integer("twist count"));
            expect(')', "closing the pretzel literal");
            return make_pretzel(std::move(twists));
        }
        if (consume("M(")) {
            std::vector<ReducedFraction> tangles;
            auto [b, a] = raw_fraction("tangle numerator");
            tangles.push_back(reduce(b, a));
            while (consume(",")) {
                std::tie(b, a) = raw_fraction("tangle numerator");
                tangles.push_back(reduce(b, a));
            }
            expect('|', "before the half-twist count");
            const std::int64_t e = integer("half-twist count");
            expect(')', "closing the Montesinos literal");
            return make_montesinos(std::move(tangles), e);
        }
        throw parse_error("unrecognized knot literal near '" + text_.substr(pos_) + "'");
    }
};

} // namespace

std::string to_string(const KnotFamily& k) {
    printer p;
    std::visit(p, k);
    return p.out.str();
}

KnotFamily parse_knot(const std::string& text) {
    return knot_parser(text).parse();
}

} // namespace knotspec
