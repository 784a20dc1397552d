#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "knotspec/errors.hpp"
#include "knotspec/families.hpp"

using namespace knotspec;

namespace {

// Independent component counter: walk the closed curve through the twist
// boxes instead of uniting region corners. Top ports are numbered 2i (left)
// and 2i+1 (right) for region i; a box is the identity on its two strands
// for an even twist count and a transposition for an odd one; top and
// bottom arcs both join port 2i+1 to port 2i+2 (mod 2n). One full cycle of
// (across top) o (up) o (across bottom) o (down) is the first-return map on
// "heading down at a top port" states; each component contributes one orbit
// per traversal direction, so components = orbits / 2.
std::size_t traced_components(const std::vector<std::int64_t>& twists) {
    const std::size_t n = twists.size();
    const std::size_t ports = 2 * n;
    auto box = [&](std::size_t port) {
        const std::size_t region = port / 2;
        const bool odd = twists[region] % 2 != 0;
        return odd ? (port ^ 1u) : port;
    };
    auto across = [&](std::size_t port) {
        return port % 2 == 1 ? (port + 1) % ports : (port + ports - 1) % ports;
    };
    std::vector<bool> seen(ports, false);
    std::size_t orbits = 0;
    for (std::size_t start = 0; start < ports; ++start) {
        if (seen[start])
            continue;
        ++orbits;
        std::size_t port = start;
        do {
            seen[port] = true;
            port = across(box(across(box(port))));
        } while (port != start);
    }
    return orbits / 2;
}

void enumerate_twists(std::size_t n, std::int64_t bound,
                      std::vector<std::int64_t>& current,
                      const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (current.size() == n) {
        fn(current);
        return;
    }
    for (std::int64_t p = -bound; p <= bound; ++p) {
        if (p == 0)
            continue;
        current.push_back(p);
        enumerate_twists(n, bound, current, fn);
        current.pop_back();
    }
}

} // namespace

TEST_CASE("make_two_bridge reduces, normalizes, and rejects links") {
    CHECK(make_two_bridge(3, 5).fraction == ReducedFraction{3, 5});
    CHECK(make_two_bridge(7, 5).fraction == ReducedFraction{2, 5});
    CHECK_THROWS_AS(make_two_bridge(1, 2), not_a_knot);
    CHECK(make_two_bridge(6, 10).fraction == ReducedFraction{3, 5});
    CHECK(make_two_bridge(-2, 5).fraction == ReducedFraction{3, 5});
    CHECK(make_two_bridge(3, -5).fraction == ReducedFraction{2, 5});
    CHECK(make_two_bridge(8, 5).fraction == ReducedFraction{3, 5});
    CHECK(make_two_bridge(0, 1).is_unknot());
    CHECK(make_two_bridge(4, 1).is_unknot());
    CHECK_THROWS_AS(make_two_bridge(0, 7), invalid_fraction);
    CHECK_THROWS_AS(make_two_bridge(14, 7), invalid_fraction);
    CHECK_THROWS_AS(make_two_bridge(3, 0), invalid_fraction);
    CHECK_THROWS_AS(make_two_bridge(5, 10), not_a_knot);
}

TEST_CASE("make_two_bridge is idempotent on its own output") {
    for (std::int64_t q = 1; q <= 25; q += 2) {
        for (std::int64_t p = -2 * q; p <= 2 * q; ++p) {
            TwoBridgeKnot k;
            try {
                k = make_two_bridge(p, q);
            } catch (const validation_error&) {
                continue;
            }
            const TwoBridgeKnot again =
                make_two_bridge(k.fraction.numerator, k.fraction.denominator);
            REQUIRE(again == k);
            if (!k.is_unknot()) {
                REQUIRE(k.fraction.numerator > 0);
                REQUIRE(k.fraction.numerator < k.fraction.denominator);
                REQUIRE(k.fraction.denominator % 2 == 1);
            }
        }
    }
}

TEST_CASE("make_torus accepts exactly the coprime pairs") {
    CHECK(make_torus(3, 5) == TorusKnot{3, 5});
    CHECK(make_torus(-2, 3) == TorusKnot{-2, 3});
    CHECK(make_torus(1, 0) == TorusKnot{1, 0});
    CHECK(make_torus(2, -7) == TorusKnot{2, -7});
    CHECK_THROWS_AS(make_torus(2, 4), not_a_knot);
    CHECK_THROWS_AS(make_torus(0, 5), precondition_violation);
    CHECK_THROWS_AS(make_torus(6, 9), not_a_knot);
}

TEST_CASE("pretzel_is_knot matches the documented cases") {
    CHECK(pretzel_is_knot({3, 5, 2}));
    CHECK(pretzel_is_knot({3, 5, 7}));
    CHECK(!pretzel_is_knot({2, 4, 6}));
    CHECK(pretzel_is_knot({6, -9, -9, 9}));
    CHECK_THROWS_AS(pretzel_is_knot({3, 0, 5}), precondition_violation);
}

TEST_CASE("pretzel_is_knot agrees with the strand-tracing oracle") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::int64_t bound = n <= 4 ? 6 : 3;
        std::vector<std::int64_t> current;
        enumerate_twists(n, bound, current, [&](const std::vector<std::int64_t>& t) {
            const bool knot = pretzel_is_knot(t);
            REQUIRE(knot == (traced_components(t) == 1));
            // Closed form: single component iff all odd with n odd, or
            // exactly one even entry.
            const std::size_t evens = static_cast<std::size_t>(
                std::count_if(t.begin(), t.end(),
                              [](std::int64_t p) { return p % 2 == 0; }));
            const bool closed_form =
                (evens == 0 && t.size() % 2 == 1) || evens == 1;
            REQUIRE(knot == closed_form);
        });
    }
}

TEST_CASE("make_pretzel validates twist regions and the closure") {
    CHECK(make_pretzel({6, -9, -9, 9}).branches() == 4);
    CHECK_THROWS_AS(make_pretzel({}), precondition_violation);
    CHECK_THROWS_AS(make_pretzel({3, 0, 5}), precondition_violation);
    CHECK_THROWS_AS(make_pretzel({2, 4, 6}), not_a_knot);
    CHECK_THROWS_AS(make_pretzel({3, 5}), not_a_knot);
}

TEST_CASE("is_torus_two_bridge recognizes exactly the short expansions") {
    CHECK(is_torus_two_bridge(make_two_bridge(1, 3)));
    CHECK(!is_torus_two_bridge(make_two_bridge(3, 5)));
    CHECK(is_torus_two_bridge(make_two_bridge(0, 1)));
    for (std::int64_t q = 3; q <= 19; q += 2)
        CHECK(is_torus_two_bridge(make_two_bridge(1, q)));
    CHECK(!is_torus_two_bridge(make_two_bridge(2, 5)));
    // p congruent to +-1 mod q marks the (2,q) torus knots and their mirrors:
    // 2/3 = 1+[-3] and 4/5 = 1+[-5] both reach depth 1.
    CHECK(is_torus_two_bridge(make_two_bridge(2, 3)));
    CHECK(is_torus_two_bridge(make_two_bridge(4, 5)));
    for (std::int64_t q = 5; q <= 19; q += 2)
        CHECK(is_torus_two_bridge(make_two_bridge(q - 1, q)));
    CHECK(!is_torus_two_bridge(make_two_bridge(3, 7)));
    CHECK(!is_torus_two_bridge(make_two_bridge(5, 9)));
}

TEST_CASE("is_meridionally_small knows two-bridge knots and their cables") {
    CHECK(is_meridionally_small(make_two_bridge(3, 5)) ==
          std::optional<bool>{true});
    CHECK(is_meridionally_small(make_cable(2, 3, make_two_bridge(3, 5))) ==
          std::optional<bool>{true});
    CHECK(is_meridionally_small(
              make_cable(2, 3, make_cable(2, 5, make_two_bridge(3, 7)))) ==
          std::optional<bool>{true});
    CHECK(!is_meridionally_small(make_pretzel({3, 5, 7})).has_value());
    CHECK(!is_meridionally_small(make_torus(3, 5)).has_value());
    CHECK(!is_meridionally_small(make_cable(2, 3, make_pretzel({3, 5, 7})))
               .has_value());
}

TEST_CASE("make_montesinos validates tangles") {
    const MontesinosKnot m =
        make_montesinos({reduce(1, 3), reduce(2, 5)}, 0);
    CHECK(m.branch_count() == 2);
    CHECK(m.e == 0);
    CHECK_THROWS_AS(make_montesinos({}, 0), precondition_violation);
}

TEST_CASE("make_generalized_montesinos validates the grid shape") {
    const GeneralizedMontesinosKnot g = make_generalized_montesinos(
        {{reduce(1, 3), reduce(1, 3)}, {reduce(2, 3), reduce(1, 3)}}, {"B1"}, 3);
    CHECK(g.grid.size() == 2);
    CHECK(g.plat_width == 3);
    CHECK_THROWS_AS(make_generalized_montesinos({}, {}, 2), precondition_violation);
    CHECK_THROWS_AS(make_generalized_montesinos(
                        {{reduce(1, 3)}, {reduce(1, 3), reduce(1, 3)}}, {"B1"}, 2),
                    precondition_violation);
    CHECK_THROWS_AS(make_generalized_montesinos({{reduce(1, 3)}}, {"B1"}, 2),
                    precondition_violation);
    CHECK_THROWS_AS(make_generalized_montesinos({{reduce(1, 3)}}, {}, 0),
                    precondition_violation);
}

TEST_CASE("make_cable validates the pattern and compares deeply") {
    const CableKnot c = make_cable(2, 3, make_two_bridge(3, 5));
    CHECK(c.pattern == TorusKnot{2, 3});
    CHECK(c == make_cable(2, 3, make_two_bridge(3, 5)));
    CHECK(!(c == make_cable(2, 3, make_two_bridge(2, 5))));
    CHECK_THROWS_AS(make_cable(1, 3, make_two_bridge(3, 5)), precondition_violation);
    CHECK_THROWS_AS(make_cable(2, 4, make_two_bridge(3, 5)), not_a_knot);
}

TEST_CASE("knot literals print and reparse losslessly") {
    const std::vector<std::string> literals = {
        "T(3,5)",
        "2b(3/5)",
        "2b(1/1)",
        "P(6,-9,-9,9)",
        "M(1/3,2/5|0)",
        "M(1/4,1/3,1/3|-1)",
        "cable(2,3; 2b(3/5))",
        "cable(2,3; cable(2,5; 2b(3/7)))",
        "cable(2,-7; P(6,-9,-9,9))",
    };
    for (const std::string& text : literals) {
        const KnotFamily k = parse_knot(text);
        CHECK(to_string(k) == text);
        CHECK(parse_knot(to_string(k)) == k);
    }
}

TEST_CASE("parse_knot diagnoses the offending token") {
    CHECK_THROWS_WITH_AS(parse_knot("Q(3)"),
                         doctest::Contains("Q(3)"), parse_error);
    CHECK_THROWS_AS(parse_knot("T(3,5"), parse_error);
    CHECK_THROWS_AS(parse_knot("T(3,5)x"), parse_error);
    CHECK_THROWS_AS(parse_knot("2b(3|5)"), parse_error);
    CHECK_THROWS_AS(parse_knot("P()"), parse_error);
    CHECK_THROWS_AS(parse_knot("M(1/3,2/5)"), parse_error);
    CHECK_THROWS_AS(parse_knot(""), parse_error);
    // Validation failures surface through the same literal path.
    CHECK_THROWS_AS(parse_knot("2b(1/2)"), not_a_knot);
    CHECK_THROWS_AS(parse_knot("T(2,4)"), not_a_knot);
}
