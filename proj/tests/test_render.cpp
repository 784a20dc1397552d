#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "knotspec/errors.hpp"
#include "knotspec/rational.hpp"
#include "knotspec/render.hpp"

using namespace knotspec;

namespace {

ContinuedFraction cf(std::int64_t r, std::vector<std::int64_t> coeffs) {
    return ContinuedFraction{r, std::move(coeffs)};
}

std::size_t count_occurrences(const std::string& svg, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = svg.find(needle); pos != std::string::npos;
         pos = svg.find(needle, pos + needle.size()))
        ++count;
    return count;
}

double attr(const std::string& element, const std::string& name) {
    const std::string key = name + "=\"";
    const std::size_t start = element.find(key);
    REQUIRE(start != std::string::npos);
    return std::stod(element.substr(start + key.size()));
}

// Every <line> element of the given class, one per entry.
std::vector<std::string> lines_of_class(const std::string& svg,
                                        const std::string& cls) {
    std::vector<std::string> out;
    std::istringstream stream(svg);
    std::string element;
    const std::string marker = "class=\"" + cls + "\"";
    while (std::getline(stream, element))
        if (element.find("<line") != std::string::npos &&
            element.find(marker) != std::string::npos)
            out.push_back(element);
    return out;
}

} // namespace

TEST_CASE("fourplat crossing glyphs count the twists") {
    const std::string svg = fourplat_svg(cf(0, {2, 3}), false);
    CHECK(count_occurrences(svg, "class=\"crossing\"") == 5);
    CHECK(count_occurrences(svg, "data-sign=\"1\"") == 5);

    const std::string mixed = fourplat_svg(cf(0, {2, -3, 4}), false);
    CHECK(count_occurrences(mixed, "class=\"crossing\"") == 9);
    CHECK(count_occurrences(mixed, "data-sign=\"1\"") == 6);
    CHECK(count_occurrences(mixed, "data-sign=\"-1\"") == 3);

    // A single band draws q crossings and two vertical strands per row.
    const std::string single = fourplat_svg(cf(0, {3}), false);
    CHECK(count_occurrences(single, "class=\"crossing\"") == 3);
    CHECK(lines_of_class(single, "strand").size() == 6);
}

TEST_CASE("fourplat caps and closure arcs") {
    const std::string open_svg = fourplat_svg(cf(0, {2, 3}), false);
    CHECK(count_occurrences(open_svg, "class=\"cap\"") == 2);
    CHECK(count_occurrences(open_svg, "class=\"closure\"") == 0);

    const std::string closed_svg = fourplat_svg(cf(0, {2, 3}), true);
    CHECK(count_occurrences(closed_svg, "class=\"cap\"") == 2);
    CHECK(count_occurrences(closed_svg, "class=\"closure\"") == 2);
}

TEST_CASE("fourplat output is byte-deterministic") {
    CHECK(fourplat_svg(cf(0, {2, -3, 4}), true) ==
          fourplat_svg(cf(0, {2, -3, 4}), true));
    CHECK_THROWS_AS(fourplat_svg(cf(0, {}), false), precondition_violation);
}

TEST_CASE("pillowcase arcs carry the slope on both faces") {
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {1, 2}, {2, 3}, {3, 5}, {5, 7}, {1, 1}}) {
        const std::string svg = pillowcase_svg(reduce(p, q));
        const auto front = lines_of_class(svg, "front");
        const auto back = lines_of_class(svg, "back");
        // One arc per face per unfolded segment.
        CHECK(front.size() == static_cast<std::size_t>(p + q - 1));
        CHECK(back.size() == front.size());
        // SVG y grows downward: front arcs have screen slope -p/q, back
        // arcs +p/q. Coordinates carry three decimals, so compare products.
        for (const std::string& e : front) {
            const double dx = attr(e, "x2") - attr(e, "x1");
            const double dy = attr(e, "y2") - attr(e, "y1");
            CHECK(std::abs(static_cast<double>(q) * dy +
                           static_cast<double>(p) * dx) < 0.05);
        }
        for (const std::string& e : back) {
            const double dx = attr(e, "x2") - attr(e, "x1");
            const double dy = attr(e, "y2") - attr(e, "y1");
            CHECK(std::abs(static_cast<double>(q) * dy -
                           static_cast<double>(p) * dx) < 0.05);
        }
    }
}

TEST_CASE("pillowcase styling and frame") {
    const std::string svg = pillowcase_svg(reduce(2, 3));
    CHECK(count_occurrences(svg, "stroke-dasharray") == 1);
    CHECK(svg.find(".back { stroke-dasharray: 8 6; }") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"pillow\"") == 1);
    CHECK(pillowcase_svg(reduce(2, 3)) == svg);
}

TEST_CASE("pillowcase arcs stay inside the frame") {
    const std::string svg = pillowcase_svg(reduce(3, 7));
    for (const std::string& cls : {"front", "back"})
        for (const std::string& e : lines_of_class(svg, cls))
            for (const std::string& name : {"x1", "x2"}) {
                CHECK(attr(e, name) >= 200.0 - 1e-9);
                CHECK(attr(e, name) <= 800.0 + 1e-9);
            }
}

TEST_CASE("pillowcase rejects slopes outside (0, 1]") {
    CHECK_THROWS_AS(pillowcase_svg(reduce(0, 1)), invalid_fraction);
    CHECK_THROWS_AS(pillowcase_svg(reduce(3, 2)), invalid_fraction);
    CHECK_THROWS_AS(pillowcase_svg(reduce(-1, 3)), invalid_fraction);
}

TEST_CASE("render_svg dispatches on kind and checks the payload") {
    const DiagramSpec plat{DiagramKind::fourplat, cf(0, {2, 3}), true};
    CHECK(render_svg(plat) == fourplat_svg(cf(0, {2, 3}), true));

    const DiagramSpec pillow{DiagramKind::pillowcase, reduce(3, 5), false};
    CHECK(render_svg(pillow) == pillowcase_svg(reduce(3, 5)));

    CHECK_THROWS_AS(render_svg(DiagramSpec{DiagramKind::fourplat, reduce(3, 5), false}),
                    precondition_violation);
    CHECK_THROWS_AS(render_svg(DiagramSpec{DiagramKind::pillowcase, cf(0, {2}), false}),
                    precondition_violation);
}
