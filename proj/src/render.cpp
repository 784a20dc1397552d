#include "knotspec/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "knotspec/errors.hpp"

namespace knotspec {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// All coordinates go through one fixed format so output is byte-stable.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void line(std::string& svg, const char* cls, double x1, double y1, double x2,
          double y2) {
    svg += "  <line";
    if (cls && *cls) {
        svg += " class=\"";
        svg += cls;
        svg += '"';
    }
    svg += " x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\"/>\n";
}

// Cap arc between two column tops or bottoms, bulging away from the body.
void cap(std::string& svg, const char* cls, double xa, double xb, double y,
         double bulge) {
    svg += "  <path class=\"";
    svg += cls;
    svg += "\" d=\"M " + num(xa) + " " + num(y) + " C " + num(xa) + " " +
           num(y + bulge) + " " + num(xb) + " " + num(y + bulge) + " " + num(xb) +
           " " + num(y) + "\"/>\n";
}

const char* svg_open =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" "
    "width=\"1000\" height=\"1000\">\n"
    "<g fill=\"none\" stroke=\"#222222\" stroke-width=\"3\" "
    "stroke-linecap=\"round\">\n";

const char* svg_close = "</g>\n</svg>\n";

} // namespace

std::string fourplat_svg(const ContinuedFraction& cf, bool closed) {
    if (cf.k() < 1)
        throw precondition_violation("a 4-plat needs at least one twist region");

    const double col[4] = {200.0, 400.0, 600.0, 800.0};
    const double top = 150.0, bottom = 850.0;

    std::int64_t total = 0;
    for (std::int64_t a : cf.coefficients)
        total += abs64(a);

    std::string svg = svg_open;
    // Built-in caps: the top joins the left pair, the bottom the right pair.
    cap(svg, "cap", col[0], col[1], top, -60.0);
    cap(svg, "cap", col[2], col[3], bottom, 60.0);
    if (closed) {
        cap(svg, "closure", col[2], col[3], top, -60.0);
        cap(svg, "closure", col[0], col[1], bottom, 60.0);
    }

    const double h = total > 0 ? (bottom - top) / static_cast<double>(total) : 0.0;
    std::int64_t row = 0;
    for (std::size_t band = 0; band < cf.k(); ++band) {
        const std::int64_t a = cf.coefficients[band];
        const int sign = a < 0 ? -1 : 1;
        // Odd-numbered bands twist the middle-left pair, even-numbered bands
        // the middle-right pair.
        const std::size_t left = (band % 2 == 0) ? 1 : 2;
        for (std::int64_t c = 0; c < abs64(a); ++c, ++row) {
            const double y0 = top + static_cast<double>(row) * h;
            const double y1 = y0 + h;
            for (std::size_t s = 0; s < 4; ++s)
                if (s != left && s != left + 1)
                    line(svg, "strand", col[s], y0, col[s], y1);
            const double xa = col[left], xb = col[left + 1];
            const double over_x0 = sign > 0 ? xa : xb;
            const double over_x1 = sign > 0 ? xb : xa;
            const double under_x0 = sign > 0 ? xb : xa;
            const double under_x1 = sign > 0 ? xa : xb;
            svg += "  <g class=\"crossing\" data-sign=\"" +
                   std::to_string(sign) + "\">\n";
            svg += "  ";
            line(svg, "over", over_x0, y0, over_x1, y1);
            svg += "  ";
            line(svg, "under", under_x0, y0, under_x0 + 0.4 * (under_x1 - under_x0),
                 y0 + 0.4 * h);
            svg += "  ";
            line(svg, "under", under_x0 + 0.6 * (under_x1 - under_x0), y0 + 0.6 * h,
                 under_x1, y1);
            svg += "  </g>\n";
        }
    }
    if (total == 0)
        for (std::size_t s = 0; s < 4; ++s)
            line(svg, "strand", col[s], top, col[s], bottom);

    svg += svg_close;
    return svg;
}

std::string pillowcase_svg(const ReducedFraction& x) {
    const std::int64_t p = x.numerator, q = x.denominator;
    if (p < 1 || p > q)
        throw invalid_fraction("pillowcase slope must satisfy 0 < p/q <= 1");

    const double origin_x = 200.0, origin_y = 800.0, scale = 600.0;
    const auto px = [&](const ReducedFraction& v) {
        return origin_x + scale * static_cast<double>(v.numerator) /
                              static_cast<double>(v.denominator);
    };
    const auto py = [&](const ReducedFraction& v) {
        return origin_y - scale * static_cast<double>(v.numerator) /
                              static_cast<double>(v.denominator);
    };

    // Breakpoints of the unfolded segment (0,0) -> (q,p) at every grid line.
    std::vector<ReducedFraction> ts{reduce(0, 1), reduce(1, 1)};
    for (std::int64_t i = 1; i < q; ++i)
        ts.push_back(reduce(i, q));
    for (std::int64_t j = 1; j < p; ++j)
        ts.push_back(reduce(j, p));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::string svg = svg_open;
    svg += "  <style>.back { stroke-dasharray: 8 6; }</style>\n";
    svg += "  <rect class=\"pillow\" x=\"" + num(origin_x) + "\" y=\"" +
           num(origin_y - scale) + "\" width=\"" + num(scale) + "\" height=\"" +
           num(scale) + "\"/>\n";

    const ReducedFraction qf = from_integer(q), pf = from_integer(p);
    const ReducedFraction half = reduce(1, 2);
    for (std::size_t seg = 0; seg + 1 < ts.size(); ++seg) {
        const ReducedFraction t0 = ts[seg], t1 = ts[seg + 1];
        const ReducedFraction tm = (t0 + t1) * half;
        const std::int64_t ci = floor_div(qf * tm); // unfolded cell column
        const std::int64_t cj = floor_div(pf * tm); // unfolded cell row
        // Fold the cell back into the unit square; odd cells mirror.
        const auto fold = [](const ReducedFraction& v, std::int64_t cell) {
            const ReducedFraction offset = from_integer(cell);
            const ReducedFraction local = v - offset;
            if (cell % 2 == 0)
                return local;
            return from_integer(1) - local;
        };
        const ReducedFraction x0 = fold(qf * t0, ci), y0 = fold(pf * t0, cj);
        const ReducedFraction x1 = fold(qf * t1, ci), y1 = fold(pf * t1, cj);
        const bool front = (ci + cj) % 2 == 0;
        // First arc, then its mirror image (x -> 1-x) on the opposite face.
        line(svg, front ? "front" : "back", px(x0), py(y0), px(x1), py(y1));
        const ReducedFraction mx0 = from_integer(1) - x0;
        const ReducedFraction mx1 = from_integer(1) - x1;
        line(svg, front ? "back" : "front", px(mx0), py(y0), px(mx1), py(y1));
    }
    svg += svg_close;
    return svg;
}

std::string render_svg(const DiagramSpec& spec) {
    if (spec.kind == DiagramKind::fourplat) {
        const auto* cf = std::get_if<ContinuedFraction>(&spec.payload);
        if (!cf)
            throw precondition_violation("4-plat diagrams take an expansion payload");
        return fourplat_svg(*cf, spec.closed);
    }
    const auto* slope = std::get_if<ReducedFraction>(&spec.payload);
    if (!slope)
        throw precondition_violation("pillowcase diagrams take a slope payload");
    return pillowcase_svg(*slope);
}

} // namespace knotspec
