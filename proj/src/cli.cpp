#include "knotspec/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotspec/braids.hpp"
#include "knotspec/continued_fraction.hpp"
#include "knotspec/errors.hpp"
#include "knotspec/families.hpp"
#include "knotspec/rational.hpp"
#include "knotspec/render.hpp"
#include "knotspec/spectrum.hpp"
#include "knotspec/surfaces.hpp"

namespace knotspec {
namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool color_enabled() {
    if (const char* env = std::getenv("KNOTSPEC_COLOR"))
        return std::string(env) != "0";
    return ::isatty(::fileno(stderr)) != 0;
}

std::string styled_error_prefix() {
    return color_enabled() ? "\x1b[31merror:\x1b[0m " : "error: ";
}

std::int64_t parse_int64(const std::string& text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("expected an integer, got '" + text + "'");
    return value;
}

struct CfracOptions {
    std::string fraction;
    bool canonical = false;
    bool ht = false;
    std::int64_t depth = 0; // 0: default to the reduced denominator
    bool json = false;
};

int run_cfrac(const CfracOptions& o, std::ostream& out) {
    const ReducedFraction x = parse_fraction(o.fraction);
    if (o.ht) {
        const std::int64_t depth =
            o.depth > 0 ? o.depth : std::max<std::int64_t>(abs64(x.denominator), 1);
        const std::vector<ContinuedFraction> all = cf_enumerate_ht(x, depth);
        if (o.json) {
            nlohmann::ordered_json doc;
            doc["fraction"] = to_string(x);
            doc["depth"] = depth;
            doc["expansions"] = nlohmann::ordered_json::array();
            for (const ContinuedFraction& cf : all)
                doc["expansions"].push_back(to_string(cf));
            out << doc.dump(2) << '\n';
        } else {
            for (const ContinuedFraction& cf : all)
                out << to_string(cf) << '\n';
        }
        return 0;
    }
    const ContinuedFraction cf = cf_canonical(x);
    if (o.json) {
        nlohmann::ordered_json doc;
        doc["fraction"] = to_string(x);
        doc["canonical"] = to_string(cf);
        out << doc.dump(2) << '\n';
    } else {
        out << to_string(cf) << '\n';
    }
    return 0;
}

struct SpectrumOptions {
    std::string knot;
    bool primitive = false;
    bool conjectural = false;
    bool json = false;
};

int run_spectrum(const SpectrumOptions& o, std::ostream& out) {
    const KnotFamily k = parse_knot(o.knot);
    const SpectrumVariant variant =
        o.primitive ? SpectrumVariant::primitive : SpectrumVariant::standard;
    SpectrumResult result;
    if (o.conjectural) {
        const auto* cable = std::get_if<CableKnot>(&k);
        if (cable == nullptr)
            throw hypothesis_not_satisfied(
                "--conjectural evaluates cable spectra; the literal is not a cable");
        const auto* pretzel = std::get_if<PretzelKnot>(cable->companion.get());
        if (variant == SpectrumVariant::primitive && pretzel != nullptr)
            result = conjectured_pretzel_cable_spectrum(*pretzel, cable->pattern.m,
                                                        cable->pattern.n);
        else
            result = conjectured_cable_spectrum(
                bridge_spectrum(*cable->companion, variant), cable->pattern.m,
                cable->pattern.n);
    } else {
        result = bridge_spectrum(k, variant);
    }
    out << (o.json ? to_json_text(result) : to_text(result)) << '\n';
    return 0;
}

struct TunnelOptions {
    std::string knot;
    bool json = false;
};

int run_tunnel(const TunnelOptions& o, std::ostream& out) {
    const TunnelResult t = tunnel_number(parse_knot(o.knot));
    out << (o.json ? to_json_text(t) : to_text(t)) << '\n';
    return 0;
}

struct SurfacesOptions {
    std::string fraction;
    std::string expansion;
    std::int64_t sheets = 1;
    bool euler = false;
    bool classes = false;
    bool json = false;
};

int run_surfaces(const SurfacesOptions& o, std::ostream& out) {
    const ReducedFraction x = parse_fraction(o.fraction);
    const ContinuedFraction cf = parse_continued_fraction(o.expansion);
    if (cf_eval(cf) != x)
        throw invalid_fraction("expansion " + to_string(cf) +
                               " does not evaluate to " + to_string(x));
    if (o.euler) {
        const HTSurface s = make_ht_surface(
            cf, o.sheets,
            std::vector<std::int64_t>(cf.k() == 0 ? 0 : cf.k() - 1, 0));
        const std::int64_t chi = euler_characteristic(s);
        if (o.json) {
            nlohmann::ordered_json doc;
            doc["expansion"] = to_string(cf);
            doc["n"] = o.sheets;
            doc["euler"] = chi;
            out << doc.dump(2) << '\n';
        } else {
            out << chi << '\n';
        }
        return 0;
    }
    const IsotopyClasses c = isotopy_classes(cf, o.sheets);
    if (o.json) {
        out << to_json_text(c) << '\n';
    } else {
        out << c.class_count() << '\n';
        for (const std::vector<std::int64_t>& rep : c.representatives) {
            out << '[';
            for (std::size_t i = 0; i < rep.size(); ++i)
                out << (i ? ", " : "") << rep[i];
            out << "]\n";
        }
    }
    return 0;
}

struct BraidOptions {
    std::vector<std::int64_t> torus;      // m n
    std::vector<std::int64_t> correction; // m p_sum
    std::vector<std::string> residual;    // <pretzel> n
    std::string reduce;
    bool reduce_given = false;
    bool json = false;
};

int run_braid(const BraidOptions& o, std::ostream& out) {
    BraidWord w;
    if (!o.torus.empty()) {
        w = torus_braid_word(o.torus[0], o.torus[1]);
    } else if (!o.correction.empty()) {
        w = pretzel_cable_correction(o.correction[0], o.correction[1]);
    } else if (!o.residual.empty()) {
        const KnotFamily k = parse_knot(o.residual[0]);
        const auto* pretzel = std::get_if<PretzelKnot>(&k);
        if (pretzel == nullptr)
            throw precondition_violation("--residual expects a pretzel literal");
        w = residual_two_strand_word(*pretzel, 2, parse_int64(o.residual[1]));
    } else {
        w = free_reduce(parse_braid_word(o.reduce));
    }
    if (o.json) {
        nlohmann::ordered_json doc;
        doc["strands"] = w.strands;
        doc["word"] = to_string(w);
        doc["exponent_sum"] = exponent_sum(w);
        out << doc.dump(2) << '\n';
    } else {
        out << to_string(w) << '\n';
    }
    return 0;
}

struct RenderOptions {
    std::string fourplat;
    bool fourplat_given = false;
    bool closed = false;
    std::string pillowcase;
    bool pillowcase_given = false;
    std::string out_path;
    bool json = false;
};

int run_render(const RenderOptions& o, std::ostream& out) {
    std::string svg;
    nlohmann::ordered_json manifest;
    if (o.fourplat_given) {
        const ContinuedFraction cf = parse_continued_fraction(o.fourplat);
        svg = fourplat_svg(cf, o.closed);
        manifest["kind"] = "fourplat";
        manifest["crossings"] = std::accumulate(
            cf.coefficients.begin(), cf.coefficients.end(), std::int64_t{0},
            [](std::int64_t acc, std::int64_t a) { return acc + abs64(a); });
    } else {
        const ReducedFraction x = parse_fraction(o.pillowcase);
        svg = pillowcase_svg(x);
        manifest["kind"] = "pillowcase";
    }
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw precondition_violation("cannot open output file '" + o.out_path + "'");
    file << svg;
    file.close();
    if (!file)
        throw precondition_violation("failed writing output file '" + o.out_path + "'");
    manifest["out"] = o.out_path;
    manifest["bytes"] = svg.size();
    if (o.json)
        out << manifest.dump(2) << '\n';
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic knot calculator: bridge spectra, tunnel numbers, "
                 "continued fractions, carried surfaces, braid words, SVG diagrams",
                 "knotspec"};
    app.require_subcommand(1);

    CfracOptions cfrac;
    CLI::App* cfrac_cmd = app.add_subcommand(
        "cfrac", "Continued-fraction normal form and expansion enumeration");
    cfrac_cmd->add_option("fraction", cfrac.fraction, "Rational number p/q")
        ->required();
    CLI::Option* canonical_flag = cfrac_cmd->add_flag(
        "--canonical", cfrac.canonical,
        "Emit the uniform-sign odd-length expansion (the default)");
    CLI::Option* ht_flag = cfrac_cmd->add_flag(
        "--ht", cfrac.ht, "Enumerate every expansion with all |b_i| >= 2");
    canonical_flag->excludes(ht_flag);
    cfrac_cmd->add_option("--depth", cfrac.depth, "Length cap for --ht (default: q)")
        ->needs(ht_flag)
        ->check(CLI::PositiveNumber);
    cfrac_cmd->add_flag("--json", cfrac.json, "Emit JSON");

    SpectrumOptions spectrum;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "Bridge spectrum of a knot literal");
    spectrum_cmd->add_option("knot", spectrum.knot, "Knot literal")->required();
    spectrum_cmd->add_flag("--primitive", spectrum.primitive,
                           "Primitive variant of the spectrum");
    spectrum_cmd->add_flag("--conjectural", spectrum.conjectural,
                           "Evaluate the conjectured cable spectrum");
    spectrum_cmd->add_flag("--json", spectrum.json, "Emit JSON");

    TunnelOptions tunnel;
    CLI::App* tunnel_cmd =
        app.add_subcommand("tunnel", "Tunnel number of a knot literal");
    tunnel_cmd->add_option("knot", tunnel.knot, "Knot literal")->required();
    tunnel_cmd->add_flag("--json", tunnel.json, "Emit JSON");

    SurfacesOptions surfaces;
    CLI::App* surfaces_cmd = app.add_subcommand(
        "surfaces", "Surfaces carried by an admissible expansion of p/q");
    surfaces_cmd->add_option("fraction", surfaces.fraction, "Rational number p/q")
        ->required();
    surfaces_cmd
        ->add_option("--expansion", surfaces.expansion,
                     "Expansion [b1,...,bk] evaluating to p/q")
        ->required();
    surfaces_cmd->add_option("--sheets", surfaces.sheets, "Sheet count n")
        ->required();
    CLI::Option* euler_flag = surfaces_cmd->add_flag(
        "--euler", surfaces.euler, "Print the Euler characteristic");
    CLI::Option* classes_flag = surfaces_cmd->add_flag(
        "--classes", surfaces.classes, "Print the isotopy classes");
    euler_flag->excludes(classes_flag);
    surfaces_cmd->add_flag("--json", surfaces.json, "Emit JSON");

    BraidOptions braid;
    CLI::App* braid_cmd = app.add_subcommand("braid", "Braid-word arithmetic");
    CLI::Option* torus_opt =
        braid_cmd->add_option("--torus", braid.torus, "Torus word for (m, n)")
            ->expected(2);
    CLI::Option* correction_opt =
        braid_cmd
            ->add_option("--correction", braid.correction,
                         "Framing correction for (m, p_sum)")
            ->expected(2);
    CLI::Option* residual_opt =
        braid_cmd
            ->add_option("--residual", braid.residual,
                         "Residual 2-strand word for <pretzel> n")
            ->expected(2);
    CLI::Option* reduce_opt =
        braid_cmd->add_option("--reduce", braid.reduce, "Freely reduce a word");
    torus_opt->excludes(correction_opt, residual_opt, reduce_opt);
    correction_opt->excludes(residual_opt, reduce_opt);
    residual_opt->excludes(reduce_opt);
    braid_cmd->add_flag("--json", braid.json, "Emit JSON");

    RenderOptions render;
    CLI::App* render_cmd =
        app.add_subcommand("render", "Deterministic SVG diagram writer");
    CLI::Option* fourplat_opt = render_cmd->add_option(
        "--fourplat", render.fourplat, "4-plat twist diagram of [a1,...,ak]");
    CLI::Option* closed_flag = render_cmd->add_flag(
        "--closed", render.closed, "Join the free ends into the knot closure");
    CLI::Option* pillowcase_opt = render_cmd->add_option(
        "--pillowcase", render.pillowcase, "Pillowcase picture of slope p/q");
    fourplat_opt->excludes(pillowcase_opt);
    closed_flag->needs(fourplat_opt);
    render_cmd->add_option("--out", render.out_path, "Output SVG path")->required();
    render_cmd->add_flag("--json", render.json, "Emit a JSON manifest");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cfrac_cmd)
            return run_cfrac(cfrac, out);
        if (*spectrum_cmd)
            return run_spectrum(spectrum, out);
        if (*tunnel_cmd)
            return run_tunnel(tunnel, out);
        if (*surfaces_cmd) {
            if (!surfaces.euler && !surfaces.classes)
                throw precondition_violation("surfaces needs --euler or --classes");
            return run_surfaces(surfaces, out);
        }
        if (*braid_cmd) {
            braid.reduce_given = reduce_opt->count() > 0;
            if (braid.torus.empty() && braid.correction.empty() &&
                braid.residual.empty() && !braid.reduce_given)
                throw precondition_violation(
                    "braid needs one of --torus, --correction, --residual, --reduce");
            return run_braid(braid, out);
        }
        if (*render_cmd) {
            render.fourplat_given = fourplat_opt->count() > 0;
            render.pillowcase_given = pillowcase_opt->count() > 0;
            if (!render.fourplat_given && !render.pillowcase_given)
                throw precondition_violation(
                    "render needs one of --fourplat, --pillowcase");
            return run_render(render, out);
        }
        throw std::logic_error("unreachable: subcommand required");
    } catch (const validation_error& e) {
        err << styled_error_prefix() << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << styled_error_prefix() << "internal: " << e.what() << '\n';
        return 1;
    }
}

} // namespace knotspec
