/**
 * sbfig - fixed-figure geometry on S_b-metric spaces
 *
 * Copyright (c) 2026
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 */
#pragma once

// Command-line surface. `run` is the whole program minus process setup, so it
// can be driven in-process by tests.
//
// Exit codes: 0 all checks passed / artifact emitted, 1 violations or
// counterexamples found, 2 usage or input error.

#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbfig/axioms.hpp"
#include "sbfig/contractions.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/io.hpp"
#include "sbfig/report.hpp"
#include "sbfig/svg.hpp"
#include "sbfig/verifier.hpp"

namespace sbfig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;
inline constexpr int kExitUsage = 2;

/// Worker count from SBFIG_THREADS, falling back to the hardware concurrency.
inline unsigned threads_from_env() {
    if (const char* env = std::getenv("SBFIG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace detail {

struct Options {
    std::string space, map, out, kind, x0, x1, x2, phi = "affine", slice;
    double tol = kDefaultTolerance;
    std::optional<double> b;
    std::optional<double> r;
    double alpha = 0.5;
    std::size_t max_witnesses = 100;
    std::size_t max_points = 200;
};

inline void emit(const OrderedJson& doc, const Options& o, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
}

inline std::vector<Point> anchors(const Options& o, const SpaceSample& s, std::size_t count) {
    if (count == 1) {
        if (o.x0.empty()) throw InputError("--x0 is required for this kind");
        return {parse_point_literal(o.x0, s)};
    }
    if (o.x1.empty() || o.x2.empty()) throw InputError("--x1 and --x2 are required for this kind");
    return {parse_point_literal(o.x1, s), parse_point_literal(o.x2, s)};
}

inline FigureSpec figure_from(const Options& o, const SpaceSample& s) {
    auto kind = parse_figure_kind(o.kind);
    if (!kind) throw InputError("unknown figure kind '" + o.kind + "'");
    if (!o.r) throw InputError("--r is required");
    FigureSpec f{*kind, anchors(o, s, anchor_count(*kind)), *o.r, o.tol};
    f.validate();
    return f;
}

inline ContractionSpec contraction_from(const Options& o, const SpaceSample& s) {
    auto kind = parse_contraction_kind(o.kind);
    if (!kind) throw InputError("unknown contraction kind '" + o.kind + "'");
    auto phi = parse_phi_kind(o.phi);
    if (!phi) throw InputError("unknown phi '" + o.phi + "'");
    ContractionSpec c{*kind, anchors(o, s, *kind == ContractionKind::D ? 1 : 2), o.alpha, *phi};
    c.validate();
    return c;
}

inline SelfMapSpec map_from(const Options& o, const SpaceSample& s) {
    return o.map.empty() ? SelfMapSpec::identity() : parse_map(o.map, s);
}

inline std::ofstream open_out(const Options& o) {
    if (o.out.empty()) throw InputError("--out is required");
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    return f;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, unsigned threads = 1) {
    detail::Options o;
    CLI::App app{"sbfig: fixed-figure geometry on S_b-metric spaces", "sbfig"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_map) {
        sub->add_option("--space", o.space, "space document (JSON)")->required();
        if (with_map) sub->add_option("--map", o.map, "self-map document (JSON); identity if omitted");
        sub->add_option("--tol", o.tol, "relative equality tolerance")->capture_default_str();
        sub->add_option("--out", o.out, "output path (report goes to stdout if omitted)");
    };
    auto add_anchors = [&](CLI::App* sub) {
        sub->add_option("--x0", o.x0, "center (circle, disc, D)");
        sub->add_option("--x1", o.x1, "first anchor");
        sub->add_option("--x2", o.x2, "second anchor");
    };
    auto add_figure = [&](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "circle|disc|ellipse|hyperbola|cassini|apollonius")->required();
        add_anchors(sub);
        sub->add_option("--r", o.r, "radius")->required();
    };
    auto add_contraction = [&](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "D|E|H|C|A")->required();
        add_anchors(sub);
        sub->add_option("--alpha", o.alpha, "exponent in (0, 1)")->capture_default_str();
        sub->add_option("--phi", o.phi, "affine|exp|exp_sqrt")->capture_default_str();
    };

    auto* axioms = app.add_subcommand("axioms", "check the S_b-metric axioms exhaustively on the sample");
    add_common(axioms, false);
    axioms->add_option("--b", o.b, "relaxation constant (default: the space's b)");
    axioms->add_option("--max-witnesses", o.max_witnesses, "S_b2 witnesses listed in the report")->capture_default_str();
    axioms->add_option("--max-points", o.max_points, "refuse samples larger than this")->capture_default_str();

    auto* minb = app.add_subcommand("minb", "estimate the smallest b for which S_b2 holds on the sample");
    add_common(minb, false);
    minb->add_option("--max-points", o.max_points, "refuse samples larger than this")->capture_default_str();

    auto* figure = app.add_subcommand("figure", "compute a figure locus on the sample");
    add_common(figure, false);
    add_figure(figure);

    auto* contraction = app.add_subcommand("contraction", "check a contraction condition on every sample point");
    add_common(contraction, true);
    add_contraction(contraction);

    auto* verify = app.add_subcommand("verify", "verify a fixed-figure theorem instance");
    add_common(verify, true);
    add_contraction(verify);

    auto* falsify_cmd = app.add_subcommand("falsify", "list points of the r-figure that the map moves");
    add_common(falsify_cmd, true);
    add_contraction(falsify_cmd);

    auto* plot = app.add_subcommand("plot", "render a figure on a 2-D grid or a slice of a 3-D grid as SVG");
    add_common(plot, false);
    add_figure(plot);
    plot->add_option("--slice", o.slice, "AXIS=VALUE for 3-D grids, e.g. z=1");

    auto* dump = app.add_subcommand("dump", "write a figure locus as CSV");
    add_common(dump, false);
    add_figure(dump);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const SpaceSample s = parse_space(o.space);

        if (axioms->parsed() || minb->parsed()) {
            if (s.size() > o.max_points)
                throw InputError("sample has " + std::to_string(s.size()) + " points; the exhaustive check is capped at " +
                                 std::to_string(o.max_points) + " (raise --max-points)");
            AxiomOptions ao{o.tol, threads, o.max_witnesses};
            if (minb->parsed()) {
                const auto mb = minimal_b(s, ao);
                detail::emit(minb_report_json(s, mb), o, out);
                return (!mb || *mb <= s.claimed_b() * (1.0 + kDefaultTolerance)) ? kExitOk : kExitFound;
            }
            const double b = o.b.value_or(s.claimed_b());
            if (!(b >= 1.0)) throw InputError("--b must be >= 1");
            const auto rep = verify_axioms(s, b, ao);
            detail::emit(axiom_report_json(s, rep), o, out);
            return rep.passed() ? kExitOk : kExitFound;
        }

        if (figure->parsed() || dump->parsed() || plot->parsed()) {
            const auto f = detail::figure_from(o, s);
            if (plot->parsed()) {
                std::optional<SlicePlane> slice;
                if (!o.slice.empty()) slice = parse_slice(o.slice);
                const auto img = slice_figure(s, f, slice);
                auto file = detail::open_out(o);
                std::string title = std::string(to_string(f.kind)) + ", r = " + format_real(f.r);
                if (slice) title += ", slice " + o.slice;
                write_svg(file, img, title);
                return kExitOk;
            }
            const auto entries = locus_with_values(s, f, threads);
            if (dump->parsed()) {
                auto file = detail::open_out(o);
                write_locus_csv(file, s, entries);
                return kExitOk;
            }
            detail::emit(figure_report_json(s, f, entries), o, out);
            return kExitOk;
        }

        const auto c = detail::contraction_from(o, s);
        const auto f = detail::map_from(o, s);
        const VerifyOptions vo{o.tol, threads};
        if (contraction->parsed()) {
            const auto rep = check_contraction(s, f, c, threads);
            detail::emit(contraction_report_json(s, c, rep), o, out);
            return rep.passed() ? kExitOk : kExitFound;
        }
        const auto rep = verify_fixed_figure(s, f, c, vo);
        if (verify->parsed()) {
            detail::emit(fixed_figure_report_json(s, c, rep), o, out);
            return (rep.subset_holds && rep.hypotheses.all_hold()) ? kExitOk : kExitFound;
        }
        const auto ces = falsify(s, f, c, vo);
        detail::emit(falsify_report_json(s, c, rep, ces), o, out);
        return ces.empty() ? kExitOk : kExitFound;
    } catch (const std::exception& e) {
        err << "sbfig: error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace sbfig::cli
