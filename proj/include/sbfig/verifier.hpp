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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sbfig/contractions.hpp"
#include "sbfig/core.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/metric_space.hpp"

namespace sbfig {

/// Fix(f) as sample indices, in order.
inline std::vector<std::size_t> fix_set(const ResolvedMap& f) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.fixes(i)) out.push_back(i);
    return out;
}

inline std::vector<std::size_t> fix_set(const SpaceSample& sample, const SelfMapSpec& f) {
    return fix_set(ResolvedMap(sample, f));
}

/// min { S(x,x,fx) : x != fx } over the sample; empty when f fixes every point.
inline std::optional<double> compute_r(const SpaceSample& sample, const ResolvedMap& f) {
    std::optional<double> r;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (f.fixes(i)) continue;
        const double d = sample.pair(i, f(i));
        if (!r || d < *r) r = d;
    }
    return r;
}

inline std::optional<double> compute_r(const SpaceSample& sample, const SelfMapSpec& f) {
    return compute_r(sample, ResolvedMap(sample, f));
}

struct Hypotheses {
    bool contraction_ok = false;
    std::optional<bool> foci_fixed;    // E, H, C, A
    std::optional<bool> r_positive;    // H
    std::optional<bool> center_fixed;  // D; a consequence, not an assumption

    bool all_hold() const {
        return contraction_ok && foci_fixed.value_or(true) && r_positive.value_or(true);
    }

    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        if (!contraction_ok) out.emplace_back("contraction");
        if (foci_fixed && !*foci_fixed) out.emplace_back("foci_fixed");
        if (r_positive && !*r_positive) out.emplace_back("r_positive");
        return out;
    }
};

struct VerifyOptions {
    double tol = kDefaultTolerance;
    unsigned threads = 1;
};

struct FixedFigureReport {
    ContractionKind kind = ContractionKind::D;
    std::optional<double> r;
    /// r is a minimum over grid nodes; the true infimum may be smaller off-grid.
    bool r_sampled = false;
    std::vector<std::size_t> fix_set;
    std::optional<FigureSpec> figure;
    std::vector<std::size_t> figure_locus;
    Hypotheses hypotheses;
    ContractionReport contraction;
    bool subset_holds = true;
    /// r undefined (f is the identity on the sample): the conclusion holds vacuously.
    bool trivially_true = false;
    /// All hypotheses hold and r is defined, so the fixed-figure conclusion is asserted.
    bool theorem_applies = false;
    std::vector<std::size_t> counterexamples;
};

inline FixedFigureReport verify_fixed_figure(const SpaceSample& sample, const SelfMapSpec& map, const ContractionSpec& c,
                                             const VerifyOptions& opt = {}) {
    c.validate();
    std::vector<std::size_t> anchor_idx;
    for (const auto& a : c.anchors) {
        auto i = sample.index_of(a);
        if (!i) throw InputError("anchor " + to_string(a) + " is not a point of the space");
        anchor_idx.push_back(*i);
    }
    const ResolvedMap f(sample, map);

    FixedFigureReport rep;
    rep.kind = c.kind;
    rep.r = compute_r(sample, f);
    rep.r_sampled = sample.grid().has_value();
    rep.fix_set = fix_set(f);
    rep.contraction = check_contraction(sample, f, c, opt.threads);
    rep.hypotheses.contraction_ok = rep.contraction.passed();
    if (c.kind == ContractionKind::D) {
        rep.hypotheses.center_fixed = f.fixes(anchor_idx[0]);
    } else {
        rep.hypotheses.foci_fixed = f.fixes(anchor_idx[0]) && f.fixes(anchor_idx[1]);
    }
    if (c.kind == ContractionKind::H) rep.hypotheses.r_positive = rep.r.has_value() ? *rep.r > 0.0 : true;

    if (!rep.r) {
        rep.trivially_true = true;
        rep.subset_holds = true;
        return rep;
    }

    FigureSpec fig{matching_figure(c.kind), c.anchors, *rep.r, opt.tol};
    rep.figure_locus = locus(sample, fig, opt.threads);
    rep.figure = std::move(fig);
    for (auto i : rep.figure_locus)
        if (!f.fixes(i)) rep.counterexamples.push_back(i);
    rep.subset_holds = rep.counterexamples.empty();
    rep.theorem_applies = rep.hypotheses.all_hold();
    return rep;
}

struct Counterexample {
    std::size_t index;
    bool is_anchor = false;
    /// Verdict of the contraction at this point; empty for excluded anchors.
    std::optional<PointCheck> check;
    /// Hypotheses that fail somewhere on the sample.
    std::vector<std::string> failing_hypotheses;
    std::string note;
};

/// Points of the r-figure that f moves, each annotated with the reason the
/// fixed-figure conclusion does not cover it.
inline std::vector<Counterexample> falsify(const SpaceSample& sample, const SelfMapSpec& map, const ContractionSpec& c,
                                           const VerifyOptions& opt = {}) {
    const auto rep = verify_fixed_figure(sample, map, c, opt);
    const ResolvedMap f(sample, map);
    std::vector<Counterexample> out;
    for (auto i : rep.counterexamples) {
        Counterexample ce;
        ce.index = i;
        ce.is_anchor = c.excludes(sample[i]);
        ce.failing_hypotheses = rep.hypotheses.failing();
        if (ce.is_anchor) {
            ce.note = "anchor is moved; the fixed-foci hypothesis fails";
        } else {
            ce.check = contraction_holds_at(sample, f, c, i);
            switch (ce.check->verdict) {
                case Verdict::violated: ce.note = "contraction violated at this point"; break;
                case Verdict::undefined: ce.note = "contraction undefined at this point (right-hand side is 0)"; break;
                default: {
                    ce.note = "contraction holds here; failing hypotheses:";
                    for (const auto& h : ce.failing_hypotheses) ce.note += " " + h;
                    if (ce.failing_hypotheses.empty()) ce.note += " none (theorem counterexample)";
                }
            }
        }
        out.push_back(std::move(ce));
    }
    return out;
}

}  // namespace sbfig
