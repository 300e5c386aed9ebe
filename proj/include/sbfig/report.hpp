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

// Machine-readable report documents. Field order is fixed (ordered_json) and
// every document ends with a human-readable "summary".

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sbfig/axioms.hpp"
#include "sbfig/contractions.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/io.hpp"
#include "sbfig/verifier.hpp"

namespace sbfig {

namespace detail {

inline OrderedJson opt_real(const std::optional<double>& v) { return v ? OrderedJson(*v) : OrderedJson(nullptr); }

inline OrderedJson opt_bool(const std::optional<bool>& v) { return v ? OrderedJson(*v) : OrderedJson(nullptr); }

inline OrderedJson indexed_points(const SpaceSample& s, std::span<const std::size_t> idx) {
    OrderedJson arr = OrderedJson::array();
    for (auto i : idx) arr.push_back({{"index", i}, {"point", point_to_json<OrderedJson>(s[i])}});
    return arr;
}

inline OrderedJson anchors_json(std::span<const Point> anchors) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& a : anchors) arr.push_back(point_to_json<OrderedJson>(a));
    return arr;
}

inline OrderedJson figure_json(const FigureSpec& f) {
    return {{"kind", std::string(to_string(f.kind))}, {"anchors", anchors_json(f.anchors)}, {"r", f.r}, {"tol", f.tol}};
}

inline OrderedJson contraction_spec_json(const ContractionSpec& c) {
    return {{"kind", std::string(to_string(c.kind))},
            {"anchors", anchors_json(c.anchors)},
            {"alpha", c.alpha},
            {"phi", std::string(to_string(c.phi))}};
}

inline OrderedJson contraction_body(const SpaceSample& s, const ContractionReport& rep) {
    OrderedJson viol = OrderedJson::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"index", v.index},
                        {"point", point_to_json<OrderedJson>(s[v.index])},
                        {"lhs", v.lhs},
                        {"rhs", v.rhs},
                        {"expression", v.expression}});
    return {{"passed", rep.passed()},
            {"violations", viol},
            {"holds_count", rep.holds_count},
            {"vacuous_count", rep.vacuous_count},
            {"excluded", indexed_points(s, rep.excluded)},
            {"undefined", indexed_points(s, rep.undefined)}};
}

}  // namespace detail

inline OrderedJson axiom_report_json(const SpaceSample& s, const AxiomReport& rep) {
    OrderedJson s1 = OrderedJson::array();
    for (const auto& v : rep.s1_violations)
        s1.push_back({{"triple", {v.i, v.j, v.k}}, {"value", v.value}, {"expected_zero", v.expected_zero}});
    OrderedJson s2 = OrderedJson::array();
    for (const auto& v : rep.s2_violations)
        s2.push_back({{"quadruple", {v.i, v.j, v.k, v.a}},
                      {"points", {point_to_json<OrderedJson>(s[v.i]), point_to_json<OrderedJson>(s[v.j]), point_to_json<OrderedJson>(s[v.k]), point_to_json<OrderedJson>(s[v.a])}},
                      {"lhs", v.lhs},
                      {"bound", rep.b * v.rhs_sum},
                      {"ratio", v.ratio}});
    std::string summary = rep.passed() ? "S_b-metric axioms hold on all " : "S_b-metric axioms FAIL on the ";
    summary += std::to_string(s.size()) + " sample points with b = " + format_real(rep.b) + " (" +
               std::to_string(rep.s1_violations.size()) + " S_b1 and " + std::to_string(rep.s2_violation_count) +
               " S_b2 violations)";
    return {{"command", "axioms"},
            {"points", s.size()},
            {"b", rep.b},
            {"passed", rep.passed()},
            {"s1_violations", s1},
            {"s2_violation_count", rep.s2_violation_count},
            {"s2_violations_listed", rep.s2_violations.size()},
            {"s2_violations", s2},
            {"minimal_b_estimate", detail::opt_real(rep.minimal_b_estimate)},
            {"symmetric", rep.symmetric},
            {"summary", summary}};
}

inline OrderedJson minb_report_json(const SpaceSample& s, const std::optional<double>& mb) {
    const bool ok = mb && *mb <= s.claimed_b() * (1.0 + kDefaultTolerance);
    std::string summary = mb ? "minimal b on the sample is " + format_real(*mb) +
                                   (ok ? " (claimed b suffices)" : " (exceeds claimed b = " + format_real(s.claimed_b()) + ")")
                             : "minimal b is undefined: every right-hand side vanishes";
    return {{"command", "minb"},
            {"points", s.size()},
            {"claimed_b", s.claimed_b()},
            {"minimal_b", detail::opt_real(mb)},
            {"undefined", !mb.has_value()},
            {"claimed_b_sufficient", mb ? OrderedJson(ok) : OrderedJson(nullptr)},
            {"summary", summary}};
}

inline OrderedJson figure_report_json(const SpaceSample& s, const FigureSpec& f, std::span<const LocusEntry> locus) {
    OrderedJson pts = OrderedJson::array();
    for (const auto& e : locus) pts.push_back({{"index", e.index}, {"point", point_to_json<OrderedJson>(s[e.index])}, {"value", e.value}});
    std::string summary = std::string(to_string(f.kind)) + " with r = " + format_real(f.r) + " has " +
                          std::to_string(locus.size()) + " of " + std::to_string(s.size()) + " sample points";
    if (locus.empty()) summary += " (empty locus)";
    return {{"command", "figure"}, {"figure", detail::figure_json(f)}, {"count", locus.size()}, {"locus", pts}, {"summary", summary}};
}

inline OrderedJson contraction_report_json(const SpaceSample& s, const ContractionSpec& c, const ContractionReport& rep) {
    OrderedJson doc{{"command", "contraction"}, {"contraction", detail::contraction_spec_json(c)}};
    const auto body = detail::contraction_body(s, rep);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    std::string summary = std::string(to_string(c.kind)) + "-contraction with alpha = " + format_real(c.alpha) + " " +
                          (rep.passed() ? "holds" : "FAILS") + ": " + std::to_string(rep.violations.size()) +
                          " violation(s), " + std::to_string(rep.undefined.size()) + " undefined, " +
                          std::to_string(rep.holds_count) + " strict, " + std::to_string(rep.vacuous_count) + " vacuous";
    doc["summary"] = summary;
    return doc;
}

inline OrderedJson fixed_figure_report_json(const SpaceSample& s, const ContractionSpec& c, const FixedFigureReport& rep) {
    OrderedJson hyp{{"contraction_ok", rep.hypotheses.contraction_ok},
                    {"foci_fixed", detail::opt_bool(rep.hypotheses.foci_fixed)},
                    {"r_positive", detail::opt_bool(rep.hypotheses.r_positive)},
                    {"center_fixed", detail::opt_bool(rep.hypotheses.center_fixed)},
                    {"all_hold", rep.hypotheses.all_hold()}};
    std::string summary;
    if (rep.trivially_true) {
        summary = "f fixes every sample point: r is undefined and the conclusion holds trivially";
    } else {
        summary = std::string(to_string(rep.figure->kind)) + " with " +
                  (rep.r_sampled ? "sampled r = " : "r = ") + format_real(*rep.r) + " has " +
                  std::to_string(rep.figure_locus.size()) + " point(s); " +
                  (rep.subset_holds ? "all fixed by f" : std::to_string(rep.counterexamples.size()) + " moved by f") +
                  "; hypotheses " + (rep.hypotheses.all_hold() ? "hold" : "fail");
        if (rep.theorem_applies && !rep.subset_holds) summary += " -- THEOREM COUNTEREXAMPLE";
    }
    return {{"command", "verify"},
            {"contraction", detail::contraction_spec_json(c)},
            {"r", detail::opt_real(rep.r)},
            {"r_sampled", rep.r_sampled},
            {"fix_set_size", rep.fix_set.size()},
            {"moved", [&] {
                 std::vector<std::size_t> moved;
                 std::size_t k = 0;
                 for (std::size_t i = 0; i < s.size(); ++i) {
                     if (k < rep.fix_set.size() && rep.fix_set[k] == i) ++k;
                     else moved.push_back(i);
                 }
                 return detail::indexed_points(s, moved);
             }()},
            {"figure", rep.figure ? detail::figure_json(*rep.figure) : OrderedJson(nullptr)},
            {"figure_locus", detail::indexed_points(s, rep.figure_locus)},
            {"hypotheses", hyp},
            {"contraction_report", detail::contraction_body(s, rep.contraction)},
            {"subset_holds", rep.subset_holds},
            {"trivially_true", rep.trivially_true},
            {"theorem_applies", rep.theorem_applies},
            {"counterexamples", detail::indexed_points(s, rep.counterexamples)},
            {"summary", summary}};
}

inline OrderedJson falsify_report_json(const SpaceSample& s, const ContractionSpec& c, const FixedFigureReport& rep,
                                       std::span<const Counterexample> ces) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& ce : ces) {
        OrderedJson entry{{"index", ce.index}, {"point", point_to_json<OrderedJson>(s[ce.index])}, {"is_anchor", ce.is_anchor}};
        if (ce.check) {
            entry["verdict"] = std::string(to_string(ce.check->verdict));
            entry["displacement"] = ce.check->displacement;
            entry["lhs"] = ce.check->lhs;
            entry["rhs"] = ce.check->rhs;
        } else {
            entry["verdict"] = nullptr;
        }
        entry["failing_hypotheses"] = ce.failing_hypotheses;
        entry["note"] = ce.note;
        arr.push_back(std::move(entry));
    }
    std::string summary = ces.empty() ? "no counterexamples: every point of the r-figure is fixed"
                                      : std::to_string(ces.size()) + " counterexample(s) on the r-figure";
    return {{"command", "falsify"},
            {"contraction", detail::contraction_spec_json(c)},
            {"r", detail::opt_real(rep.r)},
            {"figure", rep.figure ? detail::figure_json(*rep.figure) : OrderedJson(nullptr)},
            {"counterexamples", arr},
            {"summary", summary}};
}

/// One row per locus point: index, coordinates (or label), figure value.
inline void write_locus_csv(std::ostream& out, const SpaceSample& s, std::span<const LocusEntry> locus) {
    const Point& ref = s[0];
    out << "index";
    if (ref.is_label()) out << ",label";
    else if (ref.dim() == 1) out << ",x";
    else
        for (std::size_t d = 0; d < ref.dim(); ++d) out << ",x" << d + 1;
    out << ",value\n";
    for (const auto& e : locus) {
        out << e.index;
        const Point& p = s[e.index];
        if (p.is_label()) out << ',' << p.label();
        else
            for (double c : p.coords()) out << ',' << format_real(c);
        out << ',' << format_real(e.value) << '\n';
    }
}

}  // namespace sbfig
