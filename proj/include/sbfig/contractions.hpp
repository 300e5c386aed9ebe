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

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbfig/core.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/metric_space.hpp"
#include "sbfig/parallel.hpp"

namespace sbfig {

// ---------------------------------------------------------------------------
// phi : (0, inf) -> (1, inf), non-decreasing
// ---------------------------------------------------------------------------

enum class PhiKind { affine, exp, exp_sqrt };

inline std::string_view to_string(PhiKind k) {
    switch (k) {
        case PhiKind::affine: return "affine";
        case PhiKind::exp: return "exp";
        case PhiKind::exp_sqrt: return "exp_sqrt";
    }
    return "?";
}

inline std::optional<PhiKind> parse_phi_kind(std::string_view s) {
    for (auto k : {PhiKind::affine, PhiKind::exp, PhiKind::exp_sqrt})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

/// affine: t + 1, exp: e^t, exp_sqrt: e^sqrt(t)
inline double eval_phi(PhiKind phi, double t) {
    if (!(t > 0.0)) throw DomainError("phi is defined on (0, inf) only, got t = " + format_real(t));
    switch (phi) {
        case PhiKind::affine: return t + 1.0;
        case PhiKind::exp: return std::exp(t);
        case PhiKind::exp_sqrt: return std::exp(std::sqrt(t));
    }
    return 0.0;
}

/// log(phi(t)), finite even where phi(t) overflows.
inline double log_phi(PhiKind phi, double t) {
    if (!(t > 0.0)) throw DomainError("phi is defined on (0, inf) only, got t = " + format_real(t));
    switch (phi) {
        case PhiKind::affine: return std::log1p(t);
        case PhiKind::exp: return t;
        case PhiKind::exp_sqrt: return std::sqrt(t);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Self-maps of a sample
// ---------------------------------------------------------------------------

/// Identity everywhere except the listed source -> image overrides.
struct SelfMapSpec {
    std::vector<std::pair<Point, Point>> overrides;

    static SelfMapSpec identity() { return {}; }
};

/// A self-map resolved against a sample: image index per point index.
class ResolvedMap {
public:
    ResolvedMap(const SpaceSample& sample, const SelfMapSpec& spec) : image_(sample.size()) {
        for (std::size_t i = 0; i < image_.size(); ++i) image_[i] = i;
        std::set<std::size_t> seen;
        for (const auto& [src, dst] : spec.overrides) {
            auto s = sample.index_of(src);
            if (!s) throw InputError("map source " + to_string(src) + " is not a point of the space");
            auto d = sample.index_of(dst);
            if (!d) throw InputError("map image " + to_string(dst) + " is not a point of the space");
            if (!seen.insert(*s).second) throw InputError("map lists source " + to_string(src) + " more than once");
            image_[*s] = *d;
        }
    }

    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    std::size_t size() const { return image_.size(); }
    bool fixes(std::size_t i) const { return image_.at(i) == i; }

private:
    std::vector<std::size_t> image_;
};

// ---------------------------------------------------------------------------
// The five contraction conditions
// ---------------------------------------------------------------------------

enum class ContractionKind { D, E, H, C, A };

inline std::string_view to_string(ContractionKind k) {
    switch (k) {
        case ContractionKind::D: return "D";
        case ContractionKind::E: return "E";
        case ContractionKind::H: return "H";
        case ContractionKind::C: return "C";
        case ContractionKind::A: return "A";
    }
    return "?";
}

inline std::optional<ContractionKind> parse_contraction_kind(std::string_view s) {
    for (auto k : {ContractionKind::D, ContractionKind::E, ContractionKind::H, ContractionKind::C, ContractionKind::A})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

/// The figure whose defining expression appears on the contraction's right-hand side.
inline FigureKind matching_figure(ContractionKind k) {
    switch (k) {
        case ContractionKind::D: return FigureKind::disc;
        case ContractionKind::E: return FigureKind::ellipse;
        case ContractionKind::H: return FigureKind::hyperbola;
        case ContractionKind::C: return FigureKind::cassini;
        case ContractionKind::A: return FigureKind::apollonius;
    }
    return FigureKind::disc;
}

struct ContractionSpec {
    ContractionKind kind = ContractionKind::D;
    std::vector<Point> anchors;
    double alpha = 0.5;
    PhiKind phi = PhiKind::affine;

    void validate() const {
        const std::size_t want = kind == ContractionKind::D ? 1 : 2;
        if (anchors.size() != want)
            throw InputError(std::string(to_string(kind)) + "-contraction needs " + std::to_string(want) + " anchor(s), got " +
                             std::to_string(anchors.size()));
        if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie strictly between 0 and 1");
    }

    /// Kinds E/H/C/A quantify over X minus both anchors; D over all of X.
    bool excludes(const Point& x) const {
        if (kind == ContractionKind::D) return false;
        return x == anchors[0] || x == anchors[1];
    }
};

inline double rhs_expression(ContractionKind kind, const SbMetricSpec& m, std::span<const Point> anchors, const Point& x) {
    if (kind != ContractionKind::D && anchors.size() == 2 && (x == anchors[0] || x == anchors[1]))
        throw DomainError(std::string(to_string(kind)) + "-contraction does not constrain its anchor " + to_string(x));
    return figure_value(matching_figure(kind), m, anchors, x);
}

enum class Verdict { holds, vacuous, violated, undefined };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::vacuous: return "vacuous";
        case Verdict::violated: return "violated";
        case Verdict::undefined: return "undefined";
    }
    return "?";
}

struct PointCheck {
    Verdict verdict = Verdict::vacuous;
    double displacement = 0.0;  // S_b(x, x, fx)
    double expression = 0.0;    // right-hand side argument of phi
    double lhs = 0.0;           // phi(displacement)
    double rhs = 0.0;           // phi(expression)^alpha
};

inline constexpr double kContractionSlack = 1e-12;

namespace detail {

/// phi(u) <= phi(v)^alpha + slack * max(1, rhs); falls back to log space on overflow.
inline bool phi_inequality(PhiKind phi, double alpha, double u, double v, double lhs, double rhs) {
    if (std::isfinite(lhs) && std::isfinite(rhs)) return lhs <= rhs + kContractionSlack * std::max(1.0, rhs);
    return log_phi(phi, u) <= alpha * log_phi(phi, v) + kContractionSlack;
}

}  // namespace detail

/// The implication S(x,x,fx) > 0  =>  phi(S(x,x,fx)) <= phi(expr(x))^alpha at sample point i.
inline PointCheck contraction_holds_at(const SpaceSample& sample, const ResolvedMap& f, const ContractionSpec& c,
                                       std::size_t i) {
    c.validate();
    const Point& x = sample[i];
    if (c.excludes(x)) throw DomainError(std::string(to_string(c.kind)) + "-contraction excludes anchor " + to_string(x));
    PointCheck pc;
    const std::size_t fi = f(i);
    pc.displacement = fi == i ? 0.0 : sample.pair(i, fi);
    if (!(pc.displacement > 0.0)) {
        pc.verdict = Verdict::vacuous;
        return pc;
    }
    pc.expression = rhs_expression(c.kind, sample.metric(), c.anchors, x);
    pc.lhs = eval_phi(c.phi, pc.displacement);
    if (!(pc.expression > 0.0)) {
        pc.verdict = Verdict::undefined;
        return pc;
    }
    pc.rhs = std::pow(eval_phi(c.phi, pc.expression), c.alpha);
    pc.verdict = detail::phi_inequality(c.phi, c.alpha, pc.displacement, pc.expression, pc.lhs, pc.rhs)
                     ? Verdict::holds
                     : Verdict::violated;
    return pc;
}

inline PointCheck contraction_holds_at(const SpaceSample& sample, const SelfMapSpec& f, const ContractionSpec& c,
                                       const Point& x) {
    auto i = sample.index_of(x);
    if (!i) throw InputError("point " + to_string(x) + " is not in the sample");
    return contraction_holds_at(sample, ResolvedMap(sample, f), c, *i);
}

struct ContractionViolation {
    std::size_t index;
    double lhs;
    double rhs;
    double expression;
};

struct ContractionReport {
    std::vector<ContractionViolation> violations;
    std::size_t holds_count = 0;
    std::size_t vacuous_count = 0;
    std::vector<std::size_t> excluded;
    /// Moved points whose right-hand side expression is 0 (phi not applicable there).
    std::vector<std::size_t> undefined;

    bool passed() const { return violations.empty() && undefined.empty(); }
};

inline ContractionReport check_contraction(const SpaceSample& sample, const ResolvedMap& f, const ContractionSpec& c,
                                           unsigned threads = 1) {
    c.validate();
    for (const auto& a : c.anchors) sample.metric().check_point(a);
    auto parts = parallel_chunks(sample.size(), threads, [&](std::size_t begin, std::size_t end) {
        ContractionReport part;
        for (std::size_t i = begin; i < end; ++i) {
            if (c.excludes(sample[i])) {
                part.excluded.push_back(i);
                continue;
            }
            const auto pc = contraction_holds_at(sample, f, c, i);
            switch (pc.verdict) {
                case Verdict::holds: ++part.holds_count; break;
                case Verdict::vacuous: ++part.vacuous_count; break;
                case Verdict::undefined: part.undefined.push_back(i); break;
                case Verdict::violated: part.violations.push_back({i, pc.lhs, pc.rhs, pc.expression}); break;
            }
        }
        return part;
    });
    ContractionReport rep;
    for (auto& p : parts) {
        rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
        rep.excluded.insert(rep.excluded.end(), p.excluded.begin(), p.excluded.end());
        rep.undefined.insert(rep.undefined.end(), p.undefined.begin(), p.undefined.end());
        rep.holds_count += p.holds_count;
        rep.vacuous_count += p.vacuous_count;
    }
    return rep;
}

inline ContractionReport check_contraction(const SpaceSample& sample, const SelfMapSpec& f, const ContractionSpec& c,
                                           unsigned threads = 1) {
    return check_contraction(sample, ResolvedMap(sample, f), c, threads);
}

}  // namespace sbfig
