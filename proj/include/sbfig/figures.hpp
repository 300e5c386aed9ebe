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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbfig/core.hpp"
#include "sbfig/metric_space.hpp"
#include "sbfig/parallel.hpp"

namespace sbfig {

enum class FigureKind { circle, disc, ellipse, hyperbola, cassini, apollonius };

inline std::string_view to_string(FigureKind k) {
    switch (k) {
        case FigureKind::circle: return "circle";
        case FigureKind::disc: return "disc";
        case FigureKind::ellipse: return "ellipse";
        case FigureKind::hyperbola: return "hyperbola";
        case FigureKind::cassini: return "cassini";
        case FigureKind::apollonius: return "apollonius";
    }
    return "?";
}

inline std::optional<FigureKind> parse_figure_kind(std::string_view s) {
    for (auto k : {FigureKind::circle, FigureKind::disc, FigureKind::ellipse, FigureKind::hyperbola,
                   FigureKind::cassini, FigureKind::apollonius})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

inline std::size_t anchor_count(FigureKind k) {
    return (k == FigureKind::circle || k == FigureKind::disc) ? 1 : 2;
}

struct FigureSpec {
    FigureKind kind = FigureKind::circle;
    std::vector<Point> anchors;
    double r = 0.0;
    double tol = kDefaultTolerance;

    void validate() const {
        if (anchors.size() != anchor_count(kind))
            throw InputError(std::string(to_string(kind)) + " needs " + std::to_string(anchor_count(kind)) +
                             " anchor(s), got " + std::to_string(anchors.size()));
        if (!(r >= 0.0) || !std::isfinite(r)) throw InputError("figure radius must be a finite real >= 0");
        if (!(tol > 0.0)) throw InputError("figure tolerance must be > 0");
    }

    bool is_equality_figure() const { return kind != FigureKind::disc; }
};

/// The left-hand side of the figure's defining relation at x:
///   circle, disc  S(x,x,x0)
///   ellipse       S(x,x,x1) + S(x,x,x2)
///   hyperbola     |S(x,x,x1) - S(x,x,x2)|
///   cassini       S(x,x,x1) * S(x,x,x2)
///   apollonius    S(x,x,x1) / S(x,x,x2), undefined at x = x2
inline double figure_value(FigureKind kind, const SbMetricSpec& m, std::span<const Point> anchors, const Point& x) {
    if (anchors.size() != anchor_count(kind))
        throw InputError(std::string(to_string(kind)) + " needs " + std::to_string(anchor_count(kind)) + " anchor(s)");
    if (anchor_count(kind) == 1) return m.pair(x, anchors[0]);
    if (kind == FigureKind::apollonius && x == anchors[1])
        throw DomainError("apollonius figure is undefined at its second anchor " + to_string(x) + " (excluded point)");
    const double s1 = m.pair(x, anchors[0]);
    const double s2 = m.pair(x, anchors[1]);
    switch (kind) {
        case FigureKind::ellipse: return s1 + s2;
        case FigureKind::hyperbola: return std::fabs(s1 - s2);
        case FigureKind::cassini: return s1 * s2;
        case FigureKind::apollonius: return s1 / s2;
        default: break;
    }
    return 0.0;
}

inline double figure_value(const FigureSpec& f, const SbMetricSpec& m, const Point& x) {
    return figure_value(f.kind, m, f.anchors, x);
}

/// Disc: value <= r (boundary included, relative band tol).
/// Others: |value - r| <= tol * max(1, r).
inline bool value_is_member(const FigureSpec& f, double value) {
    if (f.kind == FigureKind::disc) return value <= f.r * (1.0 + f.tol) + f.tol;
    return std::fabs(value - f.r) <= f.tol * std::max(1.0, f.r);
}

inline bool membership(const FigureSpec& f, const SbMetricSpec& m, const Point& x) {
    f.validate();
    return value_is_member(f, figure_value(f, m, x));
}

struct LocusEntry {
    std::size_t index;
    double value;
};

/// Sample indices (with their figure values) whose membership holds, in index order.
/// The apollonius excluded point is skipped.
inline std::vector<LocusEntry> locus_with_values(const SpaceSample& sample, const FigureSpec& f, unsigned threads = 1) {
    f.validate();
    for (const auto& a : f.anchors) sample.metric().check_point(a);
    auto parts = parallel_chunks(sample.size(), threads, [&](std::size_t begin, std::size_t end) {
        std::vector<LocusEntry> out;
        for (std::size_t i = begin; i < end; ++i) {
            const Point& x = sample[i];
            if (f.kind == FigureKind::apollonius && x == f.anchors[1]) continue;
            const double v = figure_value(f, sample.metric(), x);
            if (value_is_member(f, v)) out.push_back({i, v});
        }
        return out;
    });
    return concat(std::move(parts));
}

inline std::vector<std::size_t> locus(const SpaceSample& sample, const FigureSpec& f, unsigned threads = 1) {
    std::vector<std::size_t> idx;
    for (const auto& e : locus_with_values(sample, f, threads)) idx.push_back(e.index);
    return idx;
}

// ---------------------------------------------------------------------------
// Level sets on regular grids
// ---------------------------------------------------------------------------

/// Cells of a `steps`^dim node grid (row-major) whose corner values change sign.
/// Values within `zero_band` of zero count as both signs; NaN corners are ignored.
/// Cells are indexed row-major over (steps - 1)^dim.
inline std::vector<std::size_t> sign_change_cells(std::span<const double> node_values, std::size_t dim,
                                                  std::size_t steps, double zero_band) {
    if (steps < 2) return {};
    std::size_t cells_total = 1, nodes_total = 1;
    for (std::size_t d = 0; d < dim; ++d) {
        cells_total *= steps - 1;
        nodes_total *= steps;
    }
    if (node_values.size() != nodes_total) throw InputError("sign_change_cells: node value count does not match grid");

    // Flat-index offsets of the 2^dim corners relative to a cell's lowest node.
    std::vector<std::size_t> corner_offsets{0};
    std::size_t stride = 1;
    for (std::size_t d = dim; d-- > 0;) {
        const std::size_t count = corner_offsets.size();
        for (std::size_t c = 0; c < count; ++c) corner_offsets.push_back(corner_offsets[c] + stride);
        stride *= steps;
    }

    std::vector<std::size_t> out;
    std::vector<std::size_t> cell(dim, 0);
    for (std::size_t flat = 0; flat < cells_total; ++flat) {
        std::size_t base = 0;
        for (std::size_t d = 0; d < dim; ++d) base = base * steps + cell[d];
        bool nonpos = false, nonneg = false;
        for (auto off : corner_offsets) {
            const double v = node_values[base + off];
            if (std::isnan(v)) continue;
            if (v <= zero_band) nonpos = true;
            if (v >= -zero_band) nonneg = true;
        }
        if (nonpos && nonneg) out.push_back(flat);
        for (std::size_t d = dim; d-- > 0;) {
            if (++cell[d] < steps - 1) break;
            cell[d] = 0;
        }
    }
    return out;
}

/// figure_value - r at every grid node of the sample (NaN at an excluded apollonius node).
inline std::vector<double> grid_offsets(const SpaceSample& sample, const FigureSpec& f, unsigned threads = 1) {
    if (!sample.grid()) throw InputError("sample has no grid layout");
    f.validate();
    const auto& g = *sample.grid();
    auto parts = parallel_chunks(g.spec.node_count(), threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> out;
        out.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            const Point& x = sample[g.offset + i];
            if (f.kind == FigureKind::apollonius && x == f.anchors[1])
                out.push_back(std::numeric_limits<double>::quiet_NaN());
            else
                out.push_back(figure_value(f, sample.metric(), x) - f.r);
        }
        return out;
    });
    return concat(std::move(parts));
}

/// Grid cells crossed by the level set {figure_value = r}.
inline std::vector<std::size_t> level_set_cells(const SpaceSample& sample, const FigureSpec& f, unsigned threads = 1) {
    const auto values = grid_offsets(sample, f, threads);
    const auto& g = sample.grid()->spec;
    return sign_change_cells(values, g.dim, g.steps, f.tol * std::max(1.0, f.r));
}

}  // namespace sbfig
