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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbfig/core.hpp"
#include "sbfig/metric_space.hpp"
#include "sbfig/parallel.hpp"

namespace sbfig {

struct AxiomOptions {
    double tol = kDefaultTolerance;
    unsigned threads = 1;
    /// Cap on listed S_b2 witnesses; the total count is always exact.
    std::size_t max_listed = std::numeric_limits<std::size_t>::max();
};

/// S_b(x_i, x_j, x_k) breaks "zero iff x = y = z".
/// expected_zero: the three points coincide but the value is not zero.
struct S1Violation {
    std::size_t i, j, k;
    double value;
    bool expected_zero;
};

/// S_b(x,y,z) > b [S_b(x,x,a) + S_b(y,y,a) + S_b(z,z,a)].
struct S2Violation {
    std::size_t i, j, k, a;
    double lhs;
    double rhs_sum;  // without the factor b
    double ratio;    // lhs / rhs_sum, +inf when rhs_sum == 0
};

struct AxiomReport {
    double b = 1.0;
    std::vector<S1Violation> s1_violations;
    std::vector<S2Violation> s2_violations;
    std::size_t s2_violation_count = 0;
    /// Max of the S_b2 ratio over quadruples with a positive right-hand side;
    /// empty when every right-hand side vanishes (single-point sample).
    std::optional<double> minimal_b_estimate;
    bool symmetric = true;

    bool passed() const { return s1_violations.empty() && s2_violation_count == 0; }
};

struct SymmetryReport {
    bool symmetric = true;
    /// Pairs (i, j), i < j, with S_b(x_i,x_i,x_j) != S_b(x_j,x_j,x_i).
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;
};

namespace detail {

struct SweepPartial {
    std::vector<S1Violation> s1;
    std::vector<S2Violation> s2;
    std::size_t s2_count = 0;
    double max_ratio = -1.0;  // < 0 means no positive denominator seen
};

/// Exhaustive O(n^4) sweep over ordered quadruples, chunked over the first index.
inline std::vector<SweepPartial> axiom_sweep(const SpaceSample& sample, std::span<const double> pairs, double b,
                                             const AxiomOptions& opt, bool collect) {
    const std::size_t n = sample.size();
    const auto& m = sample.metric();
    const auto& pts = sample.points();
    return parallel_chunks(n, opt.threads, [&](std::size_t begin, std::size_t end) {
        SweepPartial part;
        for (std::size_t i = begin; i < end; ++i) {
            const double* pi = &pairs[i * n];
            for (std::size_t j = 0; j < n; ++j) {
                const double* pj = &pairs[j * n];
                for (std::size_t k = 0; k < n; ++k) {
                    const double* pk = &pairs[k * n];
                    const double v = m(pts[i], pts[j], pts[k]);
                    if (collect) {
                        const bool coincide = i == j && j == k;
                        const bool is_zero = near_equal(v, 0.0, opt.tol);
                        if (coincide != is_zero) part.s1.push_back({i, j, k, v, coincide});
                    }
                    for (std::size_t a = 0; a < n; ++a) {
                        const double sum = pi[a] + pj[a] + pk[a];
                        if (sum > 0.0) part.max_ratio = std::max(part.max_ratio, v / sum);
                        if (!collect) continue;
                        const double bound = b * sum;
                        if (v > bound && !near_equal(v, bound, opt.tol)) {
                            ++part.s2_count;
                            if (part.s2.size() < opt.max_listed)
                                part.s2.push_back({i, j, k, a, v, sum,
                                                   sum > 0.0 ? v / sum : std::numeric_limits<double>::infinity()});
                        }
                    }
                }
            }
        }
        return part;
    });
}

}  // namespace detail

inline SymmetryReport check_symmetry(const SpaceSample& sample, double tol = kDefaultTolerance);

/// Checks both S_b-metric axioms over every ordered triple / quadruple of the
/// sample against the constant `b` (any b > 0 is accepted, so constants below 1
/// can be probed too).
inline AxiomReport verify_axioms(const SpaceSample& sample, double b, const AxiomOptions& opt = {}) {
    if (!(b > 0.0)) throw InputError("axiom check needs b > 0");
    const auto pairs = sample.pair_matrix();
    auto parts = detail::axiom_sweep(sample, pairs, b, opt, /*collect=*/true);

    AxiomReport rep;
    rep.b = b;
    double max_ratio = -1.0;
    for (auto& p : parts) {
        std::move(p.s1.begin(), p.s1.end(), std::back_inserter(rep.s1_violations));
        for (auto& v : p.s2)
            if (rep.s2_violations.size() < opt.max_listed) rep.s2_violations.push_back(v);
        rep.s2_violation_count += p.s2_count;
        max_ratio = std::max(max_ratio, p.max_ratio);
    }
    if (max_ratio >= 0.0) rep.minimal_b_estimate = max_ratio;
    rep.symmetric = check_symmetry(sample, opt.tol).symmetric;
    return rep;
}

/// The tightest constant for which S_b2 holds on the sample. Empty when no
/// quadruple has a positive right-hand side.
inline std::optional<double> minimal_b(const SpaceSample& sample, const AxiomOptions& opt = {}) {
    const auto pairs = sample.pair_matrix();
    auto parts = detail::axiom_sweep(sample, pairs, 1.0, opt, /*collect=*/false);
    double max_ratio = -1.0;
    for (const auto& p : parts) max_ratio = std::max(max_ratio, p.max_ratio);
    if (max_ratio < 0.0) return std::nullopt;
    return max_ratio;
}

// ---------------------------------------------------------------------------
// b-metric induced by a symmetric S_b-metric: d(x, y) = S_b(x, x, y)
// ---------------------------------------------------------------------------

using SbFunction = std::function<double(const Point&, const Point&, const Point&)>;

/// Pairs (i, j), i < j, with S(x_i,x_i,x_j) != S(x_j,x_j,x_i).
template <typename Sb>
std::vector<std::pair<std::size_t, std::size_t>> asymmetric_pairs(const Sb& s, std::span<const Point> pts,
                                                                  double tol = kDefaultTolerance) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!near_equal(s(pts[i], pts[i], pts[j]), s(pts[j], pts[j], pts[i]), tol)) out.emplace_back(i, j);
    return out;
}

class InducedBMetric {
public:
    InducedBMetric(SbFunction source, double claimed_b) : source_(std::move(source)), claimed_b_(claimed_b) {}

    double operator()(const Point& x, const Point& y) const { return source_(x, x, y); }

    double claimed_b() const { return claimed_b_; }
    /// The constant that can be derived for d from symmetry plus S_b2 with a = y.
    double derived_bound() const { return 2.0 * claimed_b_; }

private:
    SbFunction source_;
    double claimed_b_;
};

/// d(x, y) = S(x, x, y). The source must be symmetric on `pts`.
inline InducedBMetric b_metric_from_sb(SbFunction s, double claimed_b, std::span<const Point> pts,
                                       double tol = kDefaultTolerance) {
    auto bad = asymmetric_pairs(s, pts, tol);
    if (!bad.empty()) {
        auto [i, j] = bad.front();
        throw PreconditionError("S_b-metric is not symmetric on the sample: S(x,x,y) != S(y,y,x) for x = " +
                                to_string(pts[i]) + ", y = " + to_string(pts[j]));
    }
    return InducedBMetric(std::move(s), claimed_b);
}

inline InducedBMetric b_metric_from_sb(const SbMetricSpec& m, const SpaceSample& sample,
                                       double tol = kDefaultTolerance) {
    return b_metric_from_sb(SbFunction(m), m.claimed_b(), sample.points(), tol);
}

inline SymmetryReport check_symmetry(const SpaceSample& sample, double tol) {
    SymmetryReport rep;
    rep.witnesses = asymmetric_pairs(sample.metric(), std::span<const Point>(sample.points()), tol);
    rep.symmetric = rep.witnesses.empty();
    return rep;
}

struct TriangleViolation {
    std::size_t i, j, k;
    double lhs;  // d(x_i, x_k)
    double rhs;  // b [d(x_i, x_j) + d(x_j, x_k)]
};

/// Relaxed triangle inequality d(x,z) <= b [d(x,y) + d(y,z)] over all ordered triples.
template <typename Distance>
std::vector<TriangleViolation> triangle_violations(std::span<const Point> pts, const Distance& d, double b,
                                                   double tol = kDefaultTolerance) {
    const std::size_t n = pts.size();
    std::vector<double> dm(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dm[i * n + j] = d(pts[i], pts[j]);
    std::vector<TriangleViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const double lhs = dm[i * n + k];
                const double rhs = b * (dm[i * n + j] + dm[j * n + k]);
                if (lhs > rhs && !near_equal(lhs, rhs, tol)) out.push_back({i, j, k, lhs, rhs});
            }
    return out;
}

}  // namespace sbfig
