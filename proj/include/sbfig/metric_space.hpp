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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbfig/core.hpp"

namespace sbfig {

// ---------------------------------------------------------------------------
// Two-argument base metrics
// ---------------------------------------------------------------------------

enum class BaseKind { abs, lp, table };

/// A two-argument distance d(x, y) together with its relaxation constant b,
/// i.e. the factor in d(x,z) <= b [d(x,y) + d(y,z)].
class BaseMetricSpec {
public:
    /// |x - y| on the real line.
    static BaseMetricSpec absolute() { return BaseMetricSpec(BaseKind::abs, 1.0, 1.0); }

    /// (sum |x_i - y_i|^p)^(1/p) on R^n, p >= 1.
    static BaseMetricSpec lp(double p) {
        if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("lp exponent must be a finite real >= 1");
        return BaseMetricSpec(BaseKind::lp, p, 1.0);
    }

    /// Explicit distance matrix over labeled points. The matrix must have a
    /// zero diagonal, be symmetric and non-negative. `relaxation` is the claimed b.
    static BaseMetricSpec table(std::vector<std::string> labels, std::vector<std::vector<double>> matrix,
                                double relaxation = 1.0) {
        const std::size_t n = labels.size();
        if (n == 0) throw InputError("table metric needs at least one label");
        if (matrix.size() != n) throw InputError("table metric: matrix row count does not match label count");
        if (!(relaxation >= 1.0)) throw InputError("table metric: relaxation constant must be >= 1");
        BaseMetricSpec d(BaseKind::table, 1.0, relaxation);
        d.flat_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (matrix[i].size() != n) throw InputError("table metric: row " + std::to_string(i) + " has wrong length");
            for (std::size_t j = 0; j < n; ++j) {
                const double v = matrix[i][j];
                if (!std::isfinite(v) || v < 0) throw InputError("table metric: entries must be finite and >= 0");
                d.flat_[i * n + j] = v;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (d.flat_[i * n + i] != 0.0) throw InputError("table metric: diagonal must be zero (label '" + labels[i] + "')");
            for (std::size_t j = i + 1; j < n; ++j)
                if (d.flat_[i * n + j] != d.flat_[j * n + i])
                    throw InputError("table metric: matrix is not symmetric at ('" + labels[i] + "', '" + labels[j] + "')");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!d.index_.emplace(labels[i], i).second) throw InputError("table metric: duplicate label '" + labels[i] + "'");
        }
        d.labels_ = std::move(labels);
        return d;
    }

    BaseKind kind() const { return kind_; }
    double exponent() const { return p_; }
    double relaxation() const { return relaxation_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double table_entry(std::size_t i, std::size_t j) const { return flat_.at(i * labels_.size() + j); }

    /// Throws InputError if `x` cannot be an argument of this metric.
    void check_point(const Point& x) const {
        switch (kind_) {
            case BaseKind::abs:
                if (x.is_label() || x.dim() != 1) throw InputError("abs metric expects real (1-dimensional) points, got " + to_string(x));
                break;
            case BaseKind::lp:
                if (x.is_label()) throw InputError("lp metric expects coordinate points, got label '" + x.label() + "'");
                break;
            case BaseKind::table:
                if (!x.is_label()) throw InputError("table metric expects labeled points, got " + to_string(x));
                if (!index_.count(x.label())) throw InputError("table metric: unknown label '" + x.label() + "'");
                break;
        }
    }

    double operator()(const Point& x, const Point& y) const {
        switch (kind_) {
            case BaseKind::abs: {
                return std::fabs(x.scalar() - y.scalar());
            }
            case BaseKind::lp: {
                auto a = x.coords();
                auto b = y.coords();
                if (a.size() != b.size())
                    throw InputError("lp metric: dimension mismatch (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
                double acc = 0.0;
                for (std::size_t i = 0; i < a.size(); ++i) acc += std::pow(std::fabs(a[i] - b[i]), p_);
                return p_ == 1.0 ? acc : std::pow(acc, 1.0 / p_);
            }
            case BaseKind::table: {
                return flat_[lookup(x) * labels_.size() + lookup(y)];
            }
        }
        return 0.0;
    }

private:
    BaseMetricSpec(BaseKind kind, double p, double relaxation) : kind_(kind), p_(p), relaxation_(relaxation) {}

    std::size_t lookup(const Point& x) const {
        auto it = index_.find(x.label());
        if (it == index_.end()) throw InputError("table metric: unknown label '" + x.label() + "'");
        return it->second;
    }

    BaseKind kind_;
    double p_;
    double relaxation_;
    std::vector<std::string> labels_;
    std::vector<double> flat_;
    std::map<std::string, std::size_t> index_;
};

inline double eval_base(const BaseMetricSpec& d, const Point& x, const Point& y) { return d(x, y); }

// ---------------------------------------------------------------------------
// Three-argument S_b-metric constructions
// ---------------------------------------------------------------------------

enum class SbKind { power_sum, from_b_metric, s_variant };

class SbMetricSpec {
public:
    /// c * [d(x,y) + d(y,z) + d(x,z)]^p with p > 1, c > 0.
    static SbMetricSpec power_sum(BaseMetricSpec base, double p, double scale, double claimed_b) {
        if (!(p > 1.0) || !std::isfinite(p)) throw InputError("power_sum exponent must be a finite real > 1");
        if (!(scale > 0.0) || !std::isfinite(scale)) throw InputError("power_sum scale must be a finite real > 0");
        SbMetricSpec m(SbKind::power_sum, claimed_b);
        m.base_ = std::move(base);
        m.p_ = p;
        m.scale_ = scale;
        return m;
    }

    /// d(x,z) + d(y,z); inherits b from the base metric.
    static SbMetricSpec from_b_metric(BaseMetricSpec base) {
        const double b = base.relaxation();
        SbMetricSpec m(SbKind::from_b_metric, b);
        m.base_ = std::move(base);
        return m;
    }

    /// |x - z| + |x + z - 2y| on the real line.
    static SbMetricSpec s_variant(double claimed_b = 1.0) { return SbMetricSpec(SbKind::s_variant, claimed_b); }

    SbKind kind() const { return kind_; }
    double claimed_b() const { return claimed_b_; }
    double exponent() const { return p_; }
    double scale() const { return scale_; }
    const std::optional<BaseMetricSpec>& base() const { return base_; }

    SbMetricSpec with_claimed_b(double b) const {
        SbMetricSpec copy = *this;
        copy.claimed_b_ = checked_b(b);
        return copy;
    }

    void check_point(const Point& x) const {
        if (kind_ == SbKind::s_variant) {
            if (x.is_label() || x.dim() != 1) throw InputError("s_variant expects real (1-dimensional) points, got " + to_string(x));
            return;
        }
        base_->check_point(x);
    }

    double operator()(const Point& x, const Point& y, const Point& z) const {
        switch (kind_) {
            case SbKind::power_sum: {
                const auto& d = *base_;
                return scale_ * std::pow(d(x, y) + d(y, z) + d(x, z), p_);
            }
            case SbKind::from_b_metric: {
                const auto& d = *base_;
                return d(x, z) + d(y, z);
            }
            case SbKind::s_variant: {
                check_point(x);
                check_point(y);
                check_point(z);
                const double a = x.scalar(), b = y.scalar(), c = z.scalar();
                return std::fabs(a - c) + std::fabs(a + c - 2.0 * b);
            }
        }
        return 0.0;
    }

    /// S_b(x, x, y), the quantity every figure is built from.
    double pair(const Point& x, const Point& y) const { return (*this)(x, x, y); }

private:
    SbMetricSpec(SbKind kind, double claimed_b) : kind_(kind), claimed_b_(checked_b(claimed_b)) {}

    static double checked_b(double b) {
        if (!(b >= 1.0) || !std::isfinite(b)) throw InputError("relaxation constant b must be a finite real >= 1");
        return b;
    }

    SbKind kind_;
    double claimed_b_;
    std::optional<BaseMetricSpec> base_;
    double p_ = 1.0;
    double scale_ = 1.0;
};

inline double eval_sb(const SbMetricSpec& m, const Point& x, const Point& y, const Point& z) { return m(x, y, z); }

inline SbMetricSpec sb_from_b_metric(const BaseMetricSpec& d) { return SbMetricSpec::from_b_metric(d); }

// ---------------------------------------------------------------------------
// Finite samples
// ---------------------------------------------------------------------------

/// A regular grid over [min, max]^dim with `steps` nodes per axis.
struct GridSpec {
    std::size_t dim = 1;
    double min = 0.0;
    double max = 1.0;
    std::size_t steps = 2;

    /// Coordinate of node i along one axis. Computed as a single division of
    /// an exactly representable numerator for integer bounds, so nodes such as
    /// 0.5 or 0.37 come out correctly rounded.
    double node(std::size_t i) const {
        if (steps == 1) return min;
        const double n = static_cast<double>(steps - 1);
        const double k = static_cast<double>(i);
        return (min * (n - k) + max * k) / n;
    }

    std::size_t node_count() const {
        std::size_t total = 1;
        for (std::size_t d = 0; d < dim; ++d) total *= steps;
        return total;
    }

    /// Row-major: the last axis varies fastest.
    std::vector<std::size_t> unravel(std::size_t flat) const {
        std::vector<std::size_t> idx(dim);
        for (std::size_t d = dim; d-- > 0;) {
            idx[d] = flat % steps;
            flat /= steps;
        }
        return idx;
    }

    std::vector<Point> expand() const {
        if (dim == 0) throw InputError("grid dimension must be >= 1");
        if (steps == 0) throw InputError("grid steps must be >= 1");
        if (!(min < max) && steps > 1) throw InputError("grid requires min < max");
        std::vector<Point> pts;
        const std::size_t total = node_count();
        pts.reserve(total);
        for (std::size_t flat = 0; flat < total; ++flat) {
            auto idx = unravel(flat);
            Point::Coords c(dim);
            for (std::size_t d = 0; d < dim; ++d) c[d] = node(idx[d]);
            pts.push_back(Point::vec(std::move(c)));
        }
        return pts;
    }
};

/// Where a grid sits inside a sample's point list.
struct GridLayout {
    GridSpec spec;
    std::size_t offset = 0;
};

/// The pair (X, S_b) restricted to a finite, ordered list of distinct points.
class SpaceSample {
public:
    SpaceSample(std::vector<Point> points, SbMetricSpec metric, std::optional<GridLayout> grid = std::nullopt)
        : points_(std::move(points)), metric_(std::move(metric)), grid_(std::move(grid)) {
        if (points_.empty()) throw InputError("sample must contain at least one point");
        for (const auto& p : points_) {
            if (!p.same_representation(points_.front()))
                throw InputError("sample mixes point representations: " + to_string(points_.front()) + " and " + to_string(p));
            if (p.is_coords())
                for (double c : p.coords())
                    if (!std::isfinite(c)) throw InputError("sample point has a non-finite coordinate");
            metric_.check_point(p);
        }
        order_.resize(points_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
        for (std::size_t i = 1; i < order_.size(); ++i)
            if (points_[order_[i - 1]] == points_[order_[i]])
                throw InputError("sample points must be distinct; duplicate " + to_string(points_[order_[i]]));
        if (grid_) {
            const auto& g = *grid_;
            if (g.offset + g.spec.node_count() > points_.size()) throw InputError("grid layout exceeds sample size");
        }
    }

    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    const SbMetricSpec& metric() const { return metric_; }
    double claimed_b() const { return metric_.claimed_b(); }
    const std::optional<GridLayout>& grid() const { return grid_; }

    std::optional<std::size_t> index_of(const Point& x) const {
        auto it = std::lower_bound(order_.begin(), order_.end(), x,
                                   [this](std::size_t a, const Point& key) { return points_[a] < key; });
        if (it != order_.end() && points_[*it] == x) return *it;
        return std::nullopt;
    }

    /// S_b(x_i, x_i, x_j)
    double pair(std::size_t i, std::size_t j) const { return metric_.pair(points_[i], points_[j]); }

    /// The n x n matrix of S_b(x_i, x_i, x_j), row-major.
    std::vector<double> pair_matrix() const {
        const std::size_t n = size();
        std::vector<double> out(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] = pair(i, j);
        return out;
    }

private:
    std::vector<Point> points_;
    SbMetricSpec metric_;
    std::optional<GridLayout> grid_;
    std::vector<std::size_t> order_;
};

}  // namespace sbfig
