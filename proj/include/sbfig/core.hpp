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
#include <cmath>
#include <compare>
#include <cstdio>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sbfig {

/// Malformed or mismatched input (wrong representation, unknown label, bad file).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value was requested outside the domain of a definition
/// (e.g. a ratio at its excluded anchor, phi at t <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation's stated hypothesis does not hold on the given data.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// |a - b| <= tol * max(1, |a|, |b|)
inline bool near_equal(double a, double b, double tol = kDefaultTolerance) {
    if (a == b) return true;
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

/// An element of a space: either a symbolic label or a real vector.
/// Equality is exact (labels by string, coordinates by value).
class Point {
public:
    using Coords = std::vector<double>;

    Point() : value_(Coords{0.0}) {}

    static Point real(double x) { return Point(Coords{x}); }
    static Point vec(Coords c) {
        if (c.empty()) throw InputError("point must have dimension >= 1");
        return Point(std::move(c));
    }
    static Point labeled(std::string name) {
        if (name.empty()) throw InputError("point label must be non-empty");
        return Point(std::move(name));
    }

    bool is_label() const { return std::holds_alternative<std::string>(value_); }
    bool is_coords() const { return !is_label(); }

    const std::string& label() const {
        if (!is_label()) throw InputError("point has coordinates, not a label");
        return std::get<std::string>(value_);
    }
    std::span<const double> coords() const {
        if (is_label()) throw InputError("point '" + std::get<std::string>(value_) + "' is a label, not coordinates");
        return std::get<Coords>(value_);
    }
    /// 0 for labels.
    std::size_t dim() const { return is_label() ? 0 : std::get<Coords>(value_).size(); }

    /// The scalar of a 1-dimensional point.
    double scalar() const {
        auto c = coords();
        if (c.size() != 1) throw InputError("expected a real (1-dimensional) point, got dimension " + std::to_string(c.size()));
        return c[0];
    }

    bool same_representation(const Point& other) const {
        return is_label() == other.is_label() && dim() == other.dim();
    }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        return a.value_ <=> b.value_;
    }

private:
    explicit Point(Coords c) : value_(std::move(c)) {}
    explicit Point(std::string s) : value_(std::move(s)) {}

    std::variant<std::string, Coords> value_;
};


inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string to_string(const Point& p) {
    if (p.is_label()) return p.label();
    auto c = p.coords();
    if (c.size() == 1) return format_real(c[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += format_real(c[i]);
    }
    return out + ")";
}

}  // namespace sbfig
