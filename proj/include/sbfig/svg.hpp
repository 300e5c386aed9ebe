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

#include <cstddef>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbfig/core.hpp"
#include "sbfig/expression.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/metric_space.hpp"

namespace sbfig {

/// Fixes one grid axis of a 3-dimensional grid at a node value.
struct SlicePlane {
    std::size_t axis = 2;
    double value = 0.0;
};

/// "z=1", "x3=0.5", "2=0" (0-based axis number).
inline SlicePlane parse_slice(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw InputError("slice must look like AXIS=VALUE, got \"" + text + "\"");
    const std::string axis = text.substr(0, eq);
    SlicePlane s;
    if (axis == "x" || axis == "x1" || axis == "0") s.axis = 0;
    else if (axis == "y" || axis == "x2" || axis == "1") s.axis = 1;
    else if (axis == "z" || axis == "x3" || axis == "2") s.axis = 2;
    else throw InputError("unknown slice axis '" + axis + "'");
    s.value = evaluate_expression(text.substr(eq + 1));
    return s;
}

/// A 2-dimensional view of a sample grid: node values and which cells to shade.
struct SliceImage {
    GridSpec grid;                   // the 2-D grid of the slice
    std::size_t axis_u = 0, axis_v = 1;  // original axes shown horizontally / vertically
    std::vector<std::size_t> cells;  // shaded cells, row-major over (steps-1)^2
    bool filled = false;             // disc: shaded cells are interior cells
};

inline SliceImage slice_figure(const SpaceSample& sample, const FigureSpec& f, std::optional<SlicePlane> slice) {
    if (!sample.grid()) throw InputError("plot needs a grid space");
    f.validate();
    const auto& layout = *sample.grid();
    const auto& g = layout.spec;
    if (g.dim != 2 && g.dim != 3) throw InputError("plot supports 2- or 3-dimensional grids only");
    if (g.dim == 3 && !slice) throw InputError("a 3-dimensional grid needs --slice AXIS=VALUE");

    std::size_t fixed_axis = 3, fixed_node = 0;
    if (g.dim == 3) {
        fixed_axis = slice->axis;
        bool found = false;
        for (std::size_t k = 0; k < g.steps && !found; ++k)
            if (near_equal(g.node(k), slice->value)) {
                fixed_node = k;
                found = true;
            }
        if (!found) throw InputError("slice value " + format_real(slice->value) + " is not a grid node");
    }

    SliceImage img;
    img.grid = GridSpec{2, g.min, g.max, g.steps};
    std::vector<std::size_t> free_axes;
    for (std::size_t a = 0; a < g.dim; ++a)
        if (a != fixed_axis) free_axes.push_back(a);
    img.axis_u = free_axes[0];
    img.axis_v = free_axes[1];

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> values(g.steps * g.steps);
    std::vector<char> member(values.size());
    for (std::size_t u = 0; u < g.steps; ++u)
        for (std::size_t v = 0; v < g.steps; ++v) {
            std::size_t idx[3] = {0, 0, 0};
            idx[img.axis_u] = u;
            idx[img.axis_v] = v;
            if (g.dim == 3) idx[fixed_axis] = fixed_node;
            std::size_t flat = 0;
            for (std::size_t a = 0; a < g.dim; ++a) flat = flat * g.steps + idx[a];
            const Point& x = sample[layout.offset + flat];
            const std::size_t node = u * g.steps + v;
            if (f.kind == FigureKind::apollonius && x == f.anchors[1]) {
                values[node] = nan;
                continue;
            }
            const double val = figure_value(f, sample.metric(), x);
            values[node] = val - f.r;
            member[node] = value_is_member(f, val);
        }

    if (f.kind == FigureKind::disc) {
        img.filled = true;
        for (std::size_t u = 0; u + 1 < g.steps; ++u)
            for (std::size_t v = 0; v + 1 < g.steps; ++v) {
                const std::size_t n0 = u * g.steps + v;
                if (member[n0] || member[n0 + 1] || member[n0 + g.steps] || member[n0 + g.steps + 1])
                    img.cells.push_back(u * (g.steps - 1) + v);
            }
    } else {
        img.cells = sign_change_cells(values, 2, g.steps, f.tol * std::max(1.0, f.r));
    }
    return img;
}

namespace detail {
inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}
}  // namespace detail

/// 800 x 800 document; the grid's [min, max]^2 maps onto the frame [60, 780].
inline void write_svg(std::ostream& out, const SliceImage& img, const std::string& title) {
    constexpr double kSize = 800.0, kLo = 60.0, kHi = 780.0;
    const auto& g = img.grid;
    const double cell = (kHi - kLo) / static_cast<double>(g.steps - 1);
    const char* axis_names[] = {"x", "y", "z"};
    using detail::svg_num;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
        << kSize << ' ' << kSize << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">" << title
        << "</text>\n";
    out << "<g fill=\"" << (img.filled ? "#7fa7d9" : "#1f4e8c") << "\" stroke=\"none\">\n";
    for (auto c : img.cells) {
        const std::size_t u = c / (g.steps - 1), v = c % (g.steps - 1);
        // v grows upward
        const double x = kLo + static_cast<double>(u) * cell;
        const double y = kHi - static_cast<double>(v + 1) * cell;
        out << "<rect x=\"" << svg_num(x) << "\" y=\"" << svg_num(y) << "\" width=\"" << svg_num(cell) << "\" height=\""
            << svg_num(cell) << "\"/>\n";
    }
    out << "</g>\n";
    out << "<rect x=\"" << kLo << "\" y=\"" << kLo << "\" width=\"" << kHi - kLo << "\" height=\"" << kHi - kLo
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const std::string lo = format_real(g.min), hi = format_real(g.max);
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<text x=\"" << kLo << "\" y=\"" << kHi + 18 << "\" text-anchor=\"middle\">" << lo << "</text>\n";
    out << "<text x=\"" << kHi << "\" y=\"" << kHi + 18 << "\" text-anchor=\"middle\">" << hi << "</text>\n";
    out << "<text x=\"400\" y=\"" << kHi + 18 << "\" text-anchor=\"middle\">" << axis_names[img.axis_u] << "</text>\n";
    out << "<text x=\"" << kLo - 6 << "\" y=\"" << kHi << "\" text-anchor=\"end\">" << lo << "</text>\n";
    out << "<text x=\"" << kLo - 6 << "\" y=\"" << kLo + 4 << "\" text-anchor=\"end\">" << hi << "</text>\n";
    out << "<text x=\"" << kLo - 6 << "\" y=\"400\" text-anchor=\"end\">" << axis_names[img.axis_v] << "</text>\n";
    out << "</g>\n</svg>\n";
}

}  // namespace sbfig
