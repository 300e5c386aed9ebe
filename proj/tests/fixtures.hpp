// Shared sample spaces for the unit suites.
#pragma once

#include <cmath>
#include <vector>

#include "sbfig/contractions.hpp"
#include "sbfig/metric_space.hpp"

namespace fixtures {

inline sbfig::Point R(double x) { return sbfig::Point::real(x); }

inline sbfig::SpaceSample reals(const std::vector<double>& xs, sbfig::SbMetricSpec m = sbfig::SbMetricSpec::s_variant()) {
    std::vector<sbfig::Point> pts;
    for (double x : xs) pts.push_back(R(x));
    return sbfig::SpaceSample(std::move(pts), std::move(m));
}

/// [-1, 1] in steps of 0.01 plus the seven isolated points, under |x-z| + |x+z-2y|.
inline sbfig::SpaceSample interval_space() {
    sbfig::GridSpec g{1, -1, 1, 201};
    auto pts = g.expand();
    for (double v : {-7.0, -std::sqrt(2.0), std::sqrt(2.0), 7.0 / 3.0, 7.0, 8.0, 21.0}) pts.push_back(R(v));
    return sbfig::SpaceSample(std::move(pts), sbfig::SbMetricSpec::s_variant(), sbfig::GridLayout{g, 0});
}

/// Identity except 8 -> 7.
inline sbfig::SelfMapSpec interval_map() {
    sbfig::SelfMapSpec f;
    f.overrides.emplace_back(R(8), R(7));
    return f;
}

inline std::vector<double> values_at(const sbfig::SpaceSample& s, const std::vector<std::size_t>& idx) {
    std::vector<double> out;
    for (auto i : idx) out.push_back(s[i].scalar());
    return out;
}

}  // namespace fixtures
