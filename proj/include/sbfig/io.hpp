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

// Space and map documents (JSON).
//
// Space:
//   {
//     "points": [0, "sqrt(2)", "7/3", {"grid": {"dim": 1, "min": -1, "max": 1, "steps": 201}}],
//     "metric": {"kind": "s_variant"},
//     "b": 1
//   }
// Point entries are numbers or expression strings (reals), arrays of those
// (vectors), label strings (table metrics) or one grid object. Metric kinds:
//   s_variant
//   power_sum      {"p", "c", "base"}   base defaults to lp with the same p
//   from_b_metric  {"base"}
// Base kinds: abs, lp {"p"}, table {"labels", "matrix", "b"}.
//
// Map:
//   {"overrides": [[8, 7], ["sqrt(2)", 0]]}

#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sbfig/contractions.hpp"
#include "sbfig/core.hpp"
#include "sbfig/expression.hpp"
#include "sbfig/metric_space.hpp"

namespace sbfig {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (auto k : allowed) ok = ok || it.key() == k;
        if (!ok) throw InputError(std::string(where) + ": unknown key '" + it.key() + "'");
    }
}

inline double real_value(const Json& v, std::string_view what) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return evaluate_expression(v.get<std::string>());
    throw InputError(std::string(what) + ": expected a number or an expression string");
}

inline std::size_t count_value(const Json& v, std::string_view what) {
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline const Json& require(const Json& obj, const char* key, std::string_view where) {
    if (!obj.contains(key)) throw InputError(std::string(where) + ": missing key '" + key + "'");
    return obj.at(key);
}

inline Json parse_document(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BaseMetricSpec parse_base(const Json& j) {
    if (!j.is_object()) throw InputError("metric.base: expected an object");
    const auto kind = require(j, "kind", "metric.base").get<std::string>();
    if (kind == "abs") {
        reject_unknown_keys(j, {"kind"}, "metric.base");
        return BaseMetricSpec::absolute();
    }
    if (kind == "lp") {
        reject_unknown_keys(j, {"kind", "p"}, "metric.base");
        return BaseMetricSpec::lp(real_value(require(j, "p", "metric.base"), "metric.base.p"));
    }
    if (kind == "table") {
        reject_unknown_keys(j, {"kind", "labels", "matrix", "b"}, "metric.base");
        std::vector<std::string> labels;
        for (const auto& l : require(j, "labels", "metric.base")) labels.push_back(l.get<std::string>());
        std::vector<std::vector<double>> matrix;
        for (const auto& row : require(j, "matrix", "metric.base")) {
            std::vector<double> r;
            for (const auto& v : row) r.push_back(real_value(v, "metric.base.matrix"));
            matrix.push_back(std::move(r));
        }
        const double b = j.contains("b") ? real_value(j.at("b"), "metric.base.b") : 1.0;
        return BaseMetricSpec::table(std::move(labels), std::move(matrix), b);
    }
    throw InputError("metric.base: unknown kind '" + kind + "'");
}

inline Json base_to_json(const BaseMetricSpec& d) {
    Json j;
    switch (d.kind()) {
        case BaseKind::abs: j["kind"] = "abs"; break;
        case BaseKind::lp:
            j["kind"] = "lp";
            j["p"] = d.exponent();
            break;
        case BaseKind::table: {
            j["kind"] = "table";
            j["labels"] = d.labels();
            Json matrix = Json::array();
            for (std::size_t i = 0; i < d.labels().size(); ++i) {
                Json row = Json::array();
                for (std::size_t k = 0; k < d.labels().size(); ++k) row.push_back(d.table_entry(i, k));
                matrix.push_back(row);
            }
            j["matrix"] = matrix;
            j["b"] = d.relaxation();
            break;
        }
    }
    return j;
}

inline bool is_table_metric(const SbMetricSpec& m) {
    return m.base() && m.base()->kind() == BaseKind::table;
}

}  // namespace detail

/// A point literal from a document value, in the representation the metric expects.
inline Point point_from_json(const Json& v, bool labeled) {
    if (labeled) {
        if (!v.is_string()) throw InputError("expected a label string for a labeled space, got " + v.dump());
        return Point::labeled(v.get<std::string>());
    }
    if (v.is_array()) {
        Point::Coords c;
        for (const auto& e : v) c.push_back(detail::real_value(e, "point coordinate"));
        return Point::vec(std::move(c));
    }
    return Point::real(detail::real_value(v, "point"));
}

template <typename J = Json>
J point_to_json(const Point& p) {
    if (p.is_label()) return p.label();
    auto c = p.coords();
    if (c.size() == 1) return c[0];
    return J(std::vector<double>(c.begin(), c.end()));
}

/// Parses a point given on the command line: "7/3", "(1,1,1)", "1,1,1", or a label.
inline Point parse_point_literal(std::string_view text, const SpaceSample& sample) {
    const Point& ref = sample[0];
    if (ref.is_label()) return Point::labeled(std::string(text));
    std::string s(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    Point::Coords c;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        c.push_back(evaluate_expression(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (c.size() != ref.dim())
        throw InputError("point \"" + std::string(text) + "\" has dimension " + std::to_string(c.size()) +
                         ", space has dimension " + std::to_string(ref.dim()));
    return Point::vec(std::move(c));
}

inline SbMetricSpec metric_from_json(const Json& j, std::optional<double> file_b) {
    if (!j.is_object()) throw InputError("metric: expected an object");
    const auto kind = detail::require(j, "kind", "metric").get<std::string>();
    if (kind == "s_variant") {
        detail::reject_unknown_keys(j, {"kind"}, "metric");
        return SbMetricSpec::s_variant(file_b.value_or(1.0));
    }
    if (kind == "power_sum") {
        detail::reject_unknown_keys(j, {"kind", "p", "c", "base"}, "metric");
        const double p = detail::real_value(detail::require(j, "p", "metric"), "metric.p");
        const double c = j.contains("c") ? detail::real_value(j.at("c"), "metric.c") : 1.0;
        auto base = j.contains("base") ? detail::parse_base(j.at("base")) : BaseMetricSpec::lp(p);
        if (!file_b) throw InputError("power_sum metric needs an explicit claimed constant \"b\"");
        return SbMetricSpec::power_sum(std::move(base), p, c, *file_b);
    }
    if (kind == "from_b_metric") {
        detail::reject_unknown_keys(j, {"kind", "base"}, "metric");
        auto m = SbMetricSpec::from_b_metric(detail::parse_base(detail::require(j, "base", "metric")));
        return file_b ? m.with_claimed_b(*file_b) : m;
    }
    throw InputError("metric: unknown kind '" + kind + "'");
}

inline Json metric_to_json(const SbMetricSpec& m) {
    Json j;
    switch (m.kind()) {
        case SbKind::s_variant: j["kind"] = "s_variant"; break;
        case SbKind::power_sum:
            j["kind"] = "power_sum";
            j["p"] = m.exponent();
            j["c"] = m.scale();
            j["base"] = detail::base_to_json(*m.base());
            break;
        case SbKind::from_b_metric:
            j["kind"] = "from_b_metric";
            j["base"] = detail::base_to_json(*m.base());
            break;
    }
    return j;
}

inline SpaceSample space_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("space: expected a JSON object");
    detail::reject_unknown_keys(doc, {"points", "metric", "b"}, "space");
    std::optional<double> b;
    if (doc.contains("b")) {
        b = detail::real_value(doc.at("b"), "b");
        if (!(*b >= 1.0)) throw InputError("b must be >= 1, got " + format_real(*b));
    }
    auto metric = metric_from_json(detail::require(doc, "metric", "space"), b);
    const bool labeled = detail::is_table_metric(metric);

    std::vector<Point> pts;
    std::optional<GridLayout> grid;
    if (!doc.contains("points")) {
        if (!labeled) throw InputError("space: missing key 'points'");
        for (const auto& l : metric.base()->labels()) pts.push_back(Point::labeled(l));
    } else {
        const auto& list = doc.at("points");
        if (!list.is_array()) throw InputError("points: expected an array");
        for (const auto& e : list) {
            if (e.is_object()) {
                detail::reject_unknown_keys(e, {"grid"}, "points entry");
                if (grid) throw InputError("points: at most one grid entry is supported");
                const auto& g = detail::require(e, "grid", "points entry");
                detail::reject_unknown_keys(g, {"dim", "min", "max", "steps"}, "grid");
                GridSpec spec;
                spec.dim = detail::count_value(detail::require(g, "dim", "grid"), "grid.dim");
                spec.min = detail::real_value(detail::require(g, "min", "grid"), "grid.min");
                spec.max = detail::real_value(detail::require(g, "max", "grid"), "grid.max");
                spec.steps = detail::count_value(detail::require(g, "steps", "grid"), "grid.steps");
                grid = GridLayout{spec, pts.size()};
                auto nodes = spec.expand();
                std::move(nodes.begin(), nodes.end(), std::back_inserter(pts));
            } else {
                pts.push_back(point_from_json(e, labeled));
            }
        }
    }
    return SpaceSample(std::move(pts), std::move(metric), grid);
}

inline SpaceSample parse_space_text(const std::string& text, const std::string& origin = "<space>") {
    return space_from_json(detail::parse_document(text, origin));
}

inline SpaceSample parse_space(const std::string& path) {
    try {
        return parse_space_text(detail::read_file(path), path);
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        throw InputError(path + ": " + what);
    }
}

/// Canonical document: explicit points in order, the grid kept as one entry.
inline Json space_to_json(const SpaceSample& s) {
    Json doc;
    Json pts = Json::array();
    const auto& grid = s.grid();
    for (std::size_t i = 0; i < s.size();) {
        if (grid && i == grid->offset) {
            const auto& g = grid->spec;
            pts.push_back({{"grid", {{"dim", g.dim}, {"min", g.min}, {"max", g.max}, {"steps", g.steps}}}});
            i += g.node_count();
            continue;
        }
        pts.push_back(point_to_json(s[i]));
        ++i;
    }
    doc["points"] = pts;
    doc["metric"] = metric_to_json(s.metric());
    doc["b"] = s.claimed_b();
    return doc;
}

inline SelfMapSpec map_from_json(const Json& doc, const SpaceSample& sample) {
    if (!doc.is_object()) throw InputError("map: expected a JSON object");
    detail::reject_unknown_keys(doc, {"overrides"}, "map");
    SelfMapSpec f;
    if (!doc.contains("overrides")) return f;
    const bool labeled = sample[0].is_label();
    for (const auto& pair : doc.at("overrides")) {
        if (!pair.is_array() || pair.size() != 2) throw InputError("map: each override must be a [source, image] pair");
        f.overrides.emplace_back(point_from_json(pair[0], labeled), point_from_json(pair[1], labeled));
    }
    ResolvedMap check(sample, f);  // sources distinct, images resolvable
    (void)check;
    return f;
}

inline SelfMapSpec parse_map(const std::string& path, const SpaceSample& sample) {
    try {
        return map_from_json(detail::parse_document(detail::read_file(path), path), sample);
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        throw InputError(path + ": " + what);
    }
}

}  // namespace sbfig
