#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "planarinv/exactness.hpp"
#include "planarinv/invariant.hpp"
#include "planarinv/moves.hpp"

namespace planarinv {

using json = nlohmann::json;

// Curve files: {"points": [[x, y], ...]}, coordinates either numbers or
// decimal strings; the curve closes implicitly.
inline PlanarCurve curve_from_json(const json& j) {
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("curve JSON needs a \"points\" array");
    std::vector<RatVec> pts;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each point must be [x, y]");
        RatVec v;
        auto coord = [](const json& c) {
            if (c.is_string()) return rat_from_decimal(c.get<std::string>());
            if (c.is_number()) return rat_from_double(c.get<double>());
            throw ParseError("coordinates must be numbers or decimal strings");
        };
        v.x = coord(p[0]);
        v.y = coord(p[1]);
        pts.push_back(std::move(v));
    }
    return PlanarCurve::from_exact(std::move(pts));
}

inline json curve_to_json(const PlanarCurve& c) {
    json pts = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) pts.push_back({c.point(i).x, c.point(i).y});
    return json{{"points", pts}};
}

inline PlanarCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

inline void save_curve(const PlanarCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << curve_to_json(c).dump(1) << "\n";
}

inline ToleranceConfig config_from_json(const json& j) {
    ToleranceConfig cfg;
    if (j.contains("min_angle_deg")) cfg.min_angle_deg = j["min_angle_deg"].get<double>();
    if (j.contains("min_sep_frac")) cfg.min_sep_frac = j["min_sep_frac"].get<double>();
    if (j.contains("integer_residual")) cfg.integer_residual = j["integer_residual"].get<double>();
    if (j.contains("index_residual")) cfg.index_residual = j["index_residual"].get<double>();
    if (j.contains("epsilon_frac")) cfg.epsilon_frac = j["epsilon_frac"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    return cfg;
}

inline ToleranceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

template <class Vector>
json vector_to_json(const Vector& v) {
    json out = json::array();
    for (auto& [sym, coeff] : v) out.push_back({symbol_text(sym), rat_to_string(coeff)});
    return out;
}

inline json crossing_to_json(const CrossingIndices& ci) {
    return json{{"seg_a", ci.crossing.seg_a},
                {"seg_b", ci.crossing.seg_b},
                {"s", ci.crossing.s},
                {"t", ci.crossing.t},
                {"x", ci.crossing.location.x},
                {"y", ci.crossing.location.y},
                {"sign", ci.crossing.sign},
                {"epsilon", ci.eps},
                {"index1", {ci.first.i1, ci.first.i2}},
                {"index2", {ci.second.i1, ci.second.i2}}};
}

inline json invariant_to_json(const InvariantResult& r) {
    json crossings = json::array();
    for (const CrossingIndices& ci : r.per_crossing) crossings.push_back(crossing_to_json(ci));
    return json{{"whitney", r.whitney},         {"f", vector_to_json(r.f)},
                {"g", vector_to_json(r.g)},     {"f_hat", vector_to_json(r.f_hat)},
                {"k", vector_to_json(r.k)},     {"f_text", to_text(r.f)},
                {"g_text", to_text(r.g)},       {"f_hat_text", to_text(r.f_hat)},
                {"k_text", to_text(r.k)},       {"crossings", crossings}};
}

inline json genericity_to_json(const GenericityReport& rep) {
    return json{{"stable", rep.stable},
                {"min_crossing_separation", rep.min_crossing_separation},
                {"min_transversality_angle", rep.min_transversality_angle},
                {"crossings", rep.crossings.size()},
                {"violations", rep.violations}};
}

inline json jmove_to_json(const JMoveOutcome& out) {
    return json{{"type", "J"},
                {"kind", to_string(out.symbol.kind)},
                {"symbol", symbol_text(out.symbol)},
                {"delta", vector_to_json(out.delta)},
                {"delta_text", to_text(out.delta)},
                {"predicted", vector_to_json(out.predicted)},
                {"matches", out.matches},
                {"crossings_minus", find_crossings(out.curve_minus).size()},
                {"crossings_plus", find_crossings(out.curve_plus).size()}};
}

inline json smove_to_json(const SMoveOutcome& out) {
    return json{{"type", "S"},
                {"symbol", symbol_text(out.symbol)},
                {"delta", vector_to_json(out.delta)},
                {"delta_text", to_text(out.delta)},
                {"side_ambiguous", out.side_ambiguous},
                {"crossings", find_crossings(out.curve_plus).size()}};
}

inline json certificate_to_json(const RankCertificate& cert) {
    return json{{"rows", cert.rows},     {"cols", cert.cols},
                {"rank", cert.rank},     {"pivots", cert.pivots},
                {"claimed_codimension", cert.claimed_codim},
                {"pass", cert.pass},     {"detail", cert.detail}};
}

inline json exactness_to_json(const ExactnessReport& rep) {
    return json{{"n", rep.window.n},
                {"k", rep.window.k},
                {"l", rep.window.l},
                {"depth", rep.window.depth},
                {"injective", rep.injective},
                {"psi_kills_image", rep.psi_kills_image},
                {"psi_image_dim", rep.psi_image_dim},
                {"kernel_in_span", rep.kernel_in_span},
                {"pass", rep.pass}};
}

}  // namespace planarinv
