#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "planarinv/curve.hpp"

namespace planarinv {

// The pair (I1, I2) of an exterior arc; I2 is always odd.
struct DoubleIndex {
    int i1 = 0;
    int i2 = 0;
    friend bool operator==(const DoubleIndex&, const DoubleIndex&) = default;
    friend auto operator<=>(const DoubleIndex&, const DoubleIndex&) = default;
};

// -------------------------------------------------------------------------
// Excisions. Removing a small disc around a point v cuts the curve at its
// passes through the disc; the complementary parameter intervals are the
// exterior arcs. The same machinery serves genuine crossings (two passes) and
// the virtual tangency / triple-point configurations used by the move engine
// (two or three passes near a common center).
// -------------------------------------------------------------------------

struct StrandPass {
    double center_param = 0;  // parameter of the pass through the disc
    double enter = 0, exit = 0;
    Vec2 dir;  // unit tangent at center_param
};

struct Excision {
    Vec2 center;
    double eps = 0;
    std::vector<StrandPass> passes;  // sorted by center_param
};

namespace detail {

// Wrapped membership x in (a, b) on the parameter circle of length L.
inline bool param_inside(double x, double a, double b, double L) {
    auto w = [L](double v) {
        double r = std::fmod(v, L);
        return r < 0 ? r + L : r;
    };
    double len = w(b - a);
    double pos = w(x - a);
    return pos > 0.0 && pos < len;
}

inline double wrapped_length(double a, double b, double L) {
    double r = std::fmod(b - a, L);
    return r < 0 ? r + L : r;
}

// First parameter at distance eps from v, walking from t0 in direction dir.
inline double walk_to_boundary(const PlanarCurve& c, Vec2 v, double eps, double t0, int dir) {
    double t = t0;
    for (std::size_t guard = 0; guard <= c.size() + 1; ++guard) {
        double seg_end;
        if (dir > 0) {
            seg_end = std::floor(t) + 1.0;
            if (seg_end <= t) seg_end = t + 1.0;
        } else {
            seg_end = std::ceil(t) - 1.0;
            if (seg_end >= t) seg_end = t - 1.0;
        }
        Vec2 pa = c.point_at(t);
        Vec2 pb = c.point_at(c.wrap(seg_end));
        if ((pb - v).norm() >= eps) {
            Vec2 w = pa - v;
            Vec2 d = pb - pa;
            double A = d.norm2();
            double B = w.dot(d);
            double C = w.norm2() - eps * eps;
            double disc = B * B - A * C;
            double f = (-B + std::sqrt(std::max(disc, 0.0))) / A;  // exit root
            f = std::clamp(f, 0.0, 1.0);
            return c.wrap(t + (seg_end - t) * f);
        }
        t = seg_end;
    }
    throw EpsilonTooLarge("disc of radius " + std::to_string(eps) + " swallows the whole curve");
}

}  // namespace detail

// Builds the excision of radius eps around `center` given the parameters of
// the passes expected inside the disc. Throws EpsilonTooLarge if the passes
// are not disjoint or any other part of the curve enters the open disc.
inline Excision make_excision(const PlanarCurve& c, Vec2 center, std::vector<double> cut_params, double eps) {
    const double L = c.param_length();
    Excision ex;
    ex.center = center;
    ex.eps = eps;
    std::sort(cut_params.begin(), cut_params.end());
    for (double t0 : cut_params) {
        if ((c.point_at(t0) - center).norm() >= eps)
            throw EpsilonTooLarge("cut parameter lies outside the excision disc");
        StrandPass p;
        p.center_param = c.wrap(t0);
        p.enter = detail::walk_to_boundary(c, center, eps, t0, -1);
        p.exit = detail::walk_to_boundary(c, center, eps, t0, +1);
        p.dir = c.tangent_at(t0);
        ex.passes.push_back(p);
    }
    // Each pass must cross the disc monotonically: the tangent may not swing
    // 90 degrees or more away from its direction at the cut. A strand that
    // wanders inside the disc invalidates the small-disc limit model.
    for (const StrandPass& p : ex.passes) {
        double len = detail::wrapped_length(p.enter, p.exit, L);
        for (double off = 0.0;; off = std::min(off + 1.0, len)) {
            if (c.tangent_at(c.wrap(p.enter + off)).dot(p.dir) <= 0.0)
                throw EpsilonTooLarge("strand pass wanders inside the excision disc");
            if (off >= len) break;
        }
    }
    // passes must be pairwise disjoint intervals on the parameter circle
    for (std::size_t i = 0; i < ex.passes.size(); ++i) {
        for (std::size_t j = 0; j < ex.passes.size(); ++j) {
            if (i == j) continue;
            const auto& a = ex.passes[i];
            const auto& b = ex.passes[j];
            if (detail::param_inside(b.enter, a.enter, a.exit, L) ||
                detail::param_inside(b.exit, a.enter, a.exit, L) ||
                detail::param_inside(b.center_param, a.enter, a.exit, L))
                throw EpsilonTooLarge("strand passes through the excision disc merge");
        }
    }
    // no third strand: every part of the curve not covered by a pass stays at
    // distance >= eps from the center
    std::vector<std::pair<double, double>> covered;  // non-wrapped intervals
    for (const auto& p : ex.passes) {
        if (p.enter <= p.exit) {
            covered.emplace_back(p.enter, p.exit);
        } else {
            covered.emplace_back(p.enter, L);
            covered.emplace_back(0.0, p.exit);
        }
    }
    std::sort(covered.begin(), covered.end());
    const double slack = eps * (1.0 - 1e-9);
    for (std::size_t i = 0; i < c.size(); ++i) {
        double lo = static_cast<double>(i), hi = lo + 1.0;
        double cur = lo;
        for (const auto& [a, b] : covered) {
            if (b <= cur || a >= hi) continue;
            if (a > cur) {
                if (dist_point_segment(center, c.point_at(cur), c.point_at(std::min(a, hi))) < slack)
                    throw EpsilonTooLarge("third strand enters the excision disc");
            }
            cur = std::max(cur, b);
            if (cur >= hi) break;
        }
        if (cur < hi) {
            if (dist_point_segment(center, c.point_at(cur), c.point_at(c.wrap(hi))) < slack)
                throw EpsilonTooLarge("third strand enters the excision disc");
        }
    }
    return ex;
}

// -------------------------------------------------------------------------
// Exterior arcs
// -------------------------------------------------------------------------

struct ExteriorArc {
    double start = 0, end = 0;  // open parameter interval between two passes
    int which_tangent = 0;      // 1 or 2 for genuine crossings, 0 for virtual arcs
    double eps = 0;
    Vec2 center;
    Vec2 start_dir;  // strand direction leaving the disc at the arc start
    Vec2 end_dir;    // strand direction of the pass the arc runs into
};

struct ArcAngles {
    double theta = 0;  // boundary angle from initial to final point, in (0, 2pi)
    double phi = 0;    // radial winding about the center along the arc
    double omega = 0;  // tangent turning with perpendicular-end corrections
};

// Arcs of an excision in cyclic order: arc i runs from the exit of pass i to
// the entry of the cyclically next pass.
inline std::vector<ExteriorArc> excision_arcs(const Excision& ex) {
    std::vector<ExteriorArc> arcs;
    std::size_t k = ex.passes.size();
    for (std::size_t i = 0; i < k; ++i) {
        const StrandPass& from = ex.passes[i];
        const StrandPass& to = ex.passes[(i + 1) % k];
        ExteriorArc a;
        a.start = from.exit;
        a.end = to.enter;
        a.eps = ex.eps;
        a.center = ex.center;
        a.start_dir = from.dir;
        a.end_dir = to.dir;
        arcs.push_back(a);
    }
    return arcs;
}

// The two exterior arcs of a genuine crossing, ordered so that arc i is led by
// the frame tangent u_i.
inline std::pair<ExteriorArc, ExteriorArc> exterior_arcs(const PlanarCurve& c, const Crossing& x,
                                                         double eps) {
    Excision ex = make_excision(c, x.location, {x.s, x.t}, eps);
    auto arcs = excision_arcs(ex);  // arcs[0] follows the pass at s, arcs[1] the pass at t
    ExteriorArc after_s = arcs[0], after_t = arcs[1];
    if (x.sign > 0) {
        after_s.which_tangent = 1;
        after_t.which_tangent = 2;
        return {after_s, after_t};
    }
    after_t.which_tangent = 1;
    after_s.which_tangent = 2;
    return {after_t, after_s};
}

// Signed count of the crossings lying entirely inside the arc. The sign of a
// crossing is taken in the order its two strands are visited along the arc,
// which flips the stored (s < t) sign when the arc wraps parameter 0 between
// the visits.
inline int top_index(const ExteriorArc& arc, const std::vector<Crossing>& crossings, double L) {
    int total = 0;
    for (const Crossing& x : crossings) {
        bool s_in = detail::param_inside(x.s, arc.start, arc.end, L);
        bool t_in = detail::param_inside(x.t, arc.start, arc.end, L);
        if (!s_in || !t_in) continue;
        double pos_s = detail::wrapped_length(arc.start, x.s, L);
        double pos_t = detail::wrapped_length(arc.start, x.t, L);
        total += pos_s < pos_t ? x.sign : -x.sign;
    }
    return total;
}

// Angles in the limit model where the arc meets the excision circle radially:
// both endpoints are pinned to the strand directions through the center, and
// the pinning rotations are added to phi and omega.
inline ArcAngles arc_angles(const PlanarCurve& c, const ExteriorArc& arc) {
    ArcAngles out;
    Vec2 end_radial = -arc.end_dir;
    out.theta = norm_angle_2pi(angle_of(end_radial) - angle_of(arc.start_dir));

    Vec2 first_radial = c.point_at(arc.start) - arc.center;
    Vec2 last_radial = c.point_at(arc.end) - arc.center;
    out.phi = turn_between(arc.start_dir, first_radial) +
              radial_winding(c, arc.center, arc.start, arc.end, arc.eps * 0.5) +
              turn_between(last_radial, end_radial);

    // The model arc leaves the boundary radially (tangent = start_dir) and
    // arrives radially inward (tangent = end_dir, the strand direction).
    out.omega = turn_between(arc.start_dir, c.tangent_at(arc.start)) + turning_along(c, arc.start, arc.end) +
                turn_between(c.tangent_at(arc.end), arc.end_dir);
    return out;
}

// (phi - omega)/pi rounded to the nearest integer; must be odd.
inline int bottom_index(const ArcAngles& a, const ToleranceConfig& cfg = {}) {
    double v = (a.phi - a.omega) / kPi;
    double r = std::round(v);
    if (std::abs(v - r) > cfg.index_residual)
        throw NonOddBottomIndex("bottom index residual " + std::to_string(std::abs(v - r)) +
                                "; shrink epsilon or resample");
    auto i = static_cast<long>(r);
    if ((i % 2 + 2) % 2 != 1)
        throw NonOddBottomIndex("bottom index " + std::to_string(i) + " is even");
    return static_cast<int>(i);
}

// Combinatorial I1 against the angle formula I1 = (2*phi - omega - theta + pi)/(2*pi).
inline bool crosscheck_lemma_omega(const ExteriorArc& arc, const ArcAngles& angles,
                                   const std::vector<Crossing>& crossings, double L,
                                   const ToleranceConfig& cfg = {}) {
    double v = (2 * angles.phi - angles.omega - angles.theta + kPi) / kTwoPi;
    double r = std::round(v);
    if (std::abs(v - r) > cfg.index_residual) return false;
    return static_cast<long>(r) == top_index(arc, crossings, L);
}

// Default excision radius: a quarter of the separation to the nearest other
// crossing, shrunk until the disc contains only the two incident strands.
inline double default_epsilon(const PlanarCurve& c, const std::vector<Crossing>& crossings,
                              std::size_t idx, const ToleranceConfig& cfg = {}) {
    const Crossing& x = crossings[idx];
    double sep = c.diameter() * 0.5;
    for (std::size_t j = 0; j < crossings.size(); ++j)
        if (j != idx) sep = std::min(sep, (crossings[j].location - x.location).norm());
    double eps = cfg.epsilon_frac * sep;
    for (int tries = 0; tries < 60; ++tries, eps *= 0.5) {
        try {
            make_excision(c, x.location, {x.s, x.t}, eps);
            return eps;
        } catch (const EpsilonTooLarge&) {
            continue;
        }
    }
    throw EpsilonTooLarge("no valid excision radius at crossing " + std::to_string(idx));
}

// Double indices of the two exterior arcs, ordered by which_tangent.
inline std::pair<DoubleIndex, DoubleIndex> double_index(const PlanarCurve& c, const Crossing& x,
                                                        double eps, const std::vector<Crossing>& crossings,
                                                        const ToleranceConfig& cfg = {}) {
    auto [a1, a2] = exterior_arcs(c, x, eps);
    double L = c.param_length();
    DoubleIndex d1{top_index(a1, crossings, L), bottom_index(arc_angles(c, a1), cfg)};
    DoubleIndex d2{top_index(a2, crossings, L), bottom_index(arc_angles(c, a2), cfg)};
    return {d1, d2};
}

}  // namespace planarinv
