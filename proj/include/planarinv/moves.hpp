#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "planarinv/curve_gen.hpp"
#include "planarinv/invariant.hpp"

namespace planarinv {

// -------------------------------------------------------------------------
// Stability-preserving perturbation
// -------------------------------------------------------------------------

// Smooth low-frequency displacement with sup-norm `amplitude`. The result
// must be stable with the same crossing count, else StabilityLost.
inline PlanarCurve perturb(const PlanarCurve& c, std::uint64_t seed, double amplitude,
                           const ToleranceConfig& cfg = {}) {
    if (amplitude == 0.0) return c;
    std::mt19937_64 rng(0x2545f4914f6cdd1dull ^ seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    constexpr int kModes = 3;
    double cx[kModes], sx[kModes], cy[kModes], sy[kModes];
    double sup = 0.0;
    for (int j = 0; j < kModes; ++j) {
        cx[j] = u(rng);
        sx[j] = u(rng);
        cy[j] = u(rng);
        sy[j] = u(rng);
        sup += std::hypot(cx[j], sx[j]) + std::hypot(cy[j], sy[j]);
    }
    double scale = amplitude / std::max(sup, 1e-12);
    double L = c.param_length();
    std::vector<Vec2> pts;
    pts.reserve(c.size());
    std::size_t before = find_crossings(c).size();
    for (std::size_t i = 0; i < c.size(); ++i) {
        double t = kTwoPi * static_cast<double>(i) / L;
        Vec2 d{0, 0};
        for (int j = 0; j < kModes; ++j) {
            double a = (j + 1) * t;
            d.x += cx[j] * std::cos(a) + sx[j] * std::sin(a);
            d.y += cy[j] * std::cos(a) + sy[j] * std::sin(a);
        }
        pts.push_back(c.point(i) + d * scale);
    }
    PlanarCurve out = PlanarCurve::from_points(std::move(pts));
    try {
        GenericityReport rep = validate_stable(out, cfg);
        if (!rep.stable || rep.crossings.size() != before)
            throw StabilityLost("perturbation changed the crossing pattern");
    } catch (const StabilityLost&) {
        throw;
    } catch (const std::exception& e) {
        throw StabilityLost(std::string("perturbation broke stability: ") + e.what());
    }
    return out;
}

namespace detail {

// Parameter of the point on `c` closest to `target`, restricted to segments
// within `radius` parameter units of `hint`.
inline double closest_param(const PlanarCurve& c, Vec2 target, double hint, double radius) {
    double L = c.param_length();
    double best_d = std::numeric_limits<double>::infinity();
    double best_t = hint;
    auto lo = static_cast<long>(std::floor(hint - radius));
    auto hi = static_cast<long>(std::ceil(hint + radius));
    for (long k = lo; k <= hi; ++k) {
        auto seg = static_cast<std::size_t>(((k % static_cast<long>(L)) + static_cast<long>(L)) %
                                            static_cast<long>(L));
        Vec2 a = c.point(seg), b = c.point(seg + 1);
        Vec2 d = b - a;
        double f = d.norm2() > 0 ? std::clamp((target - a).dot(d) / d.norm2(), 0.0, 1.0) : 0.0;
        double dist = (a + d * f - target).norm();
        if (dist < best_d) {
            best_d = dist;
            best_t = c.wrap(static_cast<double>(seg) + f);
        }
    }
    return best_t;
}

// Rebuilds the curve with vertex `offset` as the new parameter origin.
inline PlanarCurve rotate_basepoint(const PlanarCurve& c, std::size_t offset) {
    std::vector<RatVec> pts;
    pts.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(c.vertex(i + offset).exact);
    return PlanarCurve::from_exact(std::move(pts));
}

// First hit of the ray origin + tau * dir against the polyline piece of `c`
// covering the wrapped parameter interval [from, to]; infinity if missed.
inline double ray_to_piece(const PlanarCurve& c, Vec2 origin, Vec2 dir, double from, double to) {
    double L = c.param_length();
    double len = wrapped_length(from, to, L);
    double best = std::numeric_limits<double>::infinity();
    double t = from;
    for (double done = 0.0; done < len;) {
        double step = std::min(std::floor(t) + 1.0 - t, len - done);
        if (step <= 0) step = std::min(1.0, len - done);
        Vec2 a = c.point_at(t);
        Vec2 b = c.point_at(c.wrap(t + step));
        Vec2 e = b - a;
        double den = dir.cross(e);
        if (std::abs(den) > 1e-14) {
            Vec2 w = a - origin;
            double tau = w.cross(e) / den;
            double s = w.cross(dir) / den;
            if (tau > 0 && s >= 0.0 && s <= 1.0) best = std::min(best, tau);
        }
        t = c.wrap(t + step);
        done += step;
    }
    return best;
}

// -------------------------------------------------------------------------
// Bump surgery: the open window between anchor vertices lo and hi is
// resampled and displaced toward `dir` by amp * profile, with the profile
// peaking at a chosen parameter and vanishing to second order at the anchors.
// -------------------------------------------------------------------------

struct BumpPlan {
    std::size_t lo = 0, hi = 0;
    int samples = 96;
    Vec2 dir;
    std::vector<Vec2> base_pts;    // undisplaced sample points (size samples)
    std::vector<double> profile;   // bump factor per sample, max 1
};

inline BumpPlan plan_bump(const PlanarCurve& c, std::size_t lo, std::size_t hi, Vec2 dir,
                          double peak_param, int samples) {
    BumpPlan plan;
    plan.lo = lo;
    plan.hi = hi;
    plan.samples = samples;
    plan.dir = dir;
    double span = static_cast<double>(hi - lo);
    double peak_u = std::clamp((peak_param - static_cast<double>(lo)) / span, 0.15, 0.85);
    for (int j = 1; j <= samples; ++j) {
        double u = static_cast<double>(j) / (samples + 1);
        // monotone warp sending peak_u to 1/2, so the bump crests at the peak
        double w = u <= peak_u ? 0.5 * u / peak_u : 0.5 + 0.5 * (u - peak_u) / (1.0 - peak_u);
        double b = std::sin(kPi * w);
        plan.profile.push_back(b * b);
        plan.base_pts.push_back(c.point_at(static_cast<double>(lo) + u * span));
    }
    return plan;
}

inline PlanarCurve apply_bump(const PlanarCurve& c, const BumpPlan& plan, double amp) {
    std::vector<Vec2> pts;
    pts.reserve(c.size() + static_cast<std::size_t>(plan.samples));
    for (std::size_t i = 0; i <= plan.lo; ++i) pts.push_back(c.point(i));
    for (int j = 0; j < plan.samples; ++j)
        pts.push_back(plan.base_pts[static_cast<std::size_t>(j)] +
                      plan.dir * (amp * plan.profile[static_cast<std::size_t>(j)]));
    for (std::size_t i = plan.hi; i < c.size(); ++i) pts.push_back(c.point(i));
    return PlanarCurve::from_points(std::move(pts));
}

// Parameter of the original curve mapped into an apply_bump output.
inline double shifted_param(const BumpPlan& plan, double t) {
    if (t <= static_cast<double>(plan.lo)) return t;
    return t + static_cast<double>(plan.samples + 1) - static_cast<double>(plan.hi - plan.lo);
}

// Sample j (0-based) of the bump window as a parameter of the output curve.
inline double bump_sample_param(const BumpPlan& plan, int j) {
    return static_cast<double>(plan.lo) + 1.0 + static_cast<double>(j);
}

}  // namespace detail

// -------------------------------------------------------------------------
// J moves: a finger of strand A is pushed across strand B, creating two new
// crossings. The tangency type is read off the contact configuration, the
// symbol off the exterior arcs of a nearly-singular auxiliary curve.
// -------------------------------------------------------------------------

struct JSite {
    double a_param = 0;      // window center on the pushed strand
    double b_param = 0;      // target point on the crossed strand
    double overshoot = 0.5;  // tip travel past the contact, relative to the critical amplitude
    int samples = 96;        // resampling of the pushed window
};

struct JMoveOutcome {
    PlanarCurve curve_plus, curve_minus;
    JSymbol symbol;
    XVector delta;      // F(curve_plus) - F(curve_minus)
    XVector predicted;  // f1(symbol)
    bool matches = false;
};

namespace detail {

struct JGeometry {
    double t_a = 0, t_b = 0;
    Vec2 q_a, q_b, push_dir;
    double gap = 0;
    double win_lo = 0, win_hi = 0;        // displacement window (params, may wrap)
    double pass_b_enter = 0, pass_b_exit = 0;  // strand B's pass through the clean disc
};

// Validates a J site; cheap (the caller supplies the crossing list).
inline JGeometry check_j_site(const PlanarCurve& c, const std::vector<Crossing>& crossings,
                              const JSite& site, const ToleranceConfig& cfg) {
    JGeometry g;
    double L = c.param_length();
    g.t_a = c.wrap(site.a_param);
    g.t_b = c.wrap(site.b_param);
    g.q_a = c.point_at(g.t_a);
    g.q_b = c.point_at(g.t_b);
    g.gap = (g.q_b - g.q_a).norm();
    double diam = c.diameter();
    if (g.gap < 2.0 * cfg.min_sep(diam) || g.gap > 0.12 * diam)
        throw SiteInvalid("gap " + std::to_string(g.gap) + " outside the workable range");
    g.push_dir = (g.q_b - g.q_a) * (1.0 / g.gap);
    if (std::abs(c.tangent_at(g.t_a).dot(c.tangent_at(g.t_b))) < 0.7)
        throw SiteInvalid("strands too far from (anti)parallel for a clean tangency");

    Vec2 mid = (g.q_a + g.q_b) * 0.5;
    double r_clean = 2.4 * g.gap;
    Excision ex = make_excision(c, mid, {g.t_a, g.t_b}, r_clean);  // throws EpsilonTooLarge if dirty
    for (const Crossing& x : crossings)
        if ((x.location - mid).norm() < 1.05 * r_clean)
            throw SiteInvalid("existing crossing too close to the surgery site");
    // straight-ish strands inside the clean disc
    for (const StrandPass& p : ex.passes) {
        Vec2 ref = c.tangent_at(p.center_param);
        double len = wrapped_length(p.enter, p.exit, L);
        for (double off = 0.0; off < len; off += 1.0) {
            if (ref.dot(c.tangent_at(c.wrap(p.enter + off))) < std::cos(25.0 * kPi / 180.0))
                throw SiteInvalid("strand bends too much inside the surgery disc");
        }
    }
    const StrandPass& pass_b =
        wrapped_length(ex.passes[0].enter, c.wrap(g.t_b), L) <
                wrapped_length(ex.passes[0].enter, ex.passes[0].exit, L) + 1e-9
            ? ex.passes[0]
            : ex.passes[1];
    g.pass_b_enter = pass_b.enter;
    g.pass_b_exit = pass_b.exit;
    // displacement window: the part of A's pass within half the clean radius
    g.win_lo = walk_to_boundary(c, mid, 0.55 * r_clean, g.t_a, -1);
    g.win_hi = walk_to_boundary(c, mid, 0.55 * r_clean, g.t_a, +1);
    if (wrapped_length(g.win_lo, g.win_hi, L) < 2.5) throw SiteInvalid("displacement window too narrow");
    return g;
}

}  // namespace detail

// Tangency classification from the contact data: parallel contact is J+; for
// antiparallel contact the type depends on which side of the crossed strand
// the finger arrives from.
inline JKind classify_j_kind(Vec2 tip_dir, Vec2 d_b, Vec2 tip_pre, Vec2 contact) {
    if (tip_dir.dot(d_b) > 0) return JKind::JPlus;
    Vec2 n = d_b.perp();
    double side = (tip_pre - contact).dot(n);
    return side < 0 ? JKind::JA : JKind::JB;
}

inline JMoveOutcome make_j_move(const PlanarCurve& c0, const JSite& site, const ToleranceConfig& cfg = {}) {
    // Move the parameter origin to the antipode of the pushed window so the
    // displacement window never wraps.
    double L0 = c0.param_length();
    auto offset = static_cast<std::size_t>(c0.wrap(site.a_param + L0 / 2));
    PlanarCurve c = detail::rotate_basepoint(c0, offset);
    JSite local = site;
    local.a_param = c.wrap(site.a_param - static_cast<double>(offset));
    local.b_param = c.wrap(site.b_param - static_cast<double>(offset));
    auto base_crossings = find_crossings(c);
    std::size_t n_before = base_crossings.size();
    detail::JGeometry g = detail::check_j_site(c, base_crossings, local, cfg);
    auto win_lo = static_cast<std::size_t>(std::ceil(g.win_lo));
    auto win_hi = static_cast<std::size_t>(std::floor(g.win_hi));
    if (win_lo >= win_hi || win_hi >= c.size()) throw SiteInvalid("degenerate displacement window");

    detail::BumpPlan plan = detail::plan_bump(c, win_lo, win_hi, g.push_dir, g.t_a, site.samples);

    // Critical amplitude: the first contact of the growing finger with strand
    // B, measured per sample by ray casting onto B's pass.
    double amp_crit = std::numeric_limits<double>::infinity();
    int j_contact = -1;
    double b_from = c.wrap(g.pass_b_enter - 2.0), b_to = c.wrap(g.pass_b_exit + 2.0);
    for (int j = 0; j < plan.samples; ++j) {
        double bj = plan.profile[static_cast<std::size_t>(j)];
        if (bj < 0.05) continue;
        double rj = detail::ray_to_piece(c, plan.base_pts[static_cast<std::size_t>(j)], g.push_dir, b_from, b_to);
        if (!std::isfinite(rj)) continue;
        if (rj / bj < amp_crit) {
            amp_crit = rj / bj;
            j_contact = j;
        }
    }
    if (j_contact < 0) throw SiteInvalid("finger never reaches the crossed strand");
    if (amp_crit > 3.0 * g.gap) throw SiteInvalid("contact amplitude out of range");

    JMoveOutcome out;
    out.curve_minus = detail::apply_bump(c, plan, 0.0);
    out.curve_plus = detail::apply_bump(c, plan, amp_crit * (1.0 + site.overshoot));

    GenericityReport rep_minus = validate_stable(out.curve_minus, cfg);
    GenericityReport rep_plus = validate_stable(out.curve_plus, cfg);
    if (!rep_minus.stable || rep_minus.crossings.size() != n_before)
        throw StabilityLost("negative resolution is not stable");
    if (!rep_plus.stable) throw StabilityLost("positive resolution is not stable");
    if (rep_plus.crossings.size() != n_before + 2)
        throw SiteInvalid("push created " + std::to_string(static_cast<long>(rep_plus.crossings.size()) -
                                                           static_cast<long>(n_before)) +
                          " crossings instead of 2");

    // Auxiliary nearly-singular curve: the finger stops just short of strand B.
    constexpr double kEta = 0.01;
    PlanarCurve aux = detail::apply_bump(c, plan, amp_crit * (1.0 - kEta));
    auto aux_crossings = find_crossings(aux);
    if (aux_crossings.size() != n_before) throw SiteInvalid("auxiliary curve changed the crossing count");

    double tau_a = detail::bump_sample_param(plan, j_contact);
    Vec2 tip = aux.point_at(tau_a);
    Vec2 contact = plan.base_pts[static_cast<std::size_t>(j_contact)] + g.push_dir * amp_crit *
                       plan.profile[static_cast<std::size_t>(j_contact)];
    double bp_hint = detail::shifted_param(plan, c.wrap(g.t_b) < static_cast<double>(win_lo)
                                                      ? g.t_b
                                                      : c.wrap(g.t_b));
    double tau_b = detail::closest_param(aux, contact, bp_hint, 8.0);
    Vec2 d_b = aux.tangent_at(tau_b);
    Vec2 tip_dir = aux.tangent_at(tau_a);
    if (std::abs(tip_dir.dot(d_b)) < 0.9)
        throw SiteInvalid("contact is not tangential; refine the site");
    Vec2 center = (tip + contact) * 0.5;

    out.symbol = [&] {
        double h = (tip - contact).norm();
        for (double eps_v = 0.7 * amp_crit; eps_v > 6.0 * h; eps_v *= 0.7) {
            try {
                Excision ex = make_excision(aux, center, {tau_a, tau_b}, eps_v);
                auto arcs = excision_arcs(ex);
                double L = aux.param_length();
                DoubleIndex i0{top_index(arcs[0], aux_crossings, L),
                               bottom_index(arc_angles(aux, arcs[0]), cfg)};
                DoubleIndex i1{top_index(arcs[1], aux_crossings, L),
                               bottom_index(arc_angles(aux, arcs[1]), cfg)};
                JKind kind = classify_j_kind(tip_dir, d_b, tip, contact);
                return JSymbol(kind, i0, i1);
            } catch (const EpsilonTooLarge&) {
                continue;
            } catch (const NonOddBottomIndex&) {
                continue;
            }
        }
        throw SiteInvalid("no valid excision radius for the tangency symbol");
    }();

    out.delta = invariant_f(out.curve_plus, cfg) - invariant_f(out.curve_minus, cfg);
    out.predicted = f1(out.symbol);
    out.matches = out.delta == out.predicted;
    return out;
}

// Deterministic scan for workable J sites. Returns up to `max_sites`, each
// validated by a dry excision; the expensive surgery runs later.
inline std::vector<JSite> find_j_sites(const PlanarCurve& c, const ToleranceConfig& cfg = {},
                                       std::size_t max_sites = 8, int stride = 5) {
    std::vector<JSite> out;
    double diam = c.diameter();
    auto crossings = find_crossings(c);
    for (std::size_t ia = 1; ia < c.size() && out.size() < max_sites; ia += static_cast<std::size_t>(stride)) {
        double t_a = static_cast<double>(ia) + 0.5;
        Vec2 q_a = c.point_at(t_a);
        for (std::size_t ib = 0; ib < c.size(); ib += 2) {
            long sep = std::abs(static_cast<long>(ia) - static_cast<long>(ib));
            sep = std::min<long>(sep, static_cast<long>(c.size()) - sep);
            if (sep < 12) continue;
            Vec2 a = c.point(ib), b = c.point(ib + 1);
            Vec2 d = b - a;
            double f = d.norm2() > 0 ? std::clamp((q_a - a).dot(d) / d.norm2(), 0.0, 1.0) : 0.0;
            Vec2 q_b = a + d * f;
            double gap = (q_b - q_a).norm();
            if (gap < 2.2 * cfg.min_sep(diam) || gap > 0.1 * diam) continue;
            JSite site;
            site.a_param = t_a;
            site.b_param = c.wrap(static_cast<double>(ib) + f);
            try {
                detail::check_j_site(c, crossings, site, cfg);
            } catch (const std::exception&) {
                continue;
            }
            out.push_back(site);
            break;  // at most one site per window center
        }
    }
    return out;
}

// -------------------------------------------------------------------------
// S moves: three strands meeting in a small triangle; the move pushes one
// strand across the opposite crossing, flipping the triangle.
// -------------------------------------------------------------------------

struct SSite {
    std::array<std::size_t, 3> triangle;  // crossing ids forming the vanishing triangle
    int moved = 0;                        // which strand cluster to push (0..2, by parameter order)
    int samples = 96;
};

struct SMoveOutcome {
    PlanarCurve curve_plus, curve_minus;  // canonical orientation (see make_s_move)
    SSymbol symbol;
    XVector delta;  // F(curve_plus) - F(curve_minus)
    bool side_ambiguous = false;
};

namespace detail {

struct TriangleSite {
    Vec2 centroid;
    std::array<double, 3> strand_params;  // one parameter per strand, sorted
    double radius = 0;                    // triangle scale
};

// Groups the six crossing parameters of a candidate triangle into three
// strand clusters; empty if the crossings do not form a three-strand triangle.
inline std::optional<TriangleSite> triangle_of(const PlanarCurve& c, const std::vector<Crossing>& crossings,
                                               const std::array<std::size_t, 3>& ids) {
    Vec2 centroid{0, 0};
    for (std::size_t id : ids) centroid = centroid + crossings[id].location * (1.0 / 3.0);
    double radius = 0;
    for (std::size_t id : ids) radius = std::max(radius, (crossings[id].location - centroid).norm());
    if (radius <= 0) return std::nullopt;
    std::array<double, 6> params{crossings[ids[0]].s, crossings[ids[0]].t, crossings[ids[1]].s,
                                 crossings[ids[1]].t, crossings[ids[2]].s, crossings[ids[2]].t};
    std::sort(params.begin(), params.end());
    double L = c.param_length();
    auto near_center_between = [&](double p0, double p1) {
        double mid = p0 + 0.5 * wrapped_length(p0, p1, L);
        return (c.point_at(c.wrap(mid)) - centroid).norm() < 6.0 * radius;
    };
    std::array<int, 6> cluster{};
    int nc = 0;
    for (int i = 1; i < 6; ++i) {
        auto cur = static_cast<std::size_t>(i);
        bool same = params[cur] - params[cur - 1] < 0.02 * L && near_center_between(params[cur - 1], params[cur]);
        cluster[cur] = same ? nc : ++nc;
    }
    bool wrap_join = (L - params[5] + params[0]) < 0.02 * L && near_center_between(params[5], params[0]);
    int clusters = nc + 1;
    if (wrap_join && clusters > 1) {
        for (auto& cl : cluster)
            if (cl == nc) cl = 0;
        --clusters;
    }
    if (clusters != 3) return std::nullopt;
    std::array<int, 3> count{};
    std::array<double, 3> rep{};
    for (int i = 0; i < 6; ++i) {
        auto cl = static_cast<std::size_t>(cluster[static_cast<std::size_t>(i)]);
        if (cl > 2) return std::nullopt;
        ++count[cl];
        rep[cl] = params[static_cast<std::size_t>(i)];  // keep one visit per strand
    }
    if (count[0] != 2 || count[1] != 2 || count[2] != 2) return std::nullopt;
    TriangleSite site;
    site.centroid = centroid;
    site.radius = radius;
    for (std::size_t i = 0; i < 3; ++i)
        site.strand_params[i] = closest_param(c, centroid, rep[i], 0.011 * L);
    std::sort(site.strand_params.begin(), site.strand_params.end());
    return site;
}

}  // namespace detail

// Scans for vanishing triangles: triples of mutually close crossings on three
// pairwise-crossing strands with a clean surrounding disc.
inline std::vector<SSite> find_s_sites(const PlanarCurve& c, const ToleranceConfig& cfg = {},
                                       std::size_t max_sites = 6) {
    std::vector<SSite> out;
    auto crossings = find_crossings(c);
    double diam = c.diameter();
    for (std::size_t i = 0; i < crossings.size() && out.size() < max_sites; ++i) {
        for (std::size_t j = i + 1; j < crossings.size(); ++j) {
            for (std::size_t k = j + 1; k < crossings.size(); ++k) {
                double d1 = (crossings[i].location - crossings[j].location).norm();
                double d2 = (crossings[i].location - crossings[k].location).norm();
                double d3 = (crossings[j].location - crossings[k].location).norm();
                double r = std::max({d1, d2, d3});
                if (r > 0.04 * diam) continue;
                auto tri = detail::triangle_of(c, crossings, {i, j, k});
                if (!tri) continue;
                try {
                    make_excision(c, tri->centroid,
                                  {tri->strand_params[0], tri->strand_params[1], tri->strand_params[2]},
                                  8.0 * tri->radius);
                } catch (const EpsilonTooLarge&) {
                    continue;
                }
                bool crowded = false;
                for (std::size_t m = 0; m < crossings.size(); ++m) {
                    if (m == i || m == j || m == k) continue;
                    if ((crossings[m].location - tri->centroid).norm() < 10.0 * tri->radius) crowded = true;
                }
                if (crowded) continue;
                for (int moved = 0; moved < 3 && out.size() < max_sites; ++moved)
                    out.push_back(SSite{{i, j, k}, moved, 96});
            }
            if (out.size() >= max_sites) break;
        }
    }
    (void)cfg;
    return out;
}

inline SMoveOutcome make_s_move(const PlanarCurve& c0, const SSite& site, const ToleranceConfig& cfg = {}) {
    auto crossings0 = find_crossings(c0);
    for (std::size_t id : site.triangle)
        if (id >= crossings0.size()) throw SiteInvalid("triangle crossing id out of range");
    auto tri0 = detail::triangle_of(c0, crossings0, site.triangle);
    if (!tri0) throw SiteInvalid("crossings do not form a three-strand triangle");

    // Rotate the basepoint away from the moved window.
    double moved_param0 = tri0->strand_params[static_cast<std::size_t>(site.moved)];
    double L0 = c0.param_length();
    auto offset = static_cast<std::size_t>(c0.wrap(moved_param0 + L0 / 2));
    PlanarCurve c = detail::rotate_basepoint(c0, offset);
    auto crossings = find_crossings(c);

    // Re-locate the triangle on the rotated curve by geometry.
    std::array<std::size_t, 3> ids{};
    std::size_t found = 0;
    for (std::size_t m = 0; m < crossings.size() && found < 3; ++m)
        if ((crossings[m].location - tri0->centroid).norm() <= 2.0 * tri0->radius + 1e-12) ids[found++] = m;
    if (found != 3) throw SiteInvalid("triangle lost after basepoint rotation");
    auto tri = detail::triangle_of(c, crossings, ids);
    if (!tri) throw SiteInvalid("triangle lost after basepoint rotation");
    double L = c.param_length();
    double t_c = c.wrap(moved_param0 - static_cast<double>(offset));
    // snap to the recomputed strand parameter nearest the old one
    {
        double best = std::numeric_limits<double>::infinity();
        for (double p : tri->strand_params) {
            double d = std::min(detail::wrapped_length(p, t_c, L), detail::wrapped_length(t_c, p, L));
            if (d < best) {
                best = d;
                t_c = p;
            }
        }
    }

    // v = the crossing not involving the moved strand.
    const Crossing* v = nullptr;
    for (std::size_t m : ids) {
        double ds = std::min(detail::wrapped_length(crossings[m].s, t_c, L),
                             detail::wrapped_length(t_c, crossings[m].s, L));
        double dt = std::min(detail::wrapped_length(crossings[m].t, t_c, L),
                             detail::wrapped_length(t_c, crossings[m].t, L));
        if (std::min(ds, dt) > 0.008 * L) v = &crossings[m];
    }
    if (!v) throw SiteInvalid("could not identify the opposite crossing");

    double foot_param = detail::closest_param(c, v->location, t_c, 0.012 * L);
    Vec2 foot = c.point_at(foot_param);
    double h = (v->location - foot).norm();
    if (h <= 0 || h > 0.05 * c.diameter()) throw SiteInvalid("moved strand too far from the crossing");
    Vec2 push = (v->location - foot) * (1.0 / h);

    // displacement window on the moved strand
    double r_push = 10.0 * h;
    make_excision(c, v->location, {foot_param, v->s, v->t}, r_push);  // validity probe
    double wa = detail::walk_to_boundary(c, v->location, 0.8 * r_push, foot_param, -1);
    double wb = detail::walk_to_boundary(c, v->location, 0.8 * r_push, foot_param, +1);
    auto lo = static_cast<std::size_t>(std::ceil(wa));
    auto hi = static_cast<std::size_t>(std::floor(wb));
    if (lo >= hi || hi >= c.size()) throw SiteInvalid("degenerate S-move window");
    detail::BumpPlan plan = detail::plan_bump(c, lo, hi, push, foot_param, site.samples);

    std::size_t n_before = crossings.size();
    PlanarCurve resampled = detail::apply_bump(c, plan, 0.0);
    PlanarCurve flipped = detail::apply_bump(c, plan, 2.2 * h);
    GenericityReport rep_a = validate_stable(resampled, cfg);
    GenericityReport rep_b = validate_stable(flipped, cfg);
    if (!rep_a.stable || !rep_b.stable) throw StabilityLost("an S-move resolution is not stable");
    if (rep_a.crossings.size() != n_before || rep_b.crossings.size() != n_before)
        throw SiteInvalid("S move must preserve the crossing count");

    // Symbol from the nearly-singular configuration: the moved strand almost
    // through v.
    PlanarCurve aux = detail::apply_bump(c, plan, h * 0.99);
    auto aux_crossings = find_crossings(aux);
    if (aux_crossings.size() != n_before) throw SiteInvalid("auxiliary S curve changed crossings");
    double tau_c = detail::closest_param(aux, v->location, detail::shifted_param(plan, foot_param), 6.0);
    double tau_s = detail::closest_param(aux, v->location, detail::shifted_param(plan, v->s), 6.0);
    double tau_t = detail::closest_param(aux, v->location, detail::shifted_param(plan, v->t), 6.0);

    Excision ex = [&] {
        for (double eps_v = 6.0 * h;; eps_v *= 0.7) {
            if (eps_v < 0.05 * h) throw SiteInvalid("no valid excision for the S symbol");
            try {
                return make_excision(aux, v->location, {tau_c, tau_s, tau_t}, eps_v);
            } catch (const EpsilonTooLarge&) {
            }
        }
    }();
    auto arcs = excision_arcs(ex);
    double L_aux = aux.param_length();
    std::array<SEntry, 3> entries{};
    for (std::size_t i = 0; i < 3; ++i) {
        DoubleIndex di{top_index(arcs[i], aux_crossings, L_aux), bottom_index(arc_angles(aux, arcs[i]), cfg)};
        bool hat = arcs[i].start_dir.cross(arcs[i].end_dir) < 0;  // following strand points right
        entries[i] = SEntry{di, hat};
    }
    SSymbol symbol(entries);

    SMoveOutcome out;
    out.symbol = symbol;
    out.side_ambiguous = symbol.rotation_symmetric();

    // Canonical orientation: the strand following the canonical first arc
    // passes left (+1) or right (-1) of the crossing of the other two
    // strands; the left resolution is curve_plus.
    std::size_t first_pass = (static_cast<std::size_t>(symbol.canonical_shift) + 1) % 3;
    double first_param = ex.passes[first_pass].center_param;
    bool first_is_moved = std::min(detail::wrapped_length(tau_c, first_param, L_aux),
                                   detail::wrapped_length(first_param, tau_c, L_aux)) < 2.0;

    // The resolutions share the auxiliary curve's parameter structure, so aux
    // parameters serve directly as hints.
    auto side_of = [&](const PlanarCurve& curve) {
        auto cr = find_crossings(curve);
        std::vector<std::size_t> central;
        for (std::size_t m = 0; m < cr.size(); ++m)
            if ((cr[m].location - v->location).norm() < 1.2 * r_push) central.push_back(m);
        if (central.size() != 3) throw SiteInvalid("resolution lost its triangle");
        double Lc = curve.param_length();
        double probe_param = detail::closest_param(curve, v->location, first_is_moved ? tau_c : first_param,
                                                   first_is_moved ? 10.0 : 6.0);
        for (std::size_t m : central) {
            double ds = std::min(detail::wrapped_length(cr[m].s, probe_param, Lc),
                                 detail::wrapped_length(probe_param, cr[m].s, Lc));
            double dt = std::min(detail::wrapped_length(cr[m].t, probe_param, Lc),
                                 detail::wrapped_length(probe_param, cr[m].t, Lc));
            if (std::min(ds, dt) > 0.008 * Lc) {
                double fp = detail::closest_param(curve, cr[m].location, probe_param, 3.0);
                Vec2 dirv = curve.tangent_at(fp);
                Vec2 rel = cr[m].location - curve.point_at(fp);
                return dirv.cross(rel) > 0 ? 1 : -1;
            }
        }
        throw SiteInvalid("could not orient the S resolution");
    };

    int side_a = side_of(resampled);
    int side_b = side_of(flipped);
    if (side_a == side_b) throw SiteInvalid("S resolutions have the same orientation");
    out.curve_plus = side_a > 0 ? resampled : flipped;
    out.curve_minus = side_a > 0 ? flipped : resampled;
    out.delta = invariant_f(out.curve_plus, cfg) - invariant_f(out.curve_minus, cfg);
    return out;
}

// -------------------------------------------------------------------------
// Relation checks over sampled sites
// -------------------------------------------------------------------------

struct JRelationReport {
    std::size_t jplus_sites = 0, jplus_symmetric = 0;
    std::size_t jb_sites = 0, jb_match = 0;
    std::size_t all_sites = 0, all_match = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};

// Figure-level relations sampled over a corpus: J+ deltas are invariant under
// swapping the two strand roles, and JB deltas match the shifted JA formula.
inline JRelationReport verify_j_relations(const std::vector<PlanarCurve>& corpus,
                                          const ToleranceConfig& cfg = {},
                                          std::size_t max_sites_per_curve = 4) {
    JRelationReport rep;
    for (const PlanarCurve& c : corpus) {
        for (const JSite& site : find_j_sites(c, cfg, max_sites_per_curve)) {
            JMoveOutcome out;
            try {
                out = make_j_move(c, site, cfg);
            } catch (const std::exception&) {
                continue;
            }
            ++rep.all_sites;
            if (out.matches) ++rep.all_match;
            else
                rep.failures.push_back("delta mismatch for " + symbol_text(out.symbol));
            if (out.symbol.kind == JKind::JPlus) {
                JSite swapped = site;
                std::swap(swapped.a_param, swapped.b_param);
                try {
                    JMoveOutcome out2 = make_j_move(c, swapped, cfg);
                    ++rep.jplus_sites;
                    if (out2.delta == out.delta) ++rep.jplus_symmetric;
                    else
                        rep.failures.push_back("J+ swap asymmetry at " + symbol_text(out.symbol));
                } catch (const std::exception&) {
                }
            } else if (out.symbol.kind == JKind::JB) {
                ++rep.jb_sites;
                if (out.delta == f1_jb(out.symbol)) ++rep.jb_match;
                else
                    rep.failures.push_back("JB shifted prediction failed at " + symbol_text(out.symbol));
            }
        }
    }
    return rep;
}

}  // namespace planarinv
