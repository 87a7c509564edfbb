#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "planarinv/config.hpp"
#include "planarinv/errors.hpp"
#include "planarinv/geometry.hpp"

namespace planarinv {

// -------------------------------------------------------------------------
// PlanarCurve: a closed oriented polyline approximating an immersion of S^1.
// Parameter space is [0, L) with L = number of segments; parameter t lies on
// segment floor(t) at fraction t - floor(t). Coordinates are kept both as
// exact rationals (authoritative for all crossing combinatorics) and as
// double shadows (used for angles and distances).
// -------------------------------------------------------------------------
class PlanarCurve {
  public:
    static PlanarCurve from_points(std::vector<Vec2> pts) {
        PlanarCurve c;
        c.pts_.reserve(pts.size());
        for (Vec2 p : pts) c.pts_.push_back(ExactPoint{p, {rat_from_double(p.x), rat_from_double(p.y)}});
        c.shadows_exact_ = true;
        c.finish();
        return c;
    }

    static PlanarCurve from_exact(std::vector<RatVec> pts) {
        PlanarCurve c;
        c.pts_.reserve(pts.size());
        bool exact = true;
        for (auto& p : pts) {
            Vec2 approx{rat_to_double(p.x), rat_to_double(p.y)};
            exact = exact && rat_from_double(approx.x) == p.x && rat_from_double(approx.y) == p.y;
            c.pts_.push_back(ExactPoint{approx, std::move(p)});
        }
        c.shadows_exact_ = exact;
        c.finish();
        return c;
    }

    std::size_t size() const { return pts_.size(); }
    double param_length() const { return static_cast<double>(pts_.size()); }
    bool shadows_exact() const { return shadows_exact_; }

    const ExactPoint& vertex(std::size_t i) const { return pts_[i % pts_.size()]; }
    Vec2 point(std::size_t i) const { return pts_[i % pts_.size()].approx; }

    Vec2 point_at(double t) const {
        double tw = wrap(t);
        auto i = static_cast<std::size_t>(tw);
        double f = tw - static_cast<double>(i);
        Vec2 a = point(i), b = point(i + 1);
        return a + (b - a) * f;
    }

    Vec2 seg_vec(std::size_t i) const { return point(i + 1) - point(i); }
    Vec2 seg_dir(std::size_t i) const { return seg_vec(i).normalized(); }
    Vec2 tangent_at(double t) const { return seg_dir(static_cast<std::size_t>(wrap(t))); }

    double wrap(double t) const {
        double L = param_length();
        double r = std::fmod(t, L);
        if (r < 0) r += L;
        if (r >= L) r = 0;  // guards fmod landing exactly on L
        return r;
    }

    double diameter() const { return diameter_; }

    PlanarCurve reversed() const {
        std::vector<RatVec> rev;
        rev.reserve(size());
        // keep the starting vertex, reverse traversal order
        rev.push_back(pts_[0].exact);
        for (std::size_t i = size(); i-- > 1;) rev.push_back(pts_[i].exact);
        return from_exact(std::move(rev));
    }

    PlanarCurve mirrored() const {
        std::vector<RatVec> m;
        m.reserve(size());
        for (auto& p : pts_) m.push_back(RatVec{p.exact.x, -p.exact.y});
        return from_exact(std::move(m));
    }

    // Doubles the sampling density by inserting segment midpoints.
    PlanarCurve resampled_doubled() const {
        std::vector<RatVec> out;
        out.reserve(2 * size());
        for (std::size_t i = 0; i < size(); ++i) {
            const RatVec& a = pts_[i].exact;
            const RatVec& b = pts_[(i + 1) % size()].exact;
            out.push_back(a);
            out.push_back(RatVec{(a.x + b.x) / 2, (a.y + b.y) / 2});
        }
        return from_exact(std::move(out));
    }

    // Structural invariants: enough points, nonzero segments, vertex turns
    // below 90 degrees so the tangent is well defined along the polyline.
    void validate() const {
        if (size() < 8) throw MalformedCurve("need at least 8 points, got " + std::to_string(size()));
        for (std::size_t i = 0; i < size(); ++i) {
            const RatVec& a = pts_[i].exact;
            const RatVec& b = pts_[(i + 1) % size()].exact;
            if (a.x == b.x && a.y == b.y)
                throw MalformedCurve("zero-length segment at index " + std::to_string(i));
        }
        for (std::size_t i = 0; i < size(); ++i) {
            Vec2 d0 = seg_vec(i == 0 ? size() - 1 : i - 1);
            Vec2 d1 = seg_vec(i);
            if (d0.dot(d1) <= 0.0)
                throw MalformedCurve("vertex turn >= 90 degrees at index " + std::to_string(i));
        }
    }

  private:
    void finish() {
        double lox = 0, hix = 0, loy = 0, hiy = 0;
        bool first = true;
        for (auto& p : pts_) {
            if (first) {
                lox = hix = p.approx.x;
                loy = hiy = p.approx.y;
                first = false;
            } else {
                lox = std::min(lox, p.approx.x);
                hix = std::max(hix, p.approx.x);
                loy = std::min(loy, p.approx.y);
                hiy = std::max(hiy, p.approx.y);
            }
        }
        diameter_ = std::hypot(hix - lox, hiy - loy);
    }

    std::vector<ExactPoint> pts_;
    bool shadows_exact_ = false;
    double diameter_ = 0.0;
};

// -------------------------------------------------------------------------
// Crossings
// -------------------------------------------------------------------------

struct Crossing {
    std::size_t seg_a = 0, seg_b = 0;  // seg_a < seg_b, non-adjacent
    double s = 0, t = 0;               // parameters of the two visits, s < t
    Vec2 location;
    int sign = 0;  // sign of det(tangent at s, tangent at t); exact
    Vec2 u1, u2;   // unit tangents with det(u1, u2) > 0
};

struct GenericityReport {
    double min_crossing_separation = 0.0;   // length units
    double min_transversality_angle = 0.0;  // degrees
    bool stable = false;
    std::vector<std::string> violations;
    std::vector<Crossing> crossings;  // crossings found during validation
};

namespace detail {

inline int cross_sign_exact(const RatVec& a0, const RatVec& a1, const RatVec& b0, const RatVec& b1) {
    Rat det = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
    return sign_of(det);
}

inline int cross_sign_filtered(const ExactPoint& a0, const ExactPoint& a1, const ExactPoint& b0,
                               const ExactPoint& b1, bool shadows_exact) {
    if (shadows_exact) {
        double dl = (a1.approx.x - a0.approx.x) * (b1.approx.y - b0.approx.y);
        double dr = (a1.approx.y - a0.approx.y) * (b1.approx.x - b0.approx.x);
        double det = dl - dr;
        double sum = std::abs(dl) + std::abs(dr);
        if (std::abs(det) > kOrientErrBound * sum) return det > 0 ? 1 : -1;
        if (sum == 0.0) return 0;
    }
    return cross_sign_exact(a0.exact, a1.exact, b0.exact, b1.exact);
}

// Uniform grid over the bounding box; reports candidate non-adjacent segment
// pairs whose cells coincide.
inline std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const PlanarCurve& c) {
    const std::size_t n = c.size();
    double lox = c.point(0).x, hix = lox, loy = c.point(0).y, hiy = loy;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 p = c.point(i);
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    const int kGrid = 64;
    double cw = std::max((hix - lox) / kGrid, 1e-300);
    double ch = std::max((hiy - loy) / kGrid, 1e-300);
    std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(kGrid) * kGrid);
    auto cell_range = [&](Vec2 a, Vec2 b) {
        int x0 = std::clamp(static_cast<int>((std::min(a.x, b.x) - lox) / cw), 0, kGrid - 1);
        int x1 = std::clamp(static_cast<int>((std::max(a.x, b.x) - lox) / cw), 0, kGrid - 1);
        int y0 = std::clamp(static_cast<int>((std::min(a.y, b.y) - loy) / ch), 0, kGrid - 1);
        int y1 = std::clamp(static_cast<int>((std::max(a.y, b.y) - loy) / ch), 0, kGrid - 1);
        return std::array<int, 4>{x0, x1, y0, y1};
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto r = cell_range(c.point(i), c.point(i + 1));
        for (int gx = r[0]; gx <= r[1]; ++gx)
            for (int gy = r[2]; gy <= r[3]; ++gy)
                cells[static_cast<std::size_t>(gy) * kGrid + gx].push_back(static_cast<std::uint32_t>(i));
    }
    std::vector<std::uint64_t> keys;
    for (auto& cell : cells) {
        for (std::size_t a = 0; a < cell.size(); ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
                std::uint32_t i = std::min(cell[a], cell[b]);
                std::uint32_t j = std::max(cell[a], cell[b]);
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent: never tested
                keys.push_back((static_cast<std::uint64_t>(i) << 32) | j);
            }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(keys.size());
    for (auto k : keys) out.emplace_back(static_cast<std::size_t>(k >> 32), static_cast<std::size_t>(k & 0xffffffffu));
    return out;
}

inline bool bbox_overlap(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    return std::max(std::min(a0.x, a1.x), std::min(b0.x, b1.x)) <=
               std::min(std::max(a0.x, a1.x), std::max(b0.x, b1.x)) &&
           std::max(std::min(a0.y, a1.y), std::min(b0.y, b1.y)) <=
               std::min(std::max(a0.y, a1.y), std::max(b0.y, b1.y));
}

// Shared detection core. Degenerate contacts are either collected (genericity
// validation) or thrown (strict mode).
inline std::vector<Crossing> detect_crossings(const PlanarCurve& c, std::vector<std::string>* degeneracies) {
    std::vector<Crossing> out;
    const bool se = c.shadows_exact();
    for (auto [i, j] : candidate_pairs(c)) {
        const ExactPoint& a0 = c.vertex(i);
        const ExactPoint& a1 = c.vertex(i + 1);
        const ExactPoint& b0 = c.vertex(j);
        const ExactPoint& b1 = c.vertex(j + 1);
        if (!bbox_overlap(a0.approx, a1.approx, b0.approx, b1.approx)) continue;
        SegSegResult r = segments_cross(a0, a1, b0, b1, se);
        if (r == SegSegResult::kDisjoint) continue;
        if (r == SegSegResult::kDegenerate) {
            std::string msg = "segments " + std::to_string(i) + " and " + std::to_string(j) +
                              " touch or overlap degenerately";
            if (degeneracies) {
                degeneracies->push_back(msg);
                continue;
            }
            throw DegenerateIntersection(msg);
        }
        auto [fs, ft] = segment_intersection_params(a0.approx, a1.approx, b0.approx, b1.approx);
        Crossing x;
        x.seg_a = i;
        x.seg_b = j;
        x.s = static_cast<double>(i) + fs;
        x.t = static_cast<double>(j) + ft;
        x.location = a0.approx + (a1.approx - a0.approx) * fs;
        x.sign = cross_sign_filtered(a0, a1, b0, b1, se);
        Vec2 da = (a1.approx - a0.approx).normalized();
        Vec2 db = (b1.approx - b0.approx).normalized();
        if (x.sign > 0) {
            x.u1 = da;
            x.u2 = db;
        } else {
            x.u1 = db;
            x.u2 = da;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        return a.s < b.s || (a.s == b.s && a.t < b.t);
    });
    return out;
}

}  // namespace detail

// Every non-adjacent segment pair is tested with exact orientation predicates;
// throws DegenerateIntersection on collinear or endpoint contact.
inline std::vector<Crossing> find_crossings(const PlanarCurve& c) {
    return detail::detect_crossings(c, nullptr);
}

// -------------------------------------------------------------------------
// Turning and winding
// -------------------------------------------------------------------------

// Signed tangent turning accumulated along the oriented subarc (from, to],
// additive over concatenation. Vertices at integer parameters contribute
// their exterior angle when passed.
inline double turning_along(const PlanarCurve& c, double from, double to) {
    double L = c.param_length();
    double a = c.wrap(from), b = c.wrap(to);
    if (a == b) throw MalformedCurve("turning_along requires from != to");
    if (b < a) b += L;
    double total = 0.0;
    auto n = static_cast<long>(L);
    for (long k = static_cast<long>(std::floor(a)) + 1; k <= static_cast<long>(std::floor(b)); ++k) {
        long v = ((k % n) + n) % n;
        long prev = (v + n - 1) % n;
        total += turn_between(c.seg_vec(static_cast<std::size_t>(prev)), c.seg_vec(static_cast<std::size_t>(v)));
    }
    return total;
}

// Sum of signed exterior angles over a full traversal, divided by 2*pi.
inline int whitney_number(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t prev = (i + c.size() - 1) % c.size();
        total += turn_between(c.seg_vec(prev), c.seg_vec(i));
    }
    double w = total / kTwoPi;
    double rounded = std::round(w);
    if (std::abs(w - rounded) > cfg.integer_residual)
        throw NonIntegerTurning("turning residual " + std::to_string(std::abs(w - rounded)));
    return static_cast<int>(rounded);
}

// Accumulated rotation of the direction vector (curve point - base) along the
// oriented subarc. Errors out if the subarc comes within `tol` of the base.
inline double radial_winding(const PlanarCurve& c, Vec2 base, double from, double to, double tol = 0.0) {
    double L = c.param_length();
    double a = c.wrap(from), b = c.wrap(to);
    if (a == b) throw MalformedCurve("radial_winding requires from != to");
    if (b < a) b += L;
    if (tol <= 0.0) tol = 1e-12 * std::max(c.diameter(), 1.0);

    double total = 0.0;
    Vec2 prev_pt = c.point_at(a);
    Vec2 prev_dir = prev_pt - base;
    double t_prev = a;
    auto step_to = [&](double t_next) {
        Vec2 pt = c.point_at(t_next);
        if (dist_point_segment(base, prev_pt, pt) < tol)
            throw BasePointOnCurve("subarc passes within tolerance of base point");
        Vec2 dir = pt - base;
        total += turn_between(prev_dir, dir);
        prev_pt = pt;
        prev_dir = dir;
        t_prev = t_next;
    };
    for (long k = static_cast<long>(std::floor(a)) + 1; k <= static_cast<long>(std::floor(b)); ++k)
        step_to(static_cast<double>(k));
    if (t_prev < b) step_to(b);
    return total;
}

// -------------------------------------------------------------------------
// Genericity validation
// -------------------------------------------------------------------------

// Transversality angle between the two tangent lines at a crossing, in (0, 90]
// degrees.
inline double crossing_angle_deg(const Crossing& x) {
    double a = std::abs(norm_angle(angle_of(x.u2) - angle_of(x.u1)));
    if (a > kPi / 2) a = kPi - a;
    return a * 180.0 / kPi;
}

// stable = true iff all self-intersections are pairwise-transverse double
// points: angles >= min_angle, pairwise separation >= min_sep, and no third
// strand within min_sep of any crossing.
inline GenericityReport validate_stable(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    c.validate();
    GenericityReport rep;
    std::vector<std::string> degen;
    rep.crossings = detail::detect_crossings(c, &degen);
    for (auto& d : degen) rep.violations.push_back("degenerate intersection: " + d);

    const double min_sep = cfg.min_sep(c.diameter());
    double min_angle = 90.0, min_dist = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < rep.crossings.size(); ++i) {
        const Crossing& x = rep.crossings[i];
        double ang = crossing_angle_deg(x);
        min_angle = std::min(min_angle, ang);
        if (ang < cfg.min_angle_deg)
            rep.violations.push_back("crossing at (" + std::to_string(x.location.x) + ", " +
                                     std::to_string(x.location.y) + ") angle " + std::to_string(ang) +
                                     " deg below minimum");
        for (std::size_t j = i + 1; j < rep.crossings.size(); ++j) {
            double d = (rep.crossings[j].location - x.location).norm();
            min_dist = std::min(min_dist, d);
            if (d < min_sep)
                rep.violations.push_back("crossings " + std::to_string(i) + " and " + std::to_string(j) +
                                         " separated by " + std::to_string(d) + " < min_sep");
        }
        // Third-strand proximity: walk outward from each incident segment while
        // the strand stays within min_sep of the crossing; anything else that
        // close is a violation.
        std::vector<bool> incident(c.size(), false);
        for (std::size_t seg0 : {x.seg_a, x.seg_b}) {
            incident[seg0] = true;
            for (int dir : {-1, 1}) {
                std::size_t cur = seg0;
                for (std::size_t steps = 0; steps + 2 < c.size(); ++steps) {
                    cur = (cur + c.size() + static_cast<std::size_t>(dir)) % c.size();
                    if (dist_point_segment(x.location, c.point(cur), c.point(cur + 1)) >= min_sep) break;
                    incident[cur] = true;
                }
            }
        }
        for (std::size_t sgi = 0; sgi < c.size(); ++sgi) {
            if (incident[sgi]) continue;
            double d = dist_point_segment(x.location, c.point(sgi), c.point(sgi + 1));
            if (d < min_sep) {
                rep.violations.push_back("third strand (segment " + std::to_string(sgi) + ") within " +
                                         std::to_string(d) + " of crossing " + std::to_string(i));
                break;
            }
        }
    }
    if (!rep.crossings.empty()) {
        rep.min_transversality_angle = min_angle;
        rep.min_crossing_separation = std::isfinite(min_dist) ? min_dist : c.diameter();
    } else {
        rep.min_transversality_angle = 90.0;
        rep.min_crossing_separation = c.diameter();
    }
    rep.stable = rep.violations.empty();
    return rep;
}

}  // namespace planarinv
