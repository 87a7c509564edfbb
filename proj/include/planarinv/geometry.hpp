#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "planarinv/rational.hpp"

namespace planarinv {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 normalized() const {
        double n = norm();
        return {x / n, y / n};
    }
    Vec2 perp() const { return {-y, x}; }  // rotate +90 degrees
};

inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Normalize into (-pi, pi].
inline double norm_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    if (a > kPi) a -= kTwoPi;
    return a;
}

// Normalize into [0, 2*pi).
inline double norm_angle_2pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

// Signed rotation taking direction `from` to direction `to`, in (-pi, pi].
inline double turn_between(Vec2 from, Vec2 to) { return std::atan2(from.cross(to), from.dot(to)); }

struct RatVec {
    Rat x, y;
};

inline RatVec rat_vec(Vec2 v) { return {rat_from_double(v.x), rat_from_double(v.y)}; }

// -------------------------------------------------------------------------
// Exact orientation predicate with a floating-point filter.
//
// Curves keep exact rational coordinates alongside their double shadows. When
// the shadows are exact images of the rationals, orient_filtered trusts the
// double determinant whenever it clears a forward error bound and only then
// falls back to big-rational arithmetic.
// -------------------------------------------------------------------------

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline int orient_exact(const RatVec& a, const RatVec& b, const RatVec& c) {
    Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

// Error coefficient for the 2x2 difference determinant (Shewchuk's ccwerrboundA).
constexpr double kOrientErrBound = (3.0 + 16.0 * 2.220446049250313e-16) * 2.220446049250313e-16;

struct ExactPoint {
    Vec2 approx;   // double shadow
    RatVec exact;  // authoritative coordinates
};

inline int orient_filtered(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c,
                           bool shadows_exact) {
    if (shadows_exact) {
        double detleft = (b.approx.x - a.approx.x) * (c.approx.y - a.approx.y);
        double detright = (b.approx.y - a.approx.y) * (c.approx.x - a.approx.x);
        double det = detleft - detright;
        double detsum = std::abs(detleft) + std::abs(detright);
        if (std::abs(det) > kOrientErrBound * detsum) return det > 0 ? 1 : -1;
        if (detsum == 0.0) return 0;
    }
    return orient_exact(a.exact, b.exact, c.exact);
}

// Proper interior crossing of segments [a0,a1] and [b0,b1]. Touching or
// collinear configurations are degenerate, not crossings.
enum class SegSegResult { kDisjoint, kProperCrossing, kDegenerate };

inline SegSegResult segments_cross(const ExactPoint& a0, const ExactPoint& a1, const ExactPoint& b0,
                                   const ExactPoint& b1, bool shadows_exact) {
    int o1 = orient_filtered(a0, a1, b0, shadows_exact);
    int o2 = orient_filtered(a0, a1, b1, shadows_exact);
    int o3 = orient_filtered(b0, b1, a0, shadows_exact);
    int o4 = orient_filtered(b0, b1, a1, shadows_exact);
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        if (o1 != o2 && o3 != o4) return SegSegResult::kProperCrossing;
        return SegSegResult::kDisjoint;
    }
    // A zero orientation only matters if the segments' boxes actually meet.
    auto overlap = [](double lo1, double hi1, double lo2, double hi2) {
        return std::max(lo1, lo2) <= std::min(hi1, hi2);
    };
    if (overlap(std::min(a0.approx.x, a1.approx.x), std::max(a0.approx.x, a1.approx.x),
                std::min(b0.approx.x, b1.approx.x), std::max(b0.approx.x, b1.approx.x)) &&
        overlap(std::min(a0.approx.y, a1.approx.y), std::max(a0.approx.y, a1.approx.y),
                std::min(b0.approx.y, b1.approx.y), std::max(b0.approx.y, b1.approx.y))) {
        return SegSegResult::kDegenerate;
    }
    return SegSegResult::kDisjoint;
}

// Intersection parameters of two properly crossing segments, in double
// precision. Exactness is only needed for the existence/sign tests; the
// location feeds angle computations that are rounded to integers downstream.
inline std::pair<double, double> segment_intersection_params(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    Vec2 d1 = a1 - a0;
    Vec2 d2 = b1 - b0;
    double den = d1.cross(d2);
    Vec2 w = b0 - a0;
    double s = w.cross(d2) / den;
    double t = w.cross(d1) / den;
    return {s, t};
}

inline double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    double len2 = d.norm2();
    if (len2 == 0.0) return (p - a).norm();
    double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
    return (p - (a + d * t)).norm();
}

inline double dist_segment_segment(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    double d = dist_point_segment(a0, b0, b1);
    d = std::min(d, dist_point_segment(a1, b0, b1));
    d = std::min(d, dist_point_segment(b0, a0, a1));
    d = std::min(d, dist_point_segment(b1, a0, a1));
    return d;
}

}  // namespace planarinv
