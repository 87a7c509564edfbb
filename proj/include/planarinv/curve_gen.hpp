#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "planarinv/curve.hpp"

namespace planarinv {

inline PlanarCurve make_circle(int samples = 256, double radius = 1.0) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples;
        pts.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return PlanarCurve::from_points(std::move(pts));
}

// Sampling phase keeps polyline vertices away from the analytic
// self-intersection parameters (a vertex exactly on a crossing would be a
// degenerate contact for the exact predicates).
constexpr double kSamplePhase = 0.37;

// (sin 2t, sin t): one transverse crossing at the origin, Whitney number 0.
inline PlanarCurve make_figure_eight(int samples = 512, double phase = kSamplePhase) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples + phase;
        pts.push_back({std::sin(2 * t), std::sin(t)});
    }
    return PlanarCurve::from_points(std::move(pts));
}

// Epitrochoid with `loops` small inner loops: Whitney number loops + 1 and one
// crossing per loop.
inline PlanarCurve make_epitrochoid(int loops, int samples_per_lobe = 256, double d = 1.5,
                                    double phase = kSamplePhase) {
    int k = loops;
    int samples = samples_per_lobe * (k + 1);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples + phase;
        double x = (k + 1) * std::cos(t) - d * std::cos((k + 1) * t);
        double y = (k + 1) * std::sin(t) - d * std::sin((k + 1) * t);
        pts.push_back({x, y});
    }
    return PlanarCurve::from_points(std::move(pts));
}

// Vertically squashed figure-eight: the near-axis strands of the two lobes
// run parallel at small gaps, giving clean direct-tangency move sites whose
// exterior arcs are the embedded lobes.
inline PlanarCurve make_squashed_eight(double squash = 0.3, int samples = 640,
                                       double phase = kSamplePhase) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples + phase;
        pts.push_back({std::sin(2 * t), squash * std::sin(t)});
    }
    return PlanarCurve::from_points(std::move(pts));
}

// Circle traversed twice with radial modulation: one crossing, Whitney
// number 2, and long stretches of parallel strands at a controllable gap.
inline PlanarCurve make_double_loop(double a = 0.28, int samples = 768, double phase = kSamplePhase) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * kTwoPi * i / samples + phase;
        double r = 1.0 + a * std::cos(t / 2);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return PlanarCurve::from_points(std::move(pts));
}

// Deterministic base curve with Whitney number m: figure-eight for m = 0,
// embedded circle for |m| = 1, circle with |m| - 1 small loops otherwise;
// negative m mirrors the positive model.
inline PlanarCurve base_curve(int m) {
    PlanarCurve c = [&] {
        int a = std::abs(m);
        if (a == 0) return make_figure_eight();
        if (a == 1) return make_circle();
        return make_epitrochoid(a - 1);
    }();
    return m < 0 ? c.mirrored() : c;
}

// Random curve with trigonometric-polynomial coordinates of low degree.
// Returns the curve only if it is stable under `cfg` with at most
// `max_crossings` crossings.
inline std::optional<PlanarCurve> random_trig_curve(std::uint64_t seed, const ToleranceConfig& cfg = {},
                                                    int max_crossings = 10, int samples = 512) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (seed * 0xbf58476d1ce4e5b9ull + 1));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    constexpr int kDeg = 3;
    double ax[kDeg], bx[kDeg], ay[kDeg], by[kDeg];
    for (int j = 0; j < kDeg; ++j) {
        double damp = 1.0 / (j + 1);
        ax[j] = u(rng) * damp;
        bx[j] = u(rng) * damp;
        ay[j] = u(rng) * damp;
        by[j] = u(rng) * damp;
    }
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples;
        double x = 0, y = 0;
        for (int j = 0; j < kDeg; ++j) {
            x += ax[j] * std::cos((j + 1) * t) + bx[j] * std::sin((j + 1) * t);
            y += ay[j] * std::cos((j + 1) * t) + by[j] * std::sin((j + 1) * t);
        }
        pts.push_back({x, y});
    }
    PlanarCurve c = PlanarCurve::from_points(std::move(pts));
    try {
        GenericityReport rep = validate_stable(c, cfg);
        if (!rep.stable || rep.crossings.size() > static_cast<std::size_t>(max_crossings)) return std::nullopt;
        whitney_number(c, cfg);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return c;
}

// Corpus used by property and acceptance tests: base curves for m in
// [-m_range, m_range] plus seeded random curves up to `total`.
inline std::vector<PlanarCurve> build_corpus(std::size_t total = 50, int m_range = 4,
                                             const ToleranceConfig& cfg = {}) {
    std::vector<PlanarCurve> out;
    for (int m = -m_range; m <= m_range; ++m) out.push_back(base_curve(m));
    for (std::uint64_t seed = 1; out.size() < total && seed < 4000; ++seed) {
        if (auto c = random_trig_curve(seed, cfg)) out.push_back(std::move(*c));
    }
    return out;
}

// -------------------------------------------------------------------------
// Triple-strand gadget: three chords of the unit circle passing pairwise
// close to the origin (a small vanishing triangle), joined outside the circle
// by smooth Bezier connectors into a single closed curve. Used to realize
// triple-point move sites with controllable exterior-arc indices.
// -------------------------------------------------------------------------

struct TripleGadgetParams {
    double angles[3] = {0.0, kTwoPi / 6, 2 * kTwoPi / 6};  // chord direction angles
    double offsets[3] = {0.004, -0.004, 0.004};            // signed normal offsets from origin
    bool flip[3] = {false, false, false};                  // reverse traversal of chord i
    double handle = 0.9;                                   // Bezier handle scale
    double wiggle = 0.0;                                   // connector shape jitter
    int chord_samples = 160;
    int connector_samples = 120;
};

namespace detail {

inline void append_bezier(std::vector<Vec2>& pts, Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, int samples) {
    for (int i = 1; i < samples; ++i) {
        double u = static_cast<double>(i) / samples;
        double v = 1 - u;
        Vec2 q = p0 * (v * v * v) + p1 * (3 * v * v * u) + p2 * (3 * v * u * u) + p3 * (u * u * u);
        pts.push_back(q);
    }
}

}  // namespace detail

inline PlanarCurve make_triple_gadget(const TripleGadgetParams& gp) {
    struct Chord {
        Vec2 entry, exit, dir;
    };
    Chord ch[3];
    for (int i = 0; i < 3; ++i) {
        Vec2 dir{std::cos(gp.angles[i]), std::sin(gp.angles[i])};
        if (gp.flip[i]) dir = -dir;
        Vec2 n = dir.perp();
        Vec2 mid = n * gp.offsets[i];
        double half = std::sqrt(std::max(1.0 - gp.offsets[i] * gp.offsets[i], 0.0));
        ch[i].entry = mid - dir * half;
        ch[i].exit = mid + dir * half;
        ch[i].dir = dir;
    }
    std::vector<Vec2> pts;
    for (int i = 0; i < 3; ++i) {
        // chord i, densified near the center where the triangle lives
        Vec2 a = ch[i].entry, b = ch[i].exit;
        for (int s = 0; s < gp.chord_samples; ++s) {
            double u = static_cast<double>(s) / gp.chord_samples;
            // monotone reparametrization, ~4x denser around u = 0.5 where the
            // vanishing triangle lives
            double w = u + 0.12 * std::sin(kTwoPi * u);
            pts.push_back(a + (b - a) * w);
        }
        pts.push_back(b);
        // connector to the next chord's entry
        const Chord& nx = ch[(i + 1) % 3];
        double h = gp.handle * (b - nx.entry).norm() * 0.5 + 0.4;
        Vec2 w1 = ch[i].dir.perp() * (gp.wiggle * std::sin(1.7 + i));
        detail::append_bezier(pts, b, b + ch[i].dir * h + w1, nx.entry - nx.dir * h + w1, nx.entry,
                              gp.connector_samples);
    }
    return PlanarCurve::from_points(std::move(pts));
}

}  // namespace planarinv
