#pragma once

#include <utility>
#include <vector>

#include "planarinv/curve.hpp"
#include "planarinv/indices.hpp"
#include "planarinv/symbols.hpp"

namespace planarinv {

struct CrossingIndices {
    Crossing crossing;
    DoubleIndex first, second;  // arcs ordered by the frame: u1 leads to `first`
    double eps = 0;
};

struct InvariantResult {
    XVector f, g, f_hat;
    YVector k;
    int whitney = 0;
    std::vector<CrossingIndices> per_crossing;
};

// Sum over crossings of X^{a1,b1}_{a2,b2}, the a-column coming from the arc
// led by u1. Lemma xw makes every term's grade equal the Whitney number; a
// mismatch proves a computation bug or non-generic input and is fatal.
inline XVector assemble_f(const std::vector<CrossingIndices>& per_crossing, int whitney) {
    XVector f;
    for (const CrossingIndices& ci : per_crossing) {
        XSymbol term(ci.first.i1, ci.second.i1, ci.first.i2, ci.second.i2);
        if (grade(term) != whitney)
            throw GradingViolation("term " + symbol_text(term) + " has grade " +
                                   std::to_string(grade(term)) + " but whitney number is " +
                                   std::to_string(whitney));
        f.add(term, 1);
    }
    return f;
}

inline XVector whitney_correction(int whitney) {
    XVector g;
    g.add(XSymbol(whitney, 0, 1, -1), 1);
    return g;
}

inline InvariantResult compute_invariant(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    GenericityReport rep = validate_stable(c, cfg);
    if (!rep.stable)
        throw NotStable(rep.violations.empty() ? "curve is not stable" : rep.violations.front());

    InvariantResult out;
    out.whitney = whitney_number(c, cfg);
    for (std::size_t i = 0; i < rep.crossings.size(); ++i) {
        CrossingIndices ci;
        ci.crossing = rep.crossings[i];
        ci.eps = default_epsilon(c, rep.crossings, i, cfg);
        std::tie(ci.first, ci.second) = double_index(c, rep.crossings[i], ci.eps, rep.crossings, cfg);
        out.per_crossing.push_back(ci);
    }
    out.f = assemble_f(out.per_crossing, out.whitney);
    out.g = whitney_correction(out.whitney);
    out.f_hat = out.f + out.g;
    out.k = psi(out.f);
    return out;
}

inline XVector invariant_f(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    return compute_invariant(c, cfg).f;
}
inline XVector invariant_g(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    return whitney_correction(whitney_number(c, cfg));
}
inline XVector invariant_f_hat(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    return compute_invariant(c, cfg).f_hat;
}
inline YVector invariant_k(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    return compute_invariant(c, cfg).k;
}

}  // namespace planarinv
