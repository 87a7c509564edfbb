// Computes the universal invariant for the base curves and prints the
// per-crossing double indices.

#include <cstdio>

#include "planarinv/curve_gen.hpp"
#include "planarinv/invariant.hpp"

using namespace planarinv;

int main() {
    for (int m = -3; m <= 3; ++m) {
        PlanarCurve c = base_curve(m);
        InvariantResult r = compute_invariant(c);
        std::printf("Gamma_%+d  (%zu points, %zu crossings)\n", m, c.size(), r.per_crossing.size());
        std::printf("  F     = %s\n", to_text(r.f).c_str());
        std::printf("  F-hat = %s\n", to_text(r.f_hat).c_str());
        std::printf("  K     = %s\n", to_text(r.k).c_str());
        for (const CrossingIndices& ci : r.per_crossing)
            std::printf("  crossing at (%+.3f, %+.3f): indices (%d,%d | %d,%d)\n", ci.crossing.location.x,
                        ci.crossing.location.y, ci.first.i1, ci.first.i2, ci.second.i1, ci.second.i2);
    }
    return 0;
}
