// Performs one J move and one S move and shows the delta against the symbol
// formula prediction.

#include <cstdio>

#include "planarinv/curve_gen.hpp"
#include "planarinv/moves.hpp"

using namespace planarinv;

int main() {
    PlanarCurve eight = make_squashed_eight();
    auto j_sites = find_j_sites(eight);
    if (!j_sites.empty()) {
        JMoveOutcome out = make_j_move(eight, j_sites[0]);
        std::printf("J move at (a=%.1f, b=%.1f)\n", j_sites[0].a_param, j_sites[0].b_param);
        std::printf("  symbol    = %s\n", symbol_text(out.symbol).c_str());
        std::printf("  delta     = %s\n", to_text(out.delta).c_str());
        std::printf("  predicted = %s\n", to_text(out.predicted).c_str());
        std::printf("  matches   = %s\n", out.matches ? "yes" : "no");
    }

    ToleranceConfig loose;
    loose.min_sep_frac = 1e-5;  // the gadget's vanishing triangle is tiny by design
    PlanarCurve gadget = make_triple_gadget({});
    auto s_sites = find_s_sites(gadget, loose);
    if (!s_sites.empty()) {
        SMoveOutcome out = make_s_move(gadget, s_sites[0], loose);
        std::printf("S move on the triple gadget\n");
        std::printf("  symbol = %s\n", symbol_text(out.symbol).c_str());
        std::printf("  delta  = %s\n", to_text(out.delta).c_str());
    }
    return 0;
}
