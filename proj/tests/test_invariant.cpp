#include "planarinv/invariant.hpp"

#include <gtest/gtest.h>

#include "planarinv/curve_gen.hpp"

using namespace planarinv;

TEST(Invariant, EmbeddedCircles) {
    PlanarCurve circle = make_circle();
    InvariantResult r = compute_invariant(circle);
    EXPECT_TRUE(r.f.is_zero());
    EXPECT_EQ(to_text(r.g), "X[1,0;1,-1]");
    EXPECT_EQ(to_text(r.f_hat), "X[1,0;1,-1]");
    EXPECT_TRUE(r.k.is_zero());
    EXPECT_EQ(r.whitney, 1);

    InvariantResult rr = compute_invariant(circle.reversed());
    EXPECT_TRUE(rr.f.is_zero());
    EXPECT_EQ(to_text(rr.f_hat), "X[-1,0;1,-1]");

    // separation: F vanishes on both embedded curves, F-hat distinguishes them
    EXPECT_EQ(r.f, rr.f);
    EXPECT_NE(r.f_hat, rr.f_hat);
}

TEST(Invariant, FigureEight) {
    InvariantResult r = compute_invariant(make_figure_eight());
    EXPECT_EQ(r.whitney, 0);
    EXPECT_EQ(to_text(r.f), "X[0,0;1,-1]");
    EXPECT_EQ(to_text(r.g), "X[0,0;1,-1]");
    EXPECT_EQ(to_text(r.f_hat), "2*X[0,0;1,-1]");
    EXPECT_EQ(to_text(r.k), "-Y[0;-1,1]");
    ASSERT_EQ(r.per_crossing.size(), 1u);
    EXPECT_EQ(r.per_crossing[0].first, (DoubleIndex{0, 1}));
    EXPECT_EQ(r.per_crossing[0].second, (DoubleIndex{0, -1}));
}

TEST(Invariant, GammaThreeRose) {
    InvariantResult r = compute_invariant(base_curve(3));
    EXPECT_EQ(r.whitney, 3);
    ASSERT_EQ(r.per_crossing.size(), 2u);
    EXPECT_EQ(r.f.coeff(XSymbol(-1, 0, -3, -1)), Rat(2));
    EXPECT_EQ(r.f.term_count(), 1u);
    for (auto& [s, c] : r.f) EXPECT_EQ(grade(s), 3);
}

TEST(Invariant, BaseCurveFamily) {
    for (int m = -4; m <= 4; ++m) {
        PlanarCurve c = base_curve(m);
        InvariantResult r = compute_invariant(c);
        EXPECT_EQ(r.whitney, m) << "m=" << m;
        std::size_t expect = m == 0 ? 1 : static_cast<std::size_t>(std::abs(m) - 1);
        EXPECT_EQ(r.per_crossing.size(), expect) << "m=" << m;
    }
}

TEST(Invariant, StructuralIdentities) {
    for (int m : {-3, 0, 2, 4}) {
        InvariantResult r = compute_invariant(base_curve(m));
        EXPECT_EQ(r.f_hat, r.f + r.g);
        EXPECT_EQ(r.k, psi(r.f));
        // Psi(F-hat) = K + Psi(G), with Psi(G) = Y^{w}_{1,-1}
        YVector psig;
        add_y_raw(psig, r.whitney, 1, -1, 1);
        EXPECT_EQ(psi(r.f_hat), r.k + psig);
    }
}

TEST(Invariant, BaseCurveFunctionalValues) {
    // g_m(K(Gamma_m')) = 2 delta_{m,m'} delta_{m',0} and
    // g_m(Psi(F-hat(Gamma_m'))) = 2 (1 + delta_{m',0}) delta_{m,m'}
    for (int mp = -4; mp <= 4; ++mp) {
        InvariantResult r = compute_invariant(base_curve(mp));
        YVector psi_fhat = psi(r.f_hat);
        for (int m = -4; m <= 4; ++m) {
            Rat expect_k = (m == mp && mp == 0) ? Rat(2) : Rat(0);
            EXPECT_EQ(g_m(r.k, m), expect_k) << "m=" << m << " m'=" << mp;
            Rat expect_fhat = m == mp ? Rat(2 * (1 + (mp == 0 ? 1 : 0))) : Rat(0);
            EXPECT_EQ(g_m(psi_fhat, m), expect_fhat) << "m=" << m << " m'=" << mp;
        }
    }
}

TEST(Invariant, GradingAcrossCorpus) {
    for (auto& c : build_corpus(40)) {
        InvariantResult r = compute_invariant(c);
        for (auto& [s, coeff] : r.f) EXPECT_EQ(grade(s), r.whitney);
    }
}

TEST(Invariant, GradingViolationIsFatal) {
    std::vector<CrossingIndices> bogus(1);
    bogus[0].first = DoubleIndex{0, 1};
    bogus[0].second = DoubleIndex{0, -1};
    EXPECT_NO_THROW(assemble_f(bogus, 0));
    EXPECT_THROW(assemble_f(bogus, 1), GradingViolation);
}

TEST(Invariant, NonGenericInputRejected) {
    EXPECT_THROW(compute_invariant(make_triple_gadget({})), NotStable);
    ToleranceConfig loose;
    loose.min_sep_frac = 1e-5;
    EXPECT_NO_THROW(compute_invariant(make_triple_gadget({}), loose));
}
