#include "planarinv/exactness.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace planarinv;

TEST(ModelBasis, ListHeads) {
    EXPECT_EQ(detail::d_element(1), (std::pair<int, int>{0, 0}));  // 2 E_0
    EXPECT_EQ(detail::d_element(2), (std::pair<int, int>{0, 1}));
    EXPECT_EQ(detail::d_element(3), (std::pair<int, int>{-1, 1}));
    EXPECT_EQ(detail::d_element(4), (std::pair<int, int>{-1, 2}));
    EXPECT_EQ(detail::d_element(5), (std::pair<int, int>{-2, 2}));
    EXPECT_EQ(detail::d_element(6), (std::pair<int, int>{-2, 3}));
    EXPECT_EQ(detail::e_position(0), 0u);
    EXPECT_EQ(detail::e_position(1), 1u);
    EXPECT_EQ(detail::e_position(-1), 2u);
    EXPECT_EQ(detail::e_position(2), 3u);
}

TEST(ModelBasis, PrefixSpansCoincide) {
    for (std::size_t depth : {1u, 3u, 50u}) {
        RankCertificate cert = model_basis_check(depth);
        EXPECT_TRUE(cert.pass) << cert.detail;
        EXPECT_EQ(cert.rank, depth);
        // pivots strictly increasing makes the certificate re-checkable
        for (std::size_t i = 1; i < cert.pivots.size(); ++i) EXPECT_LT(cert.pivots[i - 1], cert.pivots[i]);
    }
}

TEST(BuildB, DiagonalWindowHeads) {
    BWindow bw = build_B({0, 1, 1, 2});
    ASSERT_EQ(bw.b.size(), 2u);
    ASSERT_EQ(bw.monomials.size(), 2u);
    EXPECT_EQ(bw.monomials[0], XSymbol(0, 0, 1, 1));
    EXPECT_EQ(bw.monomials[1], XSymbol(-1, 1, 1, 1));
    EXPECT_EQ(bw.generators[0], JSymbol(JKind::JPlus, {0, 1}, {0, 1}));
    EXPECT_EQ(bw.generators[1], JSymbol(JKind::JA, {0, 1}, {-1, 1}));
    EXPECT_EQ(bw.b[0].coeff(XSymbol(0, 0, 1, 1)), Rat(2));
    EXPECT_EQ(bw.b[1].coeff(XSymbol(0, 0, 1, 1)), Rat(1));
    EXPECT_EQ(bw.b[1].coeff(XSymbol(-1, 1, 1, 1)), Rat(1));
}

TEST(BuildB, OffDiagonalMergedElement) {
    BWindow bw = build_B({0, -1, 1, 5});
    // the two diagonal monomials are replaced by the single J+ image
    XVector merged = bw.b[0];
    EXPECT_EQ(merged.coeff(XSymbol(0, 0, -1, 1)), Rat(1));
    EXPECT_EQ(merged.coeff(XSymbol(0, 0, 1, -1)), Rat(1));
    EXPECT_EQ(merged.term_count(), 2u);
    EXPECT_EQ(bw.monomials.size(), 6u);
    EXPECT_EQ(bw.monomials[0], XSymbol(0, 0, -1, 1));
    EXPECT_EQ(bw.monomials[1], XSymbol(0, 0, 1, -1));
}

TEST(BuildB, EveryElementIsAnF1Image) {
    for (TruncationWindow w : {TruncationWindow{0, 1, 1, 12}, TruncationWindow{3, 1, 1, 12},
                               TruncationWindow{0, -1, 1, 12}, TruncationWindow{5, 1, 3, 12},
                               TruncationWindow{-2, -3, 1, 12}}) {
        BWindow bw = build_B(w);
        ASSERT_EQ(bw.generators.size(), bw.b.size());
        std::set<JSymbol> seen;
        for (std::size_t i = 0; i < bw.b.size(); ++i) {
            EXPECT_TRUE(bw.generators[i].kind == JKind::JPlus || bw.generators[i].kind == JKind::JA);
            EXPECT_EQ(f1(bw.generators[i]), bw.b[i]);
            EXPECT_TRUE(seen.insert(bw.generators[i]).second) << "duplicate generator";
            // direct-sum discipline: every monomial stays in the window's block
            for (auto& [sym, coeff] : bw.b[i]) {
                EXPECT_EQ(sym.a + sym.b, w.n);
                bool kl = sym.k == w.k && sym.l == w.l;
                bool lk = sym.k == w.l && sym.l == w.k;
                EXPECT_TRUE(kl || lk) << symbol_text(sym);
            }
        }
    }
}

TEST(BuildB, RejectsBadWindows) {
    EXPECT_THROW(build_B({0, 2, 2, 4}), WindowMisaligned);   // even entries
    EXPECT_THROW(build_B({0, 3, 1, 4}), WindowMisaligned);   // k > l
}

TEST(PropAnkl, DiagonalSpanning) {
    RankCertificate cert = verify_prop_ankl({0, 1, 1, 30});
    EXPECT_TRUE(cert.pass) << cert.detail;
    EXPECT_EQ(cert.rank, 30u);
    EXPECT_EQ(cert.claimed_codim, 0u);
    EXPECT_EQ(cert.cols, 30u);
}

TEST(PropAnkl, OffDiagonalCodimensionOne) {
    for (TruncationWindow w : {TruncationWindow{0, -1, 1, 30}, TruncationWindow{7, 1, 3, 30}}) {
        RankCertificate cert = verify_prop_ankl(w);
        EXPECT_TRUE(cert.pass) << cert.detail;
        EXPECT_EQ(cert.rank, 30u);
        EXPECT_EQ(cert.claimed_codim, 1u);
        EXPECT_EQ(cert.cols, 31u);
    }
}

TEST(Exactness, WindowReports) {
    ExactnessReport r1 = verify_exactness({2, 1, 1, 24});
    EXPECT_TRUE(r1.pass);
    EXPECT_TRUE(r1.injective);
    EXPECT_TRUE(r1.psi_kills_image);
    EXPECT_EQ(r1.psi_image_dim, 0u);

    ExactnessReport r2 = verify_exactness({-1, -1, 1, 24});
    EXPECT_TRUE(r2.pass);
    EXPECT_EQ(r2.psi_image_dim, 1u);
    EXPECT_TRUE(r2.kernel_in_span);

    ExactnessReport r3 = verify_exactness({4, -3, 1, 24}, 9);
    EXPECT_TRUE(r3.pass);
}

TEST(Exactness, AcceptanceWindowGrid) {
    for (int n = -3; n <= 3; ++n) {
        for (auto [k, l] : {std::pair{1, 1}, {-1, -1}, {-1, 1}, {1, 3}, {-3, 1}}) {
            TruncationWindow w{n, k, l, 16};
            EXPECT_TRUE(verify_prop_ankl(w).pass) << "n=" << n << " k=" << k << " l=" << l;
            EXPECT_TRUE(verify_exactness(w).pass) << "n=" << n << " k=" << k << " l=" << l;
        }
    }
}
