#include "planarinv/symbols.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace planarinv;

namespace {

std::mt19937_64 rng(42);

int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
int rand_odd() { return 2 * rand_int(-4, 4) + 1; }

DoubleIndex rand_index() { return {rand_int(-4, 4), rand_odd()}; }

XVector xv(std::initializer_list<std::pair<XSymbol, int>> terms) {
    XVector v;
    for (auto& [s, c] : terms) v.add(s, c);
    return v;
}

}  // namespace

TEST(Psi, SymbolMap) {
    XVector a;
    a.add(XSymbol(1, 2, 1, 1), 1);
    EXPECT_TRUE(psi(a).is_zero());  // k = l collapses

    XVector b;
    b.add(XSymbol(1, 2, 1, 3), 1);
    YVector yb = psi(b);
    EXPECT_EQ(yb.coeff(YSymbol(3, 1, 3)), Rat(1));
    EXPECT_EQ(yb.term_count(), 1u);

    XVector c;
    c.add(XSymbol(0, 1, 3, 1), 1);
    YVector yc = psi(c);
    EXPECT_EQ(yc.coeff(YSymbol(1, 1, 3)), Rat(-1));  // canonicalization sign
}

TEST(Psi, LinearAndKillsDiagonal) {
    for (int i = 0; i < 50; ++i) {
        int aa = rand_int(-5, 5), bb = rand_int(-5, 5), kk = rand_odd();
        XVector v;
        v.add(XSymbol(aa, bb, kk, kk), Rat(rand_int(1, 9), rand_int(1, 9)));
        EXPECT_TRUE(psi(v).is_zero());
    }
    XVector u = xv({{XSymbol(1, 0, 1, 3), 2}, {XSymbol(0, 1, 3, 1), 3}});
    XVector w = xv({{XSymbol(2, 2, -1, 1), 5}});
    EXPECT_EQ(psi(u + w), psi(u) + psi(w));
}

TEST(Functionals, DefiningValues) {
    YVector y1;
    add_y_raw(y1, 0, -1, 1, 1);
    EXPECT_EQ(g_m(y1, 0), Rat(-2));
    EXPECT_EQ(g_m(y1, 5), Rat(0));

    YVector y1r;
    add_y_raw(y1r, 0, 1, -1, 1);  // antisymmetric partner
    EXPECT_EQ(g_m(y1r, 0), Rat(2));

    YVector y2;
    add_y_raw(y2, 2, -1, 3, 1);
    EXPECT_EQ(g_m(y2, 0), Rat(2));  // (l - k)/2 on the k + l = 2 stratum
}

TEST(Grading, Arithmetic) {
    EXPECT_EQ(grade(XSymbol(1, 0, 1, -1)), 1);
    EXPECT_EQ(grade(XSymbol(0, 0, 1, -1)), 0);
    EXPECT_EQ(grade(XSymbol(2, 1, 1, 1)), 1);
}

TEST(F1, JPlusFormula) {
    JSymbol j(JKind::JPlus, {0, 1}, {0, -1});
    XVector expect = xv({{XSymbol(0, 0, 1, -1), 1}, {XSymbol(0, 0, -1, 1), 1}});
    EXPECT_EQ(f1_jplus(j), expect);

    JSymbol swapped(JKind::JPlus, {0, -1}, {0, 1});
    EXPECT_EQ(f1_jplus(swapped), expect);  // unordered pair

    JSymbol coincident(JKind::JPlus, {2, 3}, {2, 3});
    XVector two = f1_jplus(coincident);
    EXPECT_EQ(two.coeff(XSymbol(2, 2, 3, 3)), Rat(2));
    EXPECT_EQ(two.term_count(), 1u);

    EXPECT_THROW(f1_jplus(JSymbol(JKind::JA, {0, 1}, {0, 1})), WrongKind);
}

TEST(F1, JAFormula) {
    JSymbol j(JKind::JA, {0, 1}, {0, -1});
    XVector expect = xv({{XSymbol(0, 1, 1, -1), 1}, {XSymbol(0, 1, -1, 1), 1}});
    EXPECT_EQ(f1_ja(j), expect);
    EXPECT_EQ(f1_ja(JSymbol(JKind::JA, {0, -1}, {0, 1})), expect);

    JSymbol coincident(JKind::JA, {3, 1}, {3, 1});
    EXPECT_EQ(f1_ja(coincident).coeff(XSymbol(3, 4, 1, 1)), Rat(2));
    EXPECT_THROW(f1_ja(JSymbol(JKind::JPlus, {0, 1}, {0, 1})), WrongKind);
}

TEST(F1, JBReducesToShiftedJA) {
    JSymbol j(JKind::JB, {1, 1}, {1, -1});
    XVector expect = xv({{XSymbol(0, 1, 1, -1), 1}, {XSymbol(0, 1, -1, 1), 1}});
    EXPECT_EQ(f1_jb(j), expect);
    EXPECT_EQ(f1_jb(j), f1_ja(JSymbol(JKind::JA, {0, 1}, {0, -1})));

    JSymbol coincident(JKind::JB, {2, 5}, {2, 5});
    EXPECT_EQ(f1_jb(coincident).coeff(XSymbol(1, 2, 5, 5)), Rat(2));
    EXPECT_THROW(f1_jb(JSymbol(JKind::JA, {0, 1}, {0, 1})), WrongKind);
}

TEST(F1, PsiKillsAllJImages) {
    for (int i = 0; i < 200; ++i) {
        JKind kind = static_cast<JKind>(rand_int(0, 2));
        JSymbol j(kind, rand_index(), rand_index());
        YVector y = psi(f1(j));
        EXPECT_TRUE(y.is_zero()) << symbol_text(j);
        for (int m = -8; m <= 8; ++m) EXPECT_EQ(g_m(y, m), Rat(0));
    }
}

TEST(F1, ImageGrading) {
    for (int i = 0; i < 200; ++i) {
        DoubleIndex a = rand_index(), b = rand_index();
        int base = a.i1 + b.i1 - a.i2 - b.i2;
        for (auto& [s, c] : f1_jplus(JSymbol(JKind::JPlus, a, b))) EXPECT_EQ(grade(s), base);
        for (auto& [s, c] : f1_ja(JSymbol(JKind::JA, a, b))) EXPECT_EQ(grade(s), base + 1);
        for (auto& [s, c] : f1_jb(JSymbol(JKind::JB, a, b))) EXPECT_EQ(grade(s), base - 1);
    }
}

TEST(Serialize, CanonicalText) {
    EXPECT_EQ(to_text(XVector{}), "0");
    XVector v;
    v.add(XSymbol(1, 0, 1, -1), 1);
    EXPECT_EQ(to_text(v), "X[1,0;1,-1]");
    v.add(XSymbol(0, 0, 1, 1), Rat(-3, 2));
    EXPECT_EQ(to_text(v), "-3/2*X[0,0;1,1] + X[1,0;1,-1]");
    EXPECT_EQ(parse_xvector(to_text(v)), v);
    EXPECT_EQ(parse_xvector("0"), XVector{});
    EXPECT_THROW(parse_xvector("X[1,0;1,0]"), ParseError);  // even bottom entry
    EXPECT_THROW(parse_xvector("Z[1,0;1,1]"), ParseError);
}

TEST(Serialize, RoundTripRandomVectors) {
    for (int trial = 0; trial < 100; ++trial) {
        XVector v;
        int terms = rand_int(0, 6);
        for (int i = 0; i < terms; ++i)
            v.add(XSymbol(rand_int(-6, 6), rand_int(-6, 6), rand_odd(), rand_odd()),
                  Rat(rand_int(-12, 12), rand_int(1, 12)));
        EXPECT_EQ(parse_xvector(to_text(v)), v);

        YVector y;
        for (int i = 0; i < terms; ++i)
            add_y_raw(y, rand_int(-6, 6), rand_odd(), rand_odd(), Rat(rand_int(-12, 12), rand_int(1, 12)));
        EXPECT_EQ(parse_yvector(to_text(y)), y);
    }
}

TEST(Symbols, JCanonicalization) {
    JSymbol a(JKind::JA, {2, 1}, {0, -1});
    JSymbol b(JKind::JA, {0, -1}, {2, 1});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.first, (DoubleIndex{0, -1}));
    EXPECT_EQ(symbol_text(a), "JA[(0,-1),(2,1)]");
}

TEST(Symbols, SCanonicalRotation) {
    std::array<SEntry, 3> e1{SEntry{{1, 1}, false}, SEntry{{0, -1}, true}, SEntry{{2, 3}, false}};
    std::array<SEntry, 3> e2{SEntry{{0, -1}, true}, SEntry{{2, 3}, false}, SEntry{{1, 1}, false}};
    std::array<SEntry, 3> e3{SEntry{{2, 3}, false}, SEntry{{1, 1}, false}, SEntry{{0, -1}, true}};
    SSymbol s1{e1}, s2{e2}, s3{e3};
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(s2, s3);
    EXPECT_EQ(s1.entries[0].index, (DoubleIndex{0, -1}));
    EXPECT_FALSE(s1.rotation_symmetric());

    std::array<SEntry, 3> sym{SEntry{{0, 1}, true}, SEntry{{0, 1}, true}, SEntry{{0, 1}, true}};
    EXPECT_TRUE(SSymbol{sym}.rotation_symmetric());

    // hats distinguish otherwise equal triples
    std::array<SEntry, 3> f1{SEntry{{0, 1}, true}, SEntry{{0, 1}, false}, SEntry{{0, 1}, false}};
    std::array<SEntry, 3> f2{SEntry{{0, 1}, true}, SEntry{{0, 1}, true}, SEntry{{0, 1}, false}};
    EXPECT_NE(SSymbol{f1}, SSymbol{f2});
}
