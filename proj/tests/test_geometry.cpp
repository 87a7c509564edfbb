#include "planarinv/geometry.hpp"

#include <gtest/gtest.h>

#include <random>

#include "planarinv/rational.hpp"

using namespace planarinv;

TEST(Rational, DecimalParsing) {
    EXPECT_EQ(rat_from_decimal("0.5"), Rat(1, 2));
    EXPECT_EQ(rat_from_decimal("-12.0345"), Rat(-120345, 10000));
    EXPECT_EQ(rat_from_decimal("3"), Rat(3));
    EXPECT_THROW(rat_from_decimal("1e-3"), ParseError);
    EXPECT_THROW(rat_from_decimal(""), ParseError);
    EXPECT_THROW(rat_from_decimal("1.2.3"), ParseError);
}

TEST(Rational, DoubleConversionIsExact) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        double x = u(rng);
        EXPECT_EQ(rat_to_double(rat_from_double(x)), x);
    }
    EXPECT_EQ(rat_from_double(0.1), Rat(BigInt("3602879701896397"), BigInt("36028797018963968")));
}

TEST(Rational, FractionRoundTrip) {
    Rat r(-7, 12);
    EXPECT_EQ(rat_from_fraction(rat_to_string(r)), r);
    EXPECT_EQ(rat_to_string(Rat(4)), "4");
}

TEST(Orientation, FilteredMatchesExactNearDegeneracy) {
    // Points nearly on a line: double arithmetic alone cannot decide these.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double ax = u(rng), ay = u(rng);
        double bx = ax + u(rng), by = ay + u(rng);
        double f = 0.5 + 0.25 * u(rng);
        // c close to the segment, perturbed at the last-ulp scale
        double cx = ax + f * (bx - ax);
        double cy = ay + f * (by - ay) + u(rng) * 1e-18;
        ExactPoint a{{ax, ay}, {rat_from_double(ax), rat_from_double(ay)}};
        ExactPoint b{{bx, by}, {rat_from_double(bx), rat_from_double(by)}};
        ExactPoint c{{cx, cy}, {rat_from_double(cx), rat_from_double(cy)}};
        EXPECT_EQ(orient_filtered(a, b, c, true), orient_exact(a.exact, b.exact, c.exact));
    }
}

TEST(Orientation, ExactZeroOnCollinear) {
    ExactPoint a{{0, 0}, {Rat(0), Rat(0)}};
    ExactPoint b{{3, 3}, {Rat(3), Rat(3)}};
    ExactPoint c{{1, 1}, {Rat(1), Rat(1)}};
    EXPECT_EQ(orient_filtered(a, b, c, true), 0);
}

TEST(Segments, ProperCrossingAndDegeneracy) {
    auto P = [](double x, double y) {
        return ExactPoint{{x, y}, {rat_from_double(x), rat_from_double(y)}};
    };
    EXPECT_EQ(segments_cross(P(-1, 0), P(1, 0), P(0, -1), P(0, 1), true), SegSegResult::kProperCrossing);
    EXPECT_EQ(segments_cross(P(-1, 0), P(1, 0), P(2, -1), P(2, 1), true), SegSegResult::kDisjoint);
    // endpoint on the other segment's interior
    EXPECT_EQ(segments_cross(P(-1, 0), P(1, 0), P(0, 0), P(0, 1), true), SegSegResult::kDegenerate);
    // collinear overlap
    EXPECT_EQ(segments_cross(P(-1, 0), P(1, 0), P(0, 0), P(2, 0), true), SegSegResult::kDegenerate);
}

TEST(Angles, TurnBetween) {
    EXPECT_NEAR(turn_between({1, 0}, {0, 1}), kPi / 2, 1e-12);
    EXPECT_NEAR(turn_between({1, 0}, {0, -1}), -kPi / 2, 1e-12);
    EXPECT_NEAR(norm_angle_2pi(-0.1), kTwoPi - 0.1, 1e-12);
}
