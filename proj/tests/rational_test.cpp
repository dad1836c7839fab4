#include "reals/rational.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace reals;
using test_util::Rng;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, 8).numerator(), 3);
    EXPECT_EQ(Rational(6, 8).denominator(), 4);
    EXPECT_EQ(Rational(3, -4).numerator(), -3);
    EXPECT_EQ(Rational(3, -4).denominator(), 4);
    EXPECT_EQ(Rational(-3, -4), Rational(3, 4));
    EXPECT_EQ(Rational(0, 17).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticStaysCanonical) {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = test_util::random_rational(rng);
        Rational b = test_util::random_rational(rng);
        for (const Rational& r : {a + b, a - b, a * b}) {
            Int g;
            mpz_gcd(g.get_mpz_t(), Int(::abs(r.numerator())).get_mpz_t(),
                    r.denominator().get_mpz_t());
            EXPECT_EQ(g, 1);
            EXPECT_GT(r.denominator(), 0);
        }
    }
}

TEST(Rational, ComparisonAndHelpers) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(abs(Rational(-3, 4)), Rational(3, 4));
    EXPECT_EQ(Rational(7, 2).floor_int(), 3);
    EXPECT_EQ(Rational(-7, 2).floor_int(), -4);
    EXPECT_EQ(Rational(7, 2).ceil_int(), 4);
    EXPECT_EQ(Rational(1, 3).inverse(), Rational(3));
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
    EXPECT_EQ(Rational::pow2(4), Rational(16));
}

TEST(Gauge, RejectsNonPositive) {
    EXPECT_THROW(Gauge(Rational(0)), std::domain_error);
    EXPECT_THROW(Gauge(Rational(-1, 2)), std::domain_error);
    EXPECT_EQ(Gauge(Rational(1)).half().value(), Rational(1, 2));
}

TEST(SimplestInInterval, ZeroAndDegenerate) {
    EXPECT_EQ(simplest_in_interval(Rational(0), Rational(1)), Rational(0));
    EXPECT_EQ(simplest_in_interval(Rational(-1, 7), Rational(1, 9)), Rational(0));
    EXPECT_EQ(simplest_in_interval(Rational(1, 3), Rational(1, 3)), Rational(1, 3));
    EXPECT_EQ(simplest_in_interval(Rational(-5, 7), Rational(-5, 7)), Rational(-5, 7));
    EXPECT_THROW(simplest_in_interval(Rational(1), Rational(0)), std::invalid_argument);
}

TEST(SimplestInInterval, PiWindowIsTwentyTwoSevenths) {
    Rational lo(313959, 100000);
    Rational hi(314359, 100000);
    EXPECT_EQ(simplest_in_interval(lo, hi), Rational(22, 7));

    // Enumerate every fraction with |n| + |d| <= 29: 22/7 must be the only
    // one inside the window, so it is simplest under either ordering.
    int hits = 0;
    for (long d = 1; d <= 28; ++d) {
        for (long n = -(29 - d); n <= 29 - d; ++n) {
            Rational q(n, d);
            if (lo <= q && q <= hi) {
                ++hits;
                EXPECT_EQ(q, Rational(22, 7));
            }
        }
    }
    EXPECT_GE(hits, 1);
}

TEST(SimplestInInterval, NegativeIntervalMirrors) {
    EXPECT_EQ(simplest_in_interval(Rational(-314359, 100000), Rational(-313959, 100000)),
              Rational(-22, 7));
    // Multiple integers: smallest magnitude wins on either side of zero.
    EXPECT_EQ(simplest_in_interval(Rational(3, 2), Rational(7, 2)), Rational(2));
    EXPECT_EQ(simplest_in_interval(Rational(-7, 2), Rational(-3, 2)), Rational(-2));
}

TEST(SimplestInInterval, AgreesWithBruteForceOracle) {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Rational a = test_util::random_rational(rng, 40, 25);
        Rational width(1 + static_cast<long>(rng() % 50), 25);
        Rational b = a + width;
        auto expected = test_util::oracle_simplest(a, b, 50);
        ASSERT_TRUE(expected.has_value());
        EXPECT_EQ(simplest_in_interval(a, b), *expected);
    }
}

TEST(Approx, SpecValues) {
    EXPECT_EQ(approx(Rational(2, 5), Gauge(Rational(1, 2))), Rational(0));
    EXPECT_EQ(approx(Rational(17, 12), Gauge(Rational(1, 8))), Rational(3, 2));
    EXPECT_EQ(approx(Rational(17, 12), Gauge(Rational(1, 32))), Rational(7, 5));
}

TEST(Approx, MatchesOracleOnNewtonWindows) {
    // The same values the spec derives by brute force over denominators
    // 1..24 and 1..96.
    auto o1 = test_util::oracle_simplest(Rational(31, 24), Rational(37, 24), 24);
    ASSERT_TRUE(o1.has_value());
    EXPECT_EQ(*o1, Rational(3, 2));
    auto o2 = test_util::oracle_simplest(Rational(133, 96), Rational(139, 96), 96);
    ASSERT_TRUE(o2.has_value());
    EXPECT_EQ(*o2, Rational(7, 5));
}

TEST(Approx, StaysWithinGauge) {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        Rational a = test_util::random_rational(rng, 1000, 800);
        Rational e(1 + static_cast<long>(rng() % 64), 1 + static_cast<long>(rng() % 512));
        Rational r = approx(a, Gauge(e));
        EXPECT_LE(abs(r - a), e);
    }
}

TEST(RoundNearest, HalfToEven) {
    EXPECT_EQ(round_nearest(Rational(7, 2)), 4);
    EXPECT_EQ(round_nearest(Rational(5, 2)), 2);
    EXPECT_EQ(round_nearest(Rational(-1, 3)), 0);
    EXPECT_EQ(round_nearest(Rational(-25, 2)), -12);
    EXPECT_EQ(round_nearest(Rational(3)), 3);
}

TEST(RoundNearest, WithinHalf) {
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        Rational a = test_util::random_rational(rng, 2000, 999);
        Int r = round_nearest(a);
        EXPECT_LE(abs(Rational(r) - a), Rational(1, 2));
    }
}

TEST(TermStreams, PowersAndFactorials) {
    PowerStream p(Rational(2, 3));
    EXPECT_EQ(p.next(), Rational(1));
    EXPECT_EQ(p.next(), Rational(2, 3));
    EXPECT_EQ(p.next(), Rational(4, 9));

    PowerStream z(Rational(0));
    EXPECT_EQ(z.next(), Rational(1));
    EXPECT_EQ(z.next(), Rational(0));
    EXPECT_EQ(z.next(), Rational(0));

    FactorialStream f;
    EXPECT_EQ(f.next(), 1);
    EXPECT_EQ(f.next(), 1);
    EXPECT_EQ(f.next(), 2);
    EXPECT_EQ(f.next(), 6);
    EXPECT_EQ(f.next(), 24);
}

TEST(TermStreams, IncrementalInvariants) {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        Rational x = test_util::random_rational(rng, 9, 9);
        PowerStream p(x);
        Rational prev = p.next();
        for (int i = 0; i < 8; ++i) {
            Rational cur = p.next();
            EXPECT_EQ(cur, prev * x);
            prev = cur;
        }
    }
    FactorialStream f;
    Int prev = f.next();
    for (long i = 1; i <= 12; ++i) {
        Int cur = f.next();
        EXPECT_EQ(cur, prev * i);
        prev = cur;
    }
}
