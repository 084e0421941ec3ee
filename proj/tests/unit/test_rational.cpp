#include <gtest/gtest.h>

#include "entcat/rational.hpp"
#include "generators.hpp"

using namespace entcat;

TEST(Rational, CanonicalForm) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, 5).str(), "0/1");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseDecimalIsExact) {
    EXPECT_EQ(parse_rational("0.45"), Rational(9, 20));
    EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-2.50"), Rational(-5, 2));
    EXPECT_EQ(parse_rational("3."), Rational(3));
}

TEST(Rational, ParseFraction) {
    EXPECT_EQ(parse_rational("3/5"), Rational(3, 5));
    EXPECT_EQ(parse_rational("6/10"), Rational(3, 5));
    EXPECT_EQ(parse_rational(" -1/3 "), Rational(-1, 3));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("123456789012345678901234567890/3").num().get_str(),
              "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"", "-", ".", "1/", "/2", "1/-2", "0.4.5", "1e3", "abc", "1 /2", "0x10"}) {
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(parse_rational("3/0"), std::invalid_argument);
}

TEST(Rational, Mediant) {
    EXPECT_EQ(mediant(Rational(1, 2), Rational(1, 3)), Rational(2, 5));
    EXPECT_EQ(mediant(Rational(3, 5), Rational(3, 5)), Rational(3, 5));
    // Representation matters: 2/4 and 1/2 are equal but their mediants with 1/3 differ.
    EXPECT_EQ(mediant(FractionPair{2, 4}, FractionPair{1, 3}), Rational(3, 7));
    EXPECT_THROW(mediant(FractionPair{1, 0}, FractionPair{1, 3}), std::invalid_argument);
    EXPECT_THROW(mediant(FractionPair{1, -2}, FractionPair{1, 3}), std::invalid_argument);
}

TEST(RationalProperty, MediantLiesBetween) {
    gen::Rng rng(7);
    for (int i = 0; i < 5000; ++i) {
        FractionPair x{gen::pick(rng, 0, 50), gen::pick(rng, 1, 50)};
        FractionPair y{gen::pick(rng, 0, 50), gen::pick(rng, 1, 50)};
        Rational xv(x.num, x.den), yv(y.num, y.den);
        if (xv < yv) std::swap(x, y), std::swap(xv, yv);
        const Rational med = mediant(x, y);
        ASSERT_TRUE(xv >= med && med >= yv) << x.num << "/" << x.den << " " << y.num << "/" << y.den;
    }
}

TEST(RationalProperty, RenderRoundTrip) {
    gen::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        Rational x(gen::pick(rng, -100000, 100000), gen::pick(rng, 1, 100000));
        ASSERT_EQ(parse_rational(x.str()), x);
        const auto dec = to_decimal(x);
        if (!dec.approximate) {
            ASSERT_EQ(parse_rational(dec.text), x) << dec.text;
        }
    }
}

TEST(RationalProperty, TotalOrder) {
    gen::Rng rng(13);
    for (int i = 0; i < 2000; ++i) {
        Rational a(gen::pick(rng, -20, 20), gen::pick(rng, 1, 20));
        Rational b(gen::pick(rng, -20, 20), gen::pick(rng, 1, 20));
        const int holds = int(a < b) + int(a == b) + int(a > b);
        ASSERT_EQ(holds, 1);
        ASSERT_LT(ExtendedRational(a), ExtendedRational::infinity());
        ASSERT_TRUE((ExtendedRational::infinity() <=> a) > 0);
    }
}

TEST(ExtendedRational, Infinity) {
    const auto inf = ExtendedRational::infinity();
    EXPECT_TRUE(inf.is_infinite());
    EXPECT_EQ(inf, ExtendedRational::infinity());
    EXPECT_EQ(inf.str(), "inf");
    EXPECT_THROW((void)inf.value(), std::logic_error);
    EXPECT_FALSE(inf == Rational(1000000));
    EXPECT_TRUE(ExtendedRational(Rational(3, 5)) == Rational(3, 5));
}

TEST(Rational, DecimalRendering) {
    EXPECT_EQ(to_decimal(Rational(9, 20)).text, "0.45");
    EXPECT_FALSE(to_decimal(Rational(9, 20)).approximate);
    EXPECT_EQ(to_decimal(Rational(-1, 8)).text, "-0.125");
    EXPECT_EQ(to_decimal(Rational(3)).text, "3");
    EXPECT_EQ(to_decimal(Rational(0)).text, "0");
    const auto third = to_decimal(Rational(2, 3), 6);
    EXPECT_EQ(third.text, "0.666667");
    EXPECT_TRUE(third.approximate);
    EXPECT_EQ(to_decimal(Rational(-1, 3), 4).text, "-0.3333");
}
