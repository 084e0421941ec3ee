#include <gtest/gtest.h>

#include "entcat/catalysis.hpp"
#include "entcat/construction.hpp"
#include "generators.hpp"

using namespace entcat;

namespace {

std::array<Rational, 4> over160(long a, long b, long c, long d) {
    return {Rational(a, 160), Rational(b, 160), Rational(c, 160), Rational(d, 160)};
}

void expect_spectrum(const Spectrum4& s, const std::array<Rational, 4>& expected) {
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s[i], expected[i]) << i;
}

}  // namespace

TEST(ChooseMu, WorkedExample) {
    EXPECT_EQ(choose_mu(Rational(2, 3), Rational(1, 3)), Rational(1, 10));
}

TEST(ChooseMu, CompensatesForLeadingOrder) {
    // The branch bound 5/24 would allow a2 > a1; a1 >= a2 needs mu <= 1/6.
    const Rational mu = choose_mu(Rational(1), Rational(1, 10));
    EXPECT_GT(mu, Rational(0));
    EXPECT_LT(mu, Rational(1, 6));
    EXPECT_THROW(construct_states(Rational(1), Rational(1, 10), Rational(1, 5)), std::invalid_argument);
}

TEST(Construct, WorkedExample) {
    const auto r = construct_states(Rational(2, 3), Rational(1, 3));
    EXPECT_EQ(r.branch, ConstructionBranch::SmallM);
    EXPECT_EQ(r.mu, Rational(1, 10));
    EXPECT_EQ(r.a, Rational(9, 16));
    expect_spectrum(r.source, over160(81, 45, 22, 12));
    expect_spectrum(r.target, over160(90, 30, 30, 10));
    const auto eps = std::get<EpsilonTriple>(epsilon_decompose(r.source, r.target));
    EXPECT_EQ(eps, (EpsilonTriple{Rational(9, 160), Rational(6, 160), Rational(2, 160)}));
    EXPECT_EQ(compute_m(r.source, eps), Rational(2, 3));
    EXPECT_EQ(compute_M(r.source, eps), Rational(1, 3));
    EXPECT_EQ(analyze(r.source, r.target).verdict, Verdict::Infeasible);
}

TEST(Construct, LargeMBranch) {
    const Rational m0(3, 2), M0(1, 2);
    const auto r = construct_states(m0, M0);
    EXPECT_EQ(r.branch, ConstructionBranch::LargeM);
    EXPECT_EQ(r.a, Rational(4, 9));
    expect_spectrum(r.target, {Rational(4, 9), Rational(2, 9), Rational(2, 9), Rational(1, 9)});
    const auto eps = std::get<EpsilonTriple>(epsilon_decompose(r.source, r.target));
    EXPECT_EQ(eps.eps1, r.mu * r.a);
    EXPECT_EQ(eps.eps2, m0 * r.mu * r.a);
    EXPECT_EQ(eps.eps3, M0 * m0 * r.mu * r.a);
    EXPECT_EQ(compute_m(r.source, eps), m0);
    EXPECT_EQ(compute_M(r.source, eps), M0);
}

TEST(Construct, DomainErrors) {
    EXPECT_THROW(construct_states(Rational(1), Rational(1)), std::invalid_argument);
    EXPECT_THROW(construct_states(Rational(0), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(construct_states(Rational(-1), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(construct_states(Rational(1), Rational(0)), std::invalid_argument);
    EXPECT_THROW(choose_mu(Rational(1), Rational(3, 2)), std::invalid_argument);
}

TEST(ConstructProperty, RoundTripAndFeasibility) {
    gen::Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        const Rational m0 = gen::random_open(rng, Rational(0), Rational(10), 40);
        const Rational M0 = gen::random_open(rng, Rational(0), Rational(1), 40);
        const auto r = construct_states(m0, M0);
        ASSERT_GT(r.mu, Rational(0));
        const auto eps = std::get<EpsilonTriple>(epsilon_decompose(r.source, r.target));
        ASSERT_EQ(eps.eps1, r.mu * r.a);
        ASSERT_EQ(eps.eps2, m0 * r.mu * r.a);
        ASSERT_EQ(eps.eps3, M0 * m0 * r.mu * r.a);
        ASSERT_EQ(compute_m(r.source, eps), m0);
        ASSERT_EQ(compute_M(r.source, eps), M0);
        const auto verdict = analyze(r.source, r.target).verdict;
        ASSERT_EQ(verdict == Verdict::Catalyzable, m0 <= M0) << m0 << " " << M0;
    }
}
