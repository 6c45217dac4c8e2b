#include <gtest/gtest.h>

#include <random>

#include "galr/error.hpp"
#include "galr/rat_poly.hpp"
#include "oracles.hpp"

using namespace galr;

namespace {

RatPolynomial random_poly(std::mt19937_64& rng, long degree)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> c;
    for (long i = 0; i <= degree; ++i) c.push_back(make_rational(num(rng), den(rng)));
    if (c.back() == 0) c.back() = 1;
    return RatPolynomial(std::move(c));
}

}  // namespace

TEST(RatPolynomial, NormalizesAndPrints)
{
    EXPECT_EQ(RatPolynomial({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(RatPolynomial({0, 0}).degree(), -1);
    EXPECT_EQ(RatPolynomial({Rational(5, 8), Rational(1, 2), 1}).to_string(), "X^2 + 1/2*X + 5/8");
    EXPECT_TRUE(RatPolynomial({3, 1}).is_monic());
}

TEST(RatPolynomial, DivisionIdentity)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const RatPolynomial a = random_poly(rng, 2 + i % 6);
        const RatPolynomial b = random_poly(rng, 1 + i % 4);
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(divmod(RatPolynomial({1, 1}), RatPolynomial()), Error);
}

TEST(RatPolynomial, GcdAndBezout)
{
    const RatPolynomial x2m1{-1, 0, 1};
    const RatPolynomial xm1{-1, 1};
    const RatPolynomial x3m1{-1, 0, 0, 1};
    EXPECT_EQ(gcd(x2m1, x3m1), xm1);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const RatPolynomial a = random_poly(rng, 4), b = random_poly(rng, 3);
        const ExtendedGcd eg = extended_gcd(a, b);
        EXPECT_EQ(eg.s * a + eg.t * b, eg.g);
        EXPECT_TRUE(eg.g.is_monic());
    }
}

TEST(RatPolynomial, ResultantMatchesSylvesterDeterminant)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        const RatPolynomial a = random_poly(rng, 1 + i % 5);
        const RatPolynomial b = random_poly(rng, 1 + (i / 5) % 4);
        EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a, b)) << a.to_string() << " | " << b.to_string();
    }
}

TEST(RatPolynomial, DiscriminantExamples)
{
    EXPECT_EQ(discriminant(RatPolynomial{1, 0, 1}), -4);
    EXPECT_EQ(discriminant(RatPolynomial{0, -1, 1}), 1);
    EXPECT_EQ(discriminant(RatPolynomial{0, -1, 0, 1}), 4);
    // Depressed cubic X^3 + pX + q has discriminant -4p^3 - 27q^2.
    for (long p = -4; p <= 4; ++p) {
        for (long q = -4; q <= 4; ++q) {
            EXPECT_EQ(discriminant(RatPolynomial{q, p, 0, 1}), Rational(-4 * p * p * p - 27 * q * q));
        }
    }
    // Quadratic aX^2 + bX + c: b^2 - 4ac.
    EXPECT_EQ(discriminant(RatPolynomial{Rational(5, 8), Rational(1, 2), 1}), Rational(1, 4) - Rational(5, 2));
}

TEST(RatPolynomial, SquarefreeAndDenominators)
{
    EXPECT_TRUE(is_squarefree(RatPolynomial{1, 0, 1}));
    EXPECT_FALSE(is_squarefree(RatPolynomial{1, 2, 1}));
    const RatPolynomial f{Rational(5, 8), Rational(1, 2), 1};
    EXPECT_EQ(denominator_lcm(f), 8);
    EXPECT_EQ(clear_denominators(f), (std::vector<Integer>{5, 4, 8}));
}

TEST(RatPolynomial, ComplexEvaluationMatchesExact)
{
    const RatPolynomial f{Rational(5, 8), Rational(1, 2), 1};
    const Complex x(Real(Rational(3, 7), 128));
    const Complex fx = f.eval(x);
    EXPECT_LT(abs(fx.re() - Real(f.eval(Rational(3, 7)), 128)), Real::pow2(-120, 128));
    EXPECT_TRUE(fx.im().is_zero());
}
