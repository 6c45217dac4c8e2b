#include <gtest/gtest.h>

#include <random>

#include "galr/arith.hpp"
#include "galr/error.hpp"
#include "galr/rat_poly.hpp"
#include "oracles.hpp"

using namespace galr;

TEST(Valuation, ZeroIsInfinite)
{
    EXPECT_TRUE(valuation_p(Rational(0), Integer(5)).is_infinite());
    EXPECT_EQ(valuation_p(Rational(0), Integer(5)).to_string(), "inf");
}

TEST(Valuation, BranchPolynomialAtFixturePoint)
{
    const RatPolynomial m{Rational(5, 8), Rational(1, 2), 1};
    EXPECT_EQ(valuation_p(m.eval(804), Integer(53)), Valuation(1));
    EXPECT_EQ(valuation_p(Rational(804 * 804 + 1), Integer(61)), Valuation(1));
    // 8*m(804) = 5174549 = 53 * 97633
    EXPECT_EQ(Integer(5174549), Integer(53) * 97633);
    EXPECT_NE(Integer(97633) % 53, 0);
}

TEST(Valuation, RationalIsNumeratorMinusDenominator)
{
    EXPECT_EQ(valuation_p(Rational(25, 3), Integer(5)), Valuation(2));
    EXPECT_EQ(valuation_p(Rational(3, 125), Integer(5)), Valuation(-3));
    EXPECT_EQ(valuation_p(Rational(-7, 2), Integer(7)), Valuation(1));
}

TEST(Valuation, RejectsCompositeModulus)
{
    EXPECT_THROW(valuation_p(Rational(12), Integer(6)), Error);
    EXPECT_THROW(valuation_p(Rational(12), Integer(1)), Error);
}

TEST(Valuation, MultiplicativeAndUltrametric)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        const Integer pz(p);
        for (int i = 0; i < 300; ++i) {
            const Rational a = make_rational(dist(rng), std::max(1L, std::abs(dist(rng))));
            const Rational b = make_rational(dist(rng), std::max(1L, std::abs(dist(rng))));
            EXPECT_EQ(valuation_p(Rational(a * b), pz), valuation_p(a, pz) + valuation_p(b, pz));
            const Valuation va = valuation_p(a, pz), vb = valuation_p(b, pz);
            const Valuation vs = valuation_p(Rational(a + b), pz);
            const Valuation lo = std::min(va, vb);
            EXPECT_GE(vs, lo);
            if (va != vb) EXPECT_EQ(vs, lo);
        }
    }
}

TEST(Valuation, AgreesWithRepeatedDivision)
{
    for (long z = 1; z < 3000; ++z) {
        for (long p : {3L, 5L, 13L}) {
            EXPECT_EQ(valuation_p(Integer(z), Integer(p)).value(), oracle::int_valuation(z, p));
        }
    }
}

TEST(Crt, SmallCases)
{
    EXPECT_EQ(crt_pair(0, 1, 0, 1), 0);
    EXPECT_EQ(crt_pair(2, 3, 3, 5), 8);
    EXPECT_THROW(crt_pair(1, 4, 1, 6), Error);
}

TEST(Crt, FixturePointFromPrimeSquares)
{
    const Integer m1 = 53 * 53, m2 = 61 * 61;
    const Integer x = crt_pair(Integer(804) % m1, m1, Integer(804) % m2, m2);
    EXPECT_EQ(x, 804);
}

TEST(Crt, MatchesResidueScan)
{
    for (long m1 : {4L, 9L, 25L}) {
        for (long m2 : {7L, 11L, 13L}) {
            for (long r1 = 0; r1 < m1; r1 += 2) {
                for (long r2 = 0; r2 < m2; r2 += 3) {
                    long expected = -1;
                    for (long x = 0; x < m1 * m2; ++x)
                        if (x % m1 == r1 && x % m2 == r2) {
                            expected = x;
                            break;
                        }
                    EXPECT_EQ(crt_pair(r1, m1, r2, m2), expected);
                }
            }
        }
    }
}

TEST(Primality, MatchesTrialDivision)
{
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime_u64(n), trial(n)) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
    EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
    EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
    EXPECT_EQ(next_prime(53), 59u);
}

TEST(Reconstruction, ExamplesAndExactRationals)
{
    EXPECT_EQ(rational_reconstruct(Real(Rational(5, 8), 64), 16, Real(Rational(1, 10000000000), 64)), Rational(5, 8));
    Real almost(64);
    mpfr_set_str(almost.raw(), "0.4999999999999", 10, MPFR_RNDN);
    EXPECT_EQ(rational_reconstruct(almost, 10, Real(Rational(1, 1000000), 64)), Rational(1, 2));
    EXPECT_THROW(rational_reconstruct(Real(Rational(1, 3), 64), 2, Real(Rational(1, 1000), 64)), Error);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        const Rational q = make_rational(num(rng), den(rng));
        const Real x(q, 64);
        EXPECT_EQ(rational_reconstruct(x, 1000, Real::pow2(-30, 64)), q);
    }
}
