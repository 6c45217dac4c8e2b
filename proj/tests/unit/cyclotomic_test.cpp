#include <gtest/gtest.h>

#include <random>

#include "galr/arith.hpp"
#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"

using namespace galr;

namespace {

CycloElement random_element(std::mt19937_64& rng, long m)
{
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& x : c) x = dist(rng);
    return CycloElement(m, c);
}

/// Product over all primitive complex embeddings.
Complex embedding_product(const CycloElement& e, mpfr_prec_t bits)
{
    Complex acc(Real(1L, bits));
    for (long j : units_mod(e.conductor())) acc *= e.embed(j, bits);
    return acc;
}

bool is_power_of_two(const Integer& z)
{
    return z > 0 && mpz_popcount(z.get_mpz_t()) == 1;
}

}  // namespace

TEST(Cyclotomic, Polynomials)
{
    EXPECT_EQ(cyclotomic_polynomial(4), (RatPolynomial{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8), (RatPolynomial{1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), (RatPolynomial{1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12).degree(), 4);
}

TEST(Cyclotomic, InverseConjugateProduct)
{
    const CycloElement one = CycloElement::rational(4, 1);
    const CycloElement z4 = CycloElement::zeta_power(4, 1);
    EXPECT_EQ(cyclo_inv(one - z4), CycloElement(4, {Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(cyclo_conjugate(z4, 3), -z4);
    EXPECT_EQ(cyclo_mul(CycloElement::zeta_power(8, 1), CycloElement::zeta_power(8, 3)), CycloElement::rational(8, -1));
    EXPECT_THROW(cyclo_inv(CycloElement(4)), Error);
    EXPECT_EQ(CycloElement::imaginary_unit(8) * CycloElement::imaginary_unit(8), CycloElement::rational(8, -1));
}

TEST(Cyclotomic, NormFixturesForTwoPowerConductors)
{
    for (long n : {3L, 4L, 5L}) {
        const long m = 1L << (n - 1);
        const CycloElement one = CycloElement::rational(m, 1), zeta = CycloElement::zeta_power(m, 1);
        EXPECT_EQ(cyclo_norm(one - zeta), 2);
        const Integer expected = (Integer(1) << static_cast<mp_bitcnt_t>(1L << (n - 2))) + 1;
        EXPECT_EQ(cyclo_norm(CycloElement::rational(m, 2) - zeta), Rational(expected));
    }
    EXPECT_EQ(cyclo_norm(CycloElement::rational(4, 3)), 9);
}

TEST(Cyclotomic, NormIsMultiplicative)
{
    std::mt19937_64 rng(23);
    for (long m : {3L, 4L, 8L, 16L}) {
        for (int i = 0; i < 20; ++i) {
            const CycloElement a = random_element(rng, m), b = random_element(rng, m);
            EXPECT_EQ(cyclo_norm(a * b), cyclo_norm(a) * cyclo_norm(b));
        }
    }
}

TEST(Cyclotomic, NormMatchesEmbeddingsAndResultant)
{
    std::mt19937_64 rng(29);
    const mpfr_prec_t bits = 256;
    for (long m : {4L, 8L, 16L}) {
        for (int i = 0; i < 20; ++i) {
            const CycloElement a = random_element(rng, m);
            const Rational exact = cyclo_norm(a);
            const Complex approx = embedding_product(a, bits);
            EXPECT_LT(abs(approx.re() - Real(exact, bits)), Real::pow2(-64, bits));
            EXPECT_LT(abs(approx.im()), Real::pow2(-64, bits));
            EXPECT_EQ(cyclo_norm_by_resultant(a), exact);
        }
    }
}

TEST(Cyclotomic, BranchPolynomialForConductorFour)
{
    const BranchData data = branch_values(4);
    ASSERT_EQ(data.s_values.size(), 2u);
    EXPECT_EQ(data.s_values.at(1), CycloElement(4, {Rational(-1, 4), Rational(3, 4)}));
    EXPECT_EQ(data.s_values.at(3), cyclo_conjugate(data.s_values.at(1), 3));
    EXPECT_NE(data.s_values.at(1), data.s_values.at(3));
    EXPECT_EQ(data.branch_poly, (RatPolynomial{Rational(5, 8), Rational(1, 2), 1}));
}

TEST(Cyclotomic, BranchPolynomialMatchesFloatingExpansion)
{
    // Expand prod (X - s_k) with s_k evaluated directly in complex arithmetic, then
    // round each coefficient to a rational with small denominator.
    const mpfr_prec_t bits = 256;
    for (long m : {3L, 5L, 8L, 12L, 16L}) {
        std::vector<Complex> poly{Complex(Real(1L, bits))};
        for (long k : units_mod(m)) {
            const Complex one(Real(1L, bits));
            const Complex u = one - Complex::root_of_unity(k, m, bits);
            const Complex half(Real(Rational(1, 2), bits));
            const Complex s = -(half * u) + one / (Complex(Real(2L, bits)) * u);
            std::vector<Complex> next(poly.size() + 1, Complex(bits));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * s;
            }
            poly = std::move(next);
        }
        std::vector<Rational> coeffs;
        for (const auto& c : poly) {
            EXPECT_LT(abs(c.im()), Real::pow2(-100, bits));
            coeffs.push_back(rational_reconstruct(c.re(), Integer(1) << 40, Real::pow2(-100, bits)));
        }
        const BranchData data = branch_values(m);
        EXPECT_EQ(data.branch_poly, RatPolynomial(coeffs)) << "m=" << m;
        EXPECT_EQ(data.branch_poly.degree(), euler_phi(m));
    }
}

TEST(Cyclotomic, BranchValuesAreRootsAndAvoidImaginaryUnit)
{
    const mpfr_prec_t bits = 192;
    for (long m : {3L, 4L, 6L, 8L, 16L}) {
        const BranchData data = branch_values(m);
        const CycloElement one = CycloElement::rational(m, 1);
        for (const auto& [k, s] : data.s_values) {
            EXPECT_FALSE((s * s + one).is_zero());
            for (long j : units_mod(m)) {
                EXPECT_LT(abs(data.branch_poly.eval(s.embed(j, bits))), Real::pow2(-64, bits));
            }
        }
    }
}

TEST(Cyclotomic, BranchDenominatorsArePowersOfTwo)
{
    for (long n : {3L, 4L, 5L}) {
        const RatPolynomial f = branch_values(1L << (n - 1)).branch_poly;
        for (const auto& c : f.coeffs()) EXPECT_TRUE(is_power_of_two(c.get_den())) << to_string(c);
    }
}

TEST(Cyclotomic, MeetingNormsForOrderEight)
{
    const MeetingNorms norms = branch_meeting_norms(3);
    EXPECT_EQ(norms.condition_a, (std::set<Integer>{9}));
    for (long v : {25L, 1L, 9L, 17L}) EXPECT_TRUE(norms.condition_b.contains(v)) << v;
    // Direct complex values: (1+i)(1-i)+1 = 3, 3+4i, -1, -3, 1-4i.
    EXPECT_EQ(norms.all(), (std::set<Integer>{1, 9, 17, 25}));
}

TEST(Cyclotomic, MeetingNormsBelowSizeBound)
{
    for (long n : {3L, 4L, 5L, 6L}) {
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 7, 1UL << (n - 2));
        for (const auto& v : branch_meeting_norms(n).all()) EXPECT_LE(v, bound) << "n=" << n;
    }
}

TEST(Cyclotomic, MeetingNormsMatchEmbeddingProducts)
{
    // Recompute every condition-a norm for n = 4 from complex values alone.
    const long m = 8;
    const mpfr_prec_t bits = 192;
    std::set<Integer> expected;
    for (long k : units_mod(m)) {
        if (k == 1) continue;
        Complex acc(Real(1L, bits));
        for (long j : units_mod(m)) {
            const Complex one(Real(1L, bits));
            const Complex v = (one - Complex::root_of_unity(j * k, m, bits)) * (one - Complex::root_of_unity(j, m, bits)) + one;
            acc *= v;
        }
        Real r = abs(acc.re()) + Real(Rational(1, 2), bits);
        expected.insert(r.floor());
    }
    EXPECT_EQ(branch_meeting_norms(4).condition_a, expected);
}
