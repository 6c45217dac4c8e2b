#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "galr/error.hpp"
#include "galr/groups.hpp"

using namespace galr;

namespace {

// Z/m x| Z/2 as permutations of Z/m x Z/2: (a, b) sends (x, e) to (d^b x + a, e + b).
std::map<long, long> permutation_orders(long m, long d)
{
    const long size = 2 * m;
    std::map<long, long> out;
    for (long b = 0; b < 2; ++b) {
        const long u = b == 0 ? 1 : d;
        for (long a = 0; a < m; ++a) {
            std::vector<long> perm(static_cast<std::size_t>(size));
            for (long x = 0; x < m; ++x)
                for (long e = 0; e < 2; ++e) perm[x * 2 + e] = (((u * x + a) % m + m) % m) * 2 + (e + b) % 2;
            std::vector<long> acc = perm;
            long k = 1;
            auto is_identity = [&] {
                for (long i = 0; i < size; ++i)
                    if (acc[i] != i) return false;
                return true;
            };
            while (!is_identity()) {
                for (auto& v : acc) v = perm[v];
                ++k;
            }
            ++out[k];
        }
    }
    return out;
}

using Mat = std::array<std::complex<double>, 4>;

Mat mul(const Mat& x, const Mat& y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

bool near(const Mat& x, const Mat& y)
{
    for (int i = 0; i < 4; ++i)
        if (std::abs(x[i] - y[i]) > 1e-9) return false;
    return true;
}

// Generalized quaternion group of order 2^n as the closure of diag(w, 1/w) and [[0,-1],[1,0]].
std::map<long, long> quaternion_matrix_orders(long n)
{
    const double theta = 2 * std::numbers::pi / static_cast<double>(1L << (n - 1));
    const std::complex<double> w = std::polar(1.0, theta);
    const Mat id{1, 0, 0, 1};
    const std::vector<Mat> gens{Mat{w, 0, 0, 1.0 / w}, Mat{0, -1, 1, 0}};
    std::vector<Mat> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            const Mat h = mul(elems[i], g);
            bool seen = false;
            for (const auto& e : elems) seen = seen || near(e, h);
            if (!seen) elems.push_back(h);
        }
    }
    std::map<long, long> out;
    for (const auto& e : elems) {
        Mat acc = e;
        long k = 1;
        while (!near(acc, id)) {
            acc = mul(acc, e);
            ++k;
        }
        ++out[k];
    }
    return out;
}

}  // namespace

TEST(Groups, SemidirectOrdersMatchPermutationModel)
{
    for (long m : {3L, 4L, 5L, 8L, 12L, 15L, 16L}) {
        for (long d = 1; d < m; ++d) {
            if ((d * d) % m != 1) continue;
            const OrderDistribution orders = element_orders(GroupSpec::semidirect(m, d));
            EXPECT_EQ(orders.counts, permutation_orders(m, d)) << "m=" << m << " d=" << d;
            EXPECT_EQ(orders.group_order, 2 * m);
        }
    }
}

TEST(Groups, QuaternionOrdersMatchMatrixModel)
{
    for (long n : {3L, 4L, 5L, 6L}) {
        const OrderDistribution orders = element_orders(GroupSpec::quaternion(n));
        EXPECT_EQ(orders.counts, quaternion_matrix_orders(n)) << "n=" << n;
        EXPECT_EQ(orders.counts.at(2), 1);
        EXPECT_EQ(orders.exponent(), 1L << (n - 1));
        EXPECT_FALSE(orders.counts.contains(1L << n));
    }
}

TEST(Groups, PatternDistributions)
{
    using D = std::map<long, Rational>;
    EXPECT_EQ(expected_pattern_distribution(GroupSpec::quaternion(3)),
              (D{{1, Rational(1, 8)}, {2, Rational(1, 8)}, {4, Rational(3, 4)}}));
    EXPECT_EQ(expected_pattern_distribution(GroupSpec::dihedral(4)),
              (D{{1, Rational(1, 8)}, {2, Rational(5, 8)}, {4, Rational(1, 4)}}));
    EXPECT_EQ(expected_pattern_distribution(GroupSpec::dihedral(3)),
              (D{{1, Rational(1, 6)}, {2, Rational(1, 2)}, {3, Rational(1, 3)}}));
    EXPECT_EQ(pattern_distribution(abelian_orders({4, 2})),
              (D{{1, Rational(1, 8)}, {2, Rational(3, 8)}, {4, Rational(1, 2)}}));
    EXPECT_EQ(abelian_orders({8}).counts, (std::map<long, long>{{1, 1}, {2, 1}, {4, 2}, {8, 4}}));
}

TEST(Groups, ConjugacyClasses)
{
    EXPECT_EQ(conjugacy_class_sizes(GroupSpec::quaternion(3)), (std::vector<long>{1, 1, 2, 2, 2}));
    EXPECT_EQ(conjugacy_class_sizes(GroupSpec::dihedral(4)), (std::vector<long>{1, 1, 2, 2, 2}));
    EXPECT_EQ(conjugacy_class_sizes(GroupSpec::dihedral(3)), (std::vector<long>{1, 2, 3}));
    EXPECT_EQ(conjugacy_class_sizes(GroupSpec::quaternion(4)), (std::vector<long>{1, 1, 2, 2, 2, 4, 4}));
}

TEST(Groups, MultiplicationIsAssociative)
{
    for (const GroupSpec& spec : {GroupSpec::quaternion(4), GroupSpec::quasi_dihedral(4), GroupSpec::modular(4)}) {
        const long m = spec.cyclic_order();
        for (long a = 0; a < m; ++a)
            for (int b = 0; b < 2; ++b)
                for (long c = 0; c < m; c += 3)
                    for (int e = 0; e < 2; ++e)
                        for (long f = 0; f < m; f += 5)
                            for (int g = 0; g < 2; ++g) {
                                const GroupElement x{a, b}, y{c, e}, z{f, g};
                                EXPECT_EQ(multiply(spec, multiply(spec, x, y), z), multiply(spec, x, multiply(spec, y, z)));
                            }
    }
}

TEST(Groups, FamilyParametersAndIndexSets)
{
    EXPECT_EQ(GroupSpec::quasi_dihedral(4).action(), 3);
    EXPECT_EQ(GroupSpec::modular(4).action(), 5);
    EXPECT_EQ(GroupSpec::dihedral(5).action(), GroupSpec::semidirect(5, -1).action());
    EXPECT_EQ(element_orders(GroupSpec::dihedral(5)), element_orders(GroupSpec::semidirect(5, 4)));
    EXPECT_EQ(conjugate_index_set(GroupSpec::semidirect(4, 3)).size(), 8u);
    EXPECT_EQ(conjugate_index_set(GroupSpec::quaternion(3)).size(), 8u);
    EXPECT_EQ(conjugate_index_set(GroupSpec::quaternion(4)).size(), 16u);
    EXPECT_EQ(conjugate_index_set(GroupSpec::dihedral(3)).size(), 6u);
    EXPECT_EQ(parse_family("quasidihedral"), Family::QuasiDihedral);
}

TEST(Groups, ValidationErrors)
{
    EXPECT_THROW(GroupSpec::semidirect(8, 2), Error);
    EXPECT_THROW(GroupSpec::semidirect(8, 6), Error);
    EXPECT_THROW(GroupSpec::semidirect(2, 1), Error);
    EXPECT_THROW(GroupSpec::quaternion(2), Error);
    EXPECT_THROW(parse_family("cyclic"), Error);
    EXPECT_THROW(GroupSpec::from_fields(Family::Quaternion, 6L, std::nullopt, std::nullopt), Error);
    EXPECT_THROW(GroupSpec::from_fields(Family::Quaternion, 8L, std::nullopt, 3L), Error);
    EXPECT_EQ(GroupSpec::from_fields(Family::Quaternion, 8L, std::nullopt, std::nullopt), GroupSpec::quaternion(4));
    EXPECT_EQ(GroupSpec::from_fields(Family::SemidirectC2, 4L, -1L, std::nullopt), GroupSpec::semidirect(4, 3));
}
