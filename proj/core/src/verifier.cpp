#include "galr/verifier.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "galr/arith.hpp"
#include "galr/error.hpp"
#include "galr/mod_poly.hpp"

namespace galr {

std::string_view to_string(Verdict v)
{
    switch (v) {
        case Verdict::Consistent: return "consistent";
        case Verdict::Inconsistent: return "inconsistent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

double frequency_tolerance(long num_primes) { return num_primes >= 200 ? 0.10 : 0.15; }

namespace {

constexpr long min_primes = 50;

double max_deviation(const std::map<long, double>& observed, const std::map<long, Rational>& expected)
{
    std::set<long> keys;
    for (const auto& [e, f] : observed) keys.insert(e);
    for (const auto& [e, f] : expected) keys.insert(e);
    double worst = 0;
    for (long e : keys) {
        const auto o = observed.find(e);
        const auto x = expected.find(e);
        const double of = o == observed.end() ? 0.0 : o->second;
        const double xf = x == expected.end() ? 0.0 : x->second.get_d();
        worst = std::max(worst, std::abs(of - xf));
    }
    return worst;
}

std::string closest_order_eight(const std::map<long, double>& observed)
{
    const std::vector<std::pair<std::string, OrderDistribution>> candidates = {
        {"Q8", element_orders(GroupSpec::quaternion(3))},
        {"D8", element_orders(GroupSpec::dihedral(4))},
        {"Z/8", abelian_orders({8})},
        {"Z/4 x Z/2", abelian_orders({4, 2})},
        {"(Z/2)^3", abelian_orders({2, 2, 2})},
    };
    std::string best;
    double best_dev = 2.0;
    for (const auto& [name, orders] : candidates) {
        const double dev = max_deviation(observed, pattern_distribution(orders));
        if (dev < best_dev) {
            best_dev = dev;
            best = name;
        }
    }
    return best;
}

}  // namespace

VerificationReport verify(const RatPolynomial& poly, const GroupSpec& spec, long num_primes, std::uint64_t seed)
{
    (void)seed;
    require(poly.is_monic(), "verification needs a monic polynomial");
    require(poly.degree() == spec.order(), "polynomial degree " + std::to_string(poly.degree()) +
                                               " does not match the group order " + std::to_string(spec.order()));
    require(num_primes >= 1, "num_primes must be positive");
    const Rational disc = discriminant(poly);
    require(disc != 0, "polynomial is not squarefree");
    const Integer den = denominator_lcm(poly);

    VerificationReport report(poly, spec);
    report.expected = expected_pattern_distribution(spec);
    report.tolerance = frequency_tolerance(num_primes);

    long uniform = 0;
    for (std::uint64_t p = 3; report.primes_sampled < num_primes; p = next_prime(p)) {
        const bool ramified_suspect = mpz_divisible_ui_p(disc.get_num_mpz_t(), p) != 0 ||
                                      mpz_divisible_ui_p(disc.get_den_mpz_t(), p) != 0 ||
                                      mpz_divisible_ui_p(den.get_mpz_t(), p) != 0;
        if (ramified_suspect) {
            ++report.skipped_ramified;
            continue;
        }
        const auto pattern = ddf_degree_pattern(ModPolynomial::reduce(poly, p));
        if (!pattern) {
            ++report.skipped_ramified;
            continue;
        }
        ++report.primes_sampled;
        report.largest_prime = p;
        for (const auto& [e, count] : *pattern) {
            if (!report.expected.contains(e)) ++report.forbidden_pattern_hits;
        }
        if (pattern->size() != 1) {
            ++report.uniformity_violations;
            continue;
        }
        ++uniform;
        ++report.tallies[pattern->begin()->first];
    }

    for (const auto& [e, count] : report.tallies)
        report.frequencies[e] = static_cast<double>(count) / static_cast<double>(uniform);
    report.max_abs_deviation = max_deviation(report.frequencies, report.expected);

    const bool hard_failure = report.uniformity_violations > 0 || report.forbidden_pattern_hits > 0;
    if (hard_failure)
        report.verdict = Verdict::Inconsistent;
    else if (report.primes_sampled < min_primes)
        report.verdict = Verdict::Inconclusive;
    else if (report.max_abs_deviation > report.tolerance)
        report.verdict = Verdict::Inconsistent;
    else
        report.verdict = Verdict::Consistent;

    if (report.verdict == Verdict::Inconsistent && poly.degree() == 8 && uniform > 0)
        report.best_alternative = closest_order_eight(report.frequencies);
    return report;
}

}  // namespace galr
