#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "galr/groups.hpp"
#include "galr/rat_poly.hpp"

namespace galr {

enum class Verdict { Consistent, Inconsistent, Inconclusive };
std::string_view to_string(Verdict v);

struct VerificationReport {
    VerificationReport(RatPolynomial poly, GroupSpec spec) : poly(std::move(poly)), spec(spec) {}

    RatPolynomial poly;
    GroupSpec spec;
    long primes_sampled = 0;
    long skipped_ramified = 0;
    std::uint64_t largest_prime = 0;
    /// Frobenius degree e -> number of sampled primes with all factors of degree e.
    std::map<long, long> tallies;
    std::map<long, double> frequencies;
    std::map<long, Rational> expected;
    double max_abs_deviation = 0;
    double tolerance = 0;
    long uniformity_violations = 0;
    long forbidden_pattern_hits = 0;
    /// For an inconsistent degree-8 input: the closest group of order 8 by frequencies.
    std::optional<std::string> best_alternative;
    Verdict verdict = Verdict::Inconclusive;
};

/// Samples the first num_primes odd primes not dividing the discriminant or any
/// coefficient denominator and compares Frobenius degree statistics with the order
/// distribution of spec. The prime sequence is ascending; seed is accepted for
/// interface stability and does not change the result.
/// Fewer than 50 sampled primes can only give inconsistent (on a hard failure) or
/// inconclusive. Throws InvalidArgument when deg poly != |G|, poly is not monic or
/// poly is not squarefree.
VerificationReport verify(const RatPolynomial& poly, const GroupSpec& spec, long num_primes = 300,
                          std::uint64_t seed = 0);

/// Deviation tolerance for a given sample size: 0.10 from 200 primes up, 0.15 below.
double frequency_tolerance(long num_primes);

}  // namespace galr
