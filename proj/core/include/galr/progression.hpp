#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galr/arith.hpp"
#include "galr/rational.hpp"

namespace galr {

/// How a prime cleared the branch-point meeting conditions.
enum class PrimeRoute { MeetingNorms, SizeBound, Rejected };
std::string_view to_string(PrimeRoute r);

struct PrimePairReport {
    bool good = false;
    PrimeRoute route_p = PrimeRoute::Rejected;
    PrimeRoute route_q = PrimeRoute::Rejected;
    std::vector<std::string> reasons;
};

/// 7^(2^(n-2)) + 1.
Integer size_bound(long n);
/// p >= 7^(2^(n-2)) + 1, the stronger prime requirement of the progression statement.
bool satisfies_size_bound(long n, const Integer& p);

/// p, q distinct odd primes, p = 1 mod 2^(n-1), q = 1 mod 4, neither dividing
/// 2^(2^(n-2)) + 1, and each dividing none of the meeting norms (or above the size bound).
PrimePairReport is_good_prime_pair(long n, const Integer& p, const Integer& q);

struct Certificate {
    Integer root_mod_p;
    Valuation v_p_of_m_t0;
    Integer root_mod_q;
    Valuation v_q_of_t0sq_plus_1;
    std::vector<Integer> norms_checked;
    bool used_7power_shortcut = false;
};

struct Progression {
    long n;
    Integer p;
    Integer q;
    Integer t0;
    Integer modulus;
    Certificate certificate;
};

struct CertifyResult {
    bool ok = false;
    Certificate certificate;
    std::vector<std::string> reasons;
};

/// Re-checks every progression condition from scratch with exact arithmetic.
CertifyResult certify(long n, const Integer& p, const Integer& q, const Integer& t0);

/// Root of the branch polynomial mod p and of X^2 + 1 mod q, each adjusted to valuation
/// exactly one, glued by CRT into [0, p^2 q^2). Throws InvalidArgument for a bad pair,
/// DegenerateRoot if no residue class reaches valuation one.
Progression find_t0(long n, const Integer& p, const Integer& q);

/// Smallest good pair in ascending order of p, then q, with both below limit.
std::optional<std::pair<Integer, Integer>> find_good_pair(long n, std::uint64_t limit = 1'000'000);

}  // namespace galr
