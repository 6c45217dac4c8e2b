#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "galr/bigfloat.hpp"
#include "galr/rational.hpp"

namespace galr {

/// p-adic valuation value: an integer or +infinity (the valuation of zero).
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : value_(v) {}
    static constexpr Valuation infinity()
    {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    /// Precondition: finite.
    long value() const;

    friend Valuation operator+(Valuation a, Valuation b)
    {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Valuation a, Valuation b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b)
    {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    long value_ = 0;
    bool infinite_ = false;
};

/// Deterministic Miller-Rabin below 2^64, GMP's probabilistic test with 40 rounds above.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Exponent of p in |z|, infinite for z = 0.
Valuation valuation_p(const Integer& z, const Integer& p);
/// v_p(num) - v_p(den). Throws InvalidArgument when p is not prime.
Valuation valuation_p(const Rational& r, const Integer& p);

/// Unique x in [0, m1*m2) with x = r1 mod m1 and x = r2 mod m2.
Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);

/// Smallest-denominator continued-fraction convergent p/q of x with q <= denominator_bound
/// and |x - p/q| < tolerance. Throws ReconstructionFailed when no convergent qualifies.
/// When tolerance <= 1/(2*B^2) every rational with denominator <= B within tolerance of x
/// is a convergent, so the result is the unique such rational.
Rational rational_reconstruct(const Real& x, const Integer& denominator_bound, const Real& tolerance);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace galr
