#include "galr/arith.hpp"

#include <array>

#include "galr/error.hpp"

namespace galr {

long Valuation::value() const
{
    if (infinite_) fail(ErrorKind::Internal, "finite value requested from infinite valuation");
    return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    require(a != 0, "zero has no inverse modulo p");
    return powmod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set for all n < 3.1e23.
    for (auto a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t next_prime(std::uint64_t n)
{
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

Valuation valuation_p(const Integer& z, const Integer& p)
{
    require(is_prime(p), "valuation base " + p.get_str() + " is not prime");
    if (z == 0) return Valuation::infinity();
    Integer rest;
    const auto v = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return Valuation(static_cast<long>(v));
}

Valuation valuation_p(const Rational& r, const Integer& p)
{
    require(is_prime(p), "valuation base " + p.get_str() + " is not prime");
    if (r == 0) return Valuation::infinity();
    return Valuation(valuation_p(r.get_num(), p).value() - valuation_p(r.get_den(), p).value());
}

Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2)
{
    require(m1 > 0 && m2 > 0, "CRT moduli must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    require(g == 1, "CRT moduli " + m1.get_str() + " and " + m2.get_str() + " are not coprime");
    const Integer modulus = m1 * m2;
    Integer inv;
    if (m2 == 1) {
        inv = 0;
    } else {
        mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    }
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    Integer k = (r2 - r1) * inv;
    mpz_mod(k.get_mpz_t(), k.get_mpz_t(), m2.get_mpz_t());
    Integer x = r1 + m1 * k;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return x;
}

Rational rational_reconstruct(const Real& x, const Integer& denominator_bound, const Real& tolerance)
{
    require(tolerance.sign() > 0, "reconstruction tolerance must be positive");
    require(denominator_bound >= 1, "denominator bound must be >= 1");
    const auto bits = x.precision();

    auto close_enough = [&](const Integer& p, const Integer& q) {
        Real approx = Real(p, bits + 64) / Real(q, bits + 64);
        return abs(x - approx) < tolerance;
    };

    // Convergents h_k / k_k with the usual recurrences.
    Integer h_prev = 1, k_prev = 0;
    Integer a = x.floor();
    Integer h = a, k = 1;
    Real frac = x - Real(a, bits);
    while (true) {
        if (k > denominator_bound) break;
        if (close_enough(h, k)) return make_rational(h, k);
        if (frac.is_zero()) break;
        Real y = Real(1L, bits) / frac;
        a = y.floor();
        frac = y - Real(a, bits);
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = std::move(h);
        k_prev = std::move(k);
        h = std::move(h_next);
        k = std::move(k_next);
    }
    fail(ErrorKind::ReconstructionFailed,
         "no convergent of " + x.to_string(30) + " within tolerance " + tolerance.to_string(6) +
             " with denominator <= " + denominator_bound.get_str());
}

}  // namespace galr
