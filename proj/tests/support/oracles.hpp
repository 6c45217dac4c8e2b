#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "galr/rat_poly.hpp"
#include "galr/rational.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint64_t>;

inline void trim(Coeffs& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f by monic g over F_p.
inline Coeffs remainder_mod(Coeffs f, const Coeffs& g, std::uint64_t p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg && !f.empty()) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
        trim(f);
    }
    return f;
}

inline Coeffs quotient_mod(Coeffs f, const Coeffs& g, std::uint64_t p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    if (f.size() <= dg) return {};
    Coeffs q(f.size() - dg, 0);
    while (f.size() > dg && !f.empty()) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        q[shift] = lead;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
        trim(f);
    }
    return q;
}

/// All monic polynomials of the given degree over F_p.
inline std::vector<Coeffs> monic_polys(std::uint64_t p, std::size_t degree)
{
    std::vector<Coeffs> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < degree; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Coeffs c(degree + 1, 0);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < degree; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        c[degree] = 1;
        out.push_back(c);
    }
    return out;
}

/// Degrees of the irreducible factors of a monic f over F_p (with multiplicity), by trial
/// division with every monic polynomial in increasing degree.
inline std::map<long, long> factor_degrees(Coeffs f, std::uint64_t p)
{
    std::map<long, long> out;
    trim(f);
    std::size_t d = 1;
    while (f.size() > 1) {
        if (2 * d > f.size() - 1) {
            ++out[static_cast<long>(f.size() - 1)];
            break;
        }
        bool divided = false;
        for (const auto& g : monic_polys(p, d)) {
            if (remainder_mod(f, g, p).empty()) {
                ++out[static_cast<long>(d)];
                f = quotient_mod(f, g, p);
                divided = true;
                break;
            }
        }
        if (!divided) ++d;
    }
    return out;
}

/// Squarefree iff no monic g of degree >= 1 has g^2 | f.
inline bool squarefree_by_search(const Coeffs& f, std::uint64_t p)
{
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        for (const auto& g : monic_polys(p, d)) {
            Coeffs g2(2 * d + 1, 0);
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = 0; j <= d; ++j) g2[i + j] = (g2[i + j] + g[i] * g[j]) % p;
            if (remainder_mod(f, g2, p).empty()) return false;
        }
    }
    return true;
}

/// Residues r with (denominator-cleared f)(r) = 0 mod p, by evaluating at every residue.
inline std::set<std::uint64_t> scan_roots(const galr::RatPolynomial& f, std::uint64_t p)
{
    const auto ints = galr::clear_denominators(f);
    std::set<std::uint64_t> out;
    for (std::uint64_t r = 0; r < p; ++r) {
        galr::Integer acc = 0;
        for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * r + *it;
        if (acc % static_cast<unsigned long>(p) == 0) out.insert(r);
    }
    return out;
}

/// Exponent of p in a nonzero integer by repeated division.
inline long int_valuation(galr::Integer z, const galr::Integer& p)
{
    if (z < 0) z = -z;
    long v = 0;
    while (z % p == 0) {
        z /= p;
        ++v;
    }
    return v;
}

/// Determinant of the Sylvester matrix of a and b by Gaussian elimination over Q.
inline galr::Rational sylvester_resultant(const galr::RatPolynomial& a, const galr::RatPolynomial& b)
{
    const long m = a.degree();
    const long n = b.degree();
    const long size = m + n;
    std::vector<std::vector<galr::Rational>> mat(static_cast<std::size_t>(size),
                                                 std::vector<galr::Rational>(static_cast<std::size_t>(size), 0));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) mat[r][r + i] = a.coeff(static_cast<std::size_t>(m - i));
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) mat[n + r][r + i] = b.coeff(static_cast<std::size_t>(n - i));
    galr::Rational det = 1;
    for (long c = 0; c < size; ++c) {
        long pivot = -1;
        for (long r = c; r < size; ++r)
            if (mat[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(mat[pivot], mat[c]);
            det = -det;
        }
        det *= mat[c][c];
        for (long r = c + 1; r < size; ++r) {
            if (mat[r][c] == 0) continue;
            const galr::Rational f = mat[r][c] / mat[c][c];
            for (long k = c; k < size; ++k) mat[r][k] -= f * mat[c][k];
        }
    }
    return det;
}

}  // namespace oracle
