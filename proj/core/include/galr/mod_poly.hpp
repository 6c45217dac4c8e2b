#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "galr/rat_poly.hpp"

namespace galr {

/// Polynomial over F_p for a word-size prime p, ascending coefficients in [0, p).
class ModPolynomial {
public:
    ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    explicit ModPolynomial(std::uint64_t p) : p_(p) {}

    /// Reduction of f mod p. Throws InvalidArgument if p divides a coefficient denominator.
    static ModPolynomial reduce(const RatPolynomial& f, std::uint64_t p);
    static ModPolynomial monomial(std::uint64_t p, std::size_t k, std::uint64_t c = 1);

    std::uint64_t prime() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t leading() const { return coeffs_.back(); }

    std::uint64_t eval(std::uint64_t x) const;
    ModPolynomial derivative() const;
    ModPolynomial monic() const;

    ModPolynomial& operator+=(const ModPolynomial& o);
    ModPolynomial& operator-=(const ModPolynomial& o);
    friend ModPolynomial operator+(ModPolynomial a, const ModPolynomial& b) { return a += b; }
    friend ModPolynomial operator-(ModPolynomial a, const ModPolynomial& b) { return a -= b; }
    friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
    friend bool operator==(const ModPolynomial& a, const ModPolynomial& b)
    {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize();
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b);
/// base^e mod modulus.
ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& modulus);

bool is_squarefree(const ModPolynomial& f);

/// Irreducible-factor degree -> number of factors of that degree.
using DegreePattern = std::map<long, long>;

/// Distinct-degree factorization pattern of a squarefree polynomial.
/// Returns nullopt when f is not squarefree mod p (a ramified-prime signal).
std::optional<DegreePattern> ddf_degree_pattern(const ModPolynomial& f);

/// Residues r in [0, p) with (cleared f)(r) = 0 mod p, for odd prime p.
/// Throws InvalidArgument if p divides a coefficient denominator.
std::set<std::uint64_t> roots_mod_p(const RatPolynomial& f, std::uint64_t p);

}  // namespace galr
