#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "galr/bigfloat.hpp"
#include "galr/rational.hpp"

namespace galr {

/// Univariate polynomial over Q, coefficients in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);
    RatPolynomial(std::initializer_list<Rational> coeffs);

    static RatPolynomial constant(const Rational& c);
    /// X^k
    static RatPolynomial monomial(std::size_t k, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of X^i; zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    bool is_monic() const;

    Rational eval(const Rational& x) const;
    Complex eval(const Complex& x) const;

    RatPolynomial derivative() const;
    RatPolynomial monic() const;

    RatPolynomial operator-() const;
    RatPolynomial& operator+=(const RatPolynomial& o);
    RatPolynomial& operator-=(const RatPolynomial& o);
    RatPolynomial& operator*=(const RatPolynomial& o);
    RatPolynomial& operator*=(const Rational& c);

    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
    friend RatPolynomial operator*(RatPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, e.g. "X^2 + 1/2*X + 5/8".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
    RatPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Resultant Res(a, b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha).
Rational resultant(const RatPolynomial& a, const RatPolynomial& b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); f must be nonconstant.
Rational discriminant(const RatPolynomial& f);

bool is_squarefree(const RatPolynomial& f);

/// Least common multiple of all coefficient denominators.
Integer denominator_lcm(const RatPolynomial& f);
/// The integer polynomial denominator_lcm(f) * f.
std::vector<Integer> clear_denominators(const RatPolynomial& f);

}  // namespace galr
