#pragma once

#include <array>
#include <vector>

#include "galr/bigfloat.hpp"
#include "galr/rational.hpp"

namespace galr {

/// Radical values at a rational point t for conductor m, evaluated with principal
/// branches. Everything is computed once at construction, at the requested precision
/// plus internal guard bits.
class RadicalContext {
public:
    static constexpr mpfr_prec_t guard_bits = 64;

    /// Throws InvalidArgument for m < 3 or precision < 64.
    RadicalContext(long m, const Rational& t, mpfr_prec_t precision);

    long m() const { return m_; }
    const Rational& t() const { return t_; }
    /// Requested precision (the working precision is larger by guard_bits).
    mpfr_prec_t precision() const { return precision_; }
    mpfr_prec_t working_precision() const { return precision_ + guard_bits; }

    /// xi^k with xi = exp(2*pi*i/m), any integer k.
    const Complex& xi_power(long k) const;
    /// Positive real square root of t^2 + 1.
    const Real& sqrt_t2p1() const { return sqrt_t2p1_; }
    /// t + 1 + (-1)^ell sqrt(t^2+1) - xi^k.
    Complex radicand(int ell, long k) const;
    /// Principal m-th root of radicand(ell, k); k must be a unit mod m.
    const Complex& x(int ell, long k) const;
    /// y_{ell,j} = prod_k x_{ell,k}^(r_m(j/k)), j a unit.
    const Complex& y(int ell, long j) const;
    /// z_{ell,l} = sum_j xi^(l j) y_{ell,j}, periodic in l with period m.
    const Complex& z(int ell, long l) const;
    /// The m values z_{ell,1}, ..., z_{ell,m}.
    std::vector<Complex> z_values(int ell) const;
    /// v_delta(d) = sum_{l=1}^m z_{2,l} z_{1,-d l + delta}.
    Complex v(long d, long delta) const;

private:
    long slot(long k) const;

    long m_;
    Rational t_;
    mpfr_prec_t precision_;
    Real sqrt_t2p1_;
    std::vector<Complex> xi_;
    std::array<std::vector<Complex>, 2> x_;
    std::array<std::vector<Complex>, 2> y_;
    std::array<std::vector<Complex>, 2> z_;
};

RadicalContext build_context(long m, const Rational& t, mpfr_prec_t precision);

/// mu = sqrt(t^2 + 1 + t sqrt(t^2+1)) and mu' = sqrt(t^2+1) / mu, returned as
/// (mu, -mu, mu', -mu'). The first pair goes with +sqrt(t^2+1), the second with the
/// negated root. Throws BranchPoint for t = 0.
std::array<Complex, 4> mu_values(const RadicalContext& ctx);

}  // namespace galr
