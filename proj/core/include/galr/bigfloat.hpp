#pragma once

#include <mpfr.h>

#include <string>

#include "galr/rational.hpp"

namespace galr {

/// RAII wrapper over an MPFR value with an explicit binary precision.
/// Binary operations produce a result at the larger of the operand precisions.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 64);
    Real(long value, mpfr_prec_t bits);
    Real(const Rational& value, mpfr_prec_t bits);
    Real(const Integer& value, mpfr_prec_t bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real pi(mpfr_prec_t bits);
    /// 2^e at the given precision.
    static Real pow2(long e, mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exponent e with 2^(e-1) <= |x| < 2^e; a very negative value for zero.
    long exponent() const;
    Integer floor() const;
    std::string to_string(int digits = 20) const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real with_precision(const Real& x, mpfr_prec_t bits);

/// Complex number as a pair of Reals sharing one precision.
class Complex {
public:
    explicit Complex(mpfr_prec_t bits = 64) : re_(bits), im_(bits) {}
    Complex(Real re, Real im);
    explicit Complex(const Real& re);

    /// exp(2*pi*i*num/den)
    static Complex root_of_unity(long num, long den, mpfr_prec_t bits);
    /// r * exp(i*theta)
    static Complex polar(const Real& r, const Real& theta);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    Complex operator-() const { return {-re_, -im_}; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    Complex conj() const { return {re_, -im_}; }

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Real norm_sq(const Complex& z);
/// Argument in [0, 2*pi).
Real arg_nonneg(const Complex& z);
Complex pow(const Complex& z, unsigned long e);
/// m-th root whose argument lies in [0, 2*pi/m).
Complex principal_root(const Complex& z, unsigned long m);

}  // namespace galr
