#include "galr/bigfloat.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace galr {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Raise the precision of `x` to `bits` (exactly, since MPFR rounding to a
// wider mantissa is lossless).
void widen(Real& x, mpfr_prec_t bits)
{
    if (x.precision() < bits) mpfr_prec_round(x.raw(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    // Steal the limbs, leave `other` as a valid tiny value.
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t bits)
{
    Real r(1L, bits);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

long Real::exponent() const
{
    if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v_);
}

Integer Real::floor() const
{
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string Real::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o)
{
    widen(*this, o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    widen(*this, o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    widen(*this, o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    widen(*this, o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real abs(const Real& x)
{
    Real r(x);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x)
{
    Real r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x)
{
    Real r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x)
{
    Real r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x)
{
    Real r(x.precision());
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x)
{
    Real r(x.precision());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x)
{
    Real r(max_prec(x, y));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real with_precision(const Real& x, mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im))
{
    const auto bits = max_prec(re_, im_);
    widen(re_, bits);
    widen(im_, bits);
}

Complex::Complex(const Real& re) : re_(re), im_(re.precision()) {}

Complex Complex::root_of_unity(long num, long den, mpfr_prec_t bits)
{
    // Reduce first so that exact special angles come out exactly.
    long k = num % den;
    if (k < 0) k += den;
    if (k == 0) return Complex(Real(1L, bits));
    if (2 * k == den) return Complex(Real(-1L, bits));
    if (4 * k == den) return {Real(bits), Real(1L, bits)};
    if (4 * k == 3 * den) return {Real(bits), Real(-1L, bits)};
    Real theta = Real::pi(bits + 16) * Real(2 * k, bits + 16) / Real(den, bits + 16);
    return {with_precision(cos(theta), bits), with_precision(sin(theta), bits)};
}

Complex Complex::polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex& Complex::operator+=(const Complex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator*=(const Real& o)
{
    re_ *= o;
    im_ *= o;
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    Real d = norm_sq(o);
    Real re = (re_ * o.re_ + im_ * o.im_) / d;
    Real im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Real norm_sq(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z)
{
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

Real arg_nonneg(const Complex& z)
{
    Real a = atan2(z.im(), z.re());
    if (a.sign() < 0) a += Real::pi(a.precision()) * Real(2L, a.precision());
    return a;
}

Complex pow(const Complex& z, unsigned long e)
{
    Complex result(Real(1L, z.precision()));
    Complex base = z;
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

Complex principal_root(const Complex& z, unsigned long m)
{
    const auto bits = z.precision();
    if (z.re().is_zero() && z.im().is_zero()) return Complex(bits);
    Real r = abs(z);
    Real root_mod(bits);
    mpfr_rootn_ui(root_mod.raw(), r.raw(), m, MPFR_RNDN);
    Real theta = arg_nonneg(z) / Real(static_cast<long>(m), bits);
    return Complex::polar(root_mod, theta);
}

}  // namespace galr
