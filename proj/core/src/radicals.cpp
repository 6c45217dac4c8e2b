#include "galr/radicals.hpp"

#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"

namespace galr {

RadicalContext::RadicalContext(long m, const Rational& t, mpfr_prec_t precision)
    : m_(m), t_(t), precision_(precision), sqrt_t2p1_(precision + guard_bits)
{
    require(m >= 3, "radical context needs m >= 3");
    require(precision >= 64, "precision must be at least 64 bits");
    const mpfr_prec_t bits = working_precision();

    sqrt_t2p1_ = sqrt(Real(t * t + 1, bits));
    xi_.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) xi_.push_back(Complex::root_of_unity(k, m, bits));

    const std::vector<long> units = units_mod(m);
    for (int ell = 1; ell <= 2; ++ell) {
        auto& xs = x_[ell - 1];
        auto& ys = y_[ell - 1];
        auto& zs = z_[ell - 1];
        xs.assign(static_cast<std::size_t>(m), Complex(bits));
        ys.assign(static_cast<std::size_t>(m), Complex(bits));
        zs.assign(static_cast<std::size_t>(m), Complex(bits));

        for (long k : units) xs[slot(k)] = principal_root(radicand(ell, k), static_cast<unsigned long>(m));
        for (long j : units) {
            Complex acc(Real(1L, bits));
            for (long k : units) {
                const long r = mod_floor(j * inverse_mod(k, m), m);
                if (r != 0) acc *= pow(xs[slot(k)], static_cast<unsigned long>(r));
            }
            ys[slot(j)] = acc;
        }
        for (long l = 0; l < m; ++l) {
            Complex acc(bits);
            for (long j : units) acc += xi_power(l * j) * ys[slot(j)];
            zs[slot(l)] = acc;
        }
    }
}

long RadicalContext::slot(long k) const { return mod_floor(k, m_); }

const Complex& RadicalContext::xi_power(long k) const { return xi_[static_cast<std::size_t>(slot(k))]; }

Complex RadicalContext::radicand(int ell, long k) const
{
    require(ell == 1 || ell == 2, "ell must be 1 or 2");
    const mpfr_prec_t bits = working_precision();
    Real re = Real(t_ + 1, bits);
    if (ell == 1)
        re -= sqrt_t2p1_;
    else
        re += sqrt_t2p1_;
    return Complex(re) - xi_power(k);
}

const Complex& RadicalContext::x(int ell, long k) const
{
    require(ell == 1 || ell == 2, "ell must be 1 or 2");
    return x_[ell - 1][static_cast<std::size_t>(slot(k))];
}

const Complex& RadicalContext::y(int ell, long j) const
{
    require(ell == 1 || ell == 2, "ell must be 1 or 2");
    return y_[ell - 1][static_cast<std::size_t>(slot(j))];
}

const Complex& RadicalContext::z(int ell, long l) const
{
    require(ell == 1 || ell == 2, "ell must be 1 or 2");
    return z_[ell - 1][static_cast<std::size_t>(slot(l))];
}

std::vector<Complex> RadicalContext::z_values(int ell) const
{
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (long l = 1; l <= m_; ++l) out.push_back(z(ell, l));
    return out;
}

Complex RadicalContext::v(long d, long delta) const
{
    Complex acc(working_precision());
    for (long l = 1; l <= m_; ++l) acc += z(2, l) * z(1, -d * l + delta);
    return acc;
}

RadicalContext build_context(long m, const Rational& t, mpfr_prec_t precision)
{
    return RadicalContext(m, t, precision);
}

std::array<Complex, 4> mu_values(const RadicalContext& ctx)
{
    if (ctx.t() == 0) fail(ErrorKind::BranchPoint, "t = 0 is a branch point of the quaternion family");
    const mpfr_prec_t bits = ctx.working_precision();
    const Real& root = ctx.sqrt_t2p1();
    const Real t(ctx.t(), bits);
    // t^2 + 1 + t*sqrt(t^2+1) > 0 since sqrt(t^2+1) > |t|.
    const Real mu = sqrt(Real(ctx.t() * ctx.t() + 1, bits) + t * root);
    const Real mu_conj = root / mu;
    return {Complex(mu), Complex(-mu), Complex(mu_conj), Complex(-mu_conj)};
}

}  // namespace galr
