#include "galr/rat_poly.hpp"

#include <sstream>

#include "galr/error.hpp"

namespace galr {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs)
    : RatPolynomial(std::vector<Rational>(coeffs))
{
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(std::size_t k, const Rational& c)
{
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RatPolynomial(std::move(v));
}

void RatPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPolynomial::leading() const
{
    require(!coeffs_.empty(), "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool RatPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational RatPolynomial::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex RatPolynomial::eval(const Complex& x) const
{
    const auto bits = x.precision();
    Complex acc(bits);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += Complex(Real(*it, bits));
    }
    return acc;
}

RatPolynomial RatPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const
{
    if (is_zero()) return {};
    RatPolynomial r(*this);
    r *= Rational(1) / leading();
    return r;
}

RatPolynomial RatPolynomial::operator-() const
{
    RatPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string RatPolynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (i == 0 || !unit) out << mag.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "X";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b)
{
    require(!b.is_zero(), "polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPolynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational inv_lead = Rational(1) / b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] * inv_lead;
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b)
{
    RatPolynomial x = a, y = b;
    while (!y.is_zero()) {
        RatPolynomial r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b)
{
    RatPolynomial r0 = a, r1 = b;
    RatPolynomial s0 = RatPolynomial::constant(1), s1;
    RatPolynomial t0, t1 = RatPolynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPolynomial s2 = s0 - q * s1;
        RatPolynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Rational resultant(const RatPolynomial& a, const RatPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return 0;
    // Res(a, b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} Res(b, r) with r = a mod b.
    RatPolynomial f = a, g = b;
    Rational acc = 1;
    while (true) {
        const long n = f.degree();
        const long m = g.degree();
        if (m == 0) {
            Rational p = 1;
            for (long i = 0; i < n; ++i) p *= g.leading();
            return acc * p;
        }
        if (n == 0) {
            Rational p = 1;
            for (long i = 0; i < m; ++i) p *= f.leading();
            return acc * p;
        }
        RatPolynomial r = f % g;
        if (r.is_zero()) return 0;
        const long k = r.degree();
        if ((n * m) % 2 != 0) acc = -acc;
        for (long i = 0; i < n - k; ++i) acc *= g.leading();
        f = std::move(g);
        g = std::move(r);
    }
}

Rational discriminant(const RatPolynomial& f)
{
    require(f.degree() >= 1, "discriminant of a constant polynomial");
    const long n = f.degree();
    Rational r = resultant(f, f.derivative()) / f.leading();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

bool is_squarefree(const RatPolynomial& f)
{
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

Integer denominator_lcm(const RatPolynomial& f)
{
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::vector<Integer> clear_denominators(const RatPolynomial& f)
{
    const Integer l = denominator_lcm(f);
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Rational scaled = c * Rational(l);
        out.push_back(scaled.get_num());
    }
    return out;
}

}  // namespace galr
