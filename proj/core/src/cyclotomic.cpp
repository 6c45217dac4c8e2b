#include "galr/cyclotomic.hpp"

#include <mutex>
#include <numeric>

#include "galr/error.hpp"

namespace galr {

long euler_phi(long m)
{
    require(m >= 1, "euler_phi requires m >= 1");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> units_mod(long m)
{
    require(m >= 1, "units_mod requires m >= 1");
    if (m <= 2) return {1};
    std::vector<long> u;
    for (long k = 1; k < m; ++k)
        if (std::gcd(k, m) == 1) u.push_back(k);
    return u;
}

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m)
{
    long g = m, x = 0, r = mod_floor(a, m), y = 1;
    // Extended Euclid on (m, r) tracking the coefficient of r.
    while (r != 0) {
        const long q = g / r;
        long t = g - q * r;
        g = r;
        r = t;
        t = x - q * y;
        x = y;
        y = t;
    }
    require(g == 1, std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    return mod_floor(x, m);
}

RatPolynomial cyclotomic_polynomial(long m)
{
    require(m >= 1, "cyclotomic polynomial index must be >= 1");
    static std::mutex mutex;
    static std::map<long, RatPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // X^m - 1 = prod_{d | m} Phi_d
    RatPolynomial result = RatPolynomial::monomial(static_cast<std::size_t>(m)) - RatPolynomial::constant(1);
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) result = divmod(result, cyclotomic_polynomial(d)).first;
    }
    std::lock_guard lock(mutex);
    cache.emplace(m, result);
    return result;
}

CycloElement::CycloElement(long m) : m_(m), coords_(static_cast<std::size_t>(euler_phi(m)), Rational(0)) {}

CycloElement::CycloElement(long m, std::vector<Rational> coords) : m_(m), coords_(std::move(coords))
{
    require(coords_.size() == static_cast<std::size_t>(euler_phi(m)),
            "cyclotomic element needs phi(m) coordinates");
    for (auto& c : coords_) c.canonicalize();
}

CycloElement CycloElement::from_polynomial(long m, const RatPolynomial& poly)
{
    RatPolynomial r = poly % cyclotomic_polynomial(m);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)), Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
    return CycloElement(m, std::move(c));
}

CycloElement CycloElement::rational(long m, const Rational& c)
{
    CycloElement e(m);
    e.coords_[0] = c;
    return e;
}

CycloElement CycloElement::zeta_power(long m, long k)
{
    return from_polynomial(m, RatPolynomial::monomial(static_cast<std::size_t>(mod_floor(k, m))));
}

CycloElement CycloElement::imaginary_unit(long m)
{
    require(m % 4 == 0, "sqrt(-1) lies in Q(zeta_m) only when 4 | m");
    return zeta_power(m, m / 4);
}

bool CycloElement::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

RatPolynomial CycloElement::as_polynomial() const { return RatPolynomial(coords_); }

Complex CycloElement::embed(long j, mpfr_prec_t bits) const
{
    Complex acc(bits);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        acc += Complex::root_of_unity(static_cast<long>(i) * j, m_, bits) * Real(coords_[i], bits);
    }
    return acc;
}

void CycloElement::check_same_field(const CycloElement& o) const
{
    require(m_ == o.m_, "cyclotomic elements from different fields");
}

CycloElement CycloElement::operator-() const
{
    CycloElement r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o)
{
    check_same_field(o);
    *this = from_polynomial(m_, as_polynomial() * o.as_polynomial());
    return *this;
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) { return a * b; }

CycloElement cyclo_inv(const CycloElement& e)
{
    require(!e.is_zero(), "inverse of zero in a cyclotomic field");
    const long m = e.conductor();
    // s*e + t*Phi = 1 since Phi is irreducible and e != 0 mod Phi.
    const ExtendedGcd eg = extended_gcd(e.as_polynomial(), cyclotomic_polynomial(m));
    if (eg.g.degree() != 0) fail(ErrorKind::Internal, "non-invertible nonzero cyclotomic element");
    return CycloElement::from_polynomial(m, eg.s);
}

CycloElement cyclo_conjugate(const CycloElement& e, long j)
{
    const long m = e.conductor();
    require(std::gcd(mod_floor(j, m), m) == 1 || m <= 2, "conjugation exponent must be a unit mod m");
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < e.coords().size(); ++i)
        c[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * j, m))] += e.coords()[i];
    return CycloElement::from_polynomial(m, RatPolynomial(std::move(c)));
}

Rational cyclo_norm(const CycloElement& e)
{
    const long m = e.conductor();
    CycloElement acc = CycloElement::rational(m, 1);
    for (long j : units_mod(m)) acc *= cyclo_conjugate(e, j);
    if (!acc.is_rational()) fail(ErrorKind::Internal, "product of conjugates is not rational");
    return acc.rational_part();
}

Rational cyclo_norm_by_resultant(const CycloElement& e)
{
    if (e.is_zero()) return 0;
    const RatPolynomial g = e.as_polynomial();
    if (g.degree() == 0) {
        Rational r = 1;
        for (long i = 0; i < euler_phi(e.conductor()); ++i) r *= g.leading();
        return r;
    }
    return resultant(cyclotomic_polynomial(e.conductor()), g);
}

BranchData branch_values(long m)
{
    require(m >= 3, "branch values need m >= 3");
    const CycloElement one = CycloElement::rational(m, 1);
    const CycloElement half = CycloElement::rational(m, Rational(1, 2));
    const CycloElement u = one - CycloElement::zeta_power(m, 1);
    const CycloElement s1 = -(half * u) + cyclo_inv(CycloElement::rational(m, 2) * u);

    BranchData data;
    data.m = m;
    for (long k : units_mod(m)) data.s_values.emplace(k, cyclo_conjugate(s1, k));

    for (auto a = data.s_values.begin(); a != data.s_values.end(); ++a) {
        const CycloElement sq = a->second * a->second + one;
        if (sq.is_zero()) fail(ErrorKind::Internal, "branch value equals +-i");
        for (auto b = std::next(a); b != data.s_values.end(); ++b) {
            if (a->second == b->second) fail(ErrorKind::Internal, "branch values are not distinct");
        }
    }

    // Expand prod_k (X - s_k) with coefficients in Q(zeta_m).
    std::vector<CycloElement> poly{one};
    for (const auto& [k, s] : data.s_values) {
        std::vector<CycloElement> next(poly.size() + 1, CycloElement(m));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * s;
        }
        poly = std::move(next);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& c : poly) {
        if (!c.is_rational()) fail(ErrorKind::Internal, "branch polynomial coefficient is not rational");
        coeffs.push_back(c.rational_part());
    }
    data.branch_poly = RatPolynomial(std::move(coeffs));
    return data;
}

std::set<Integer> MeetingNorms::all() const
{
    std::set<Integer> out = condition_a;
    out.insert(condition_b.begin(), condition_b.end());
    return out;
}

MeetingNorms branch_meeting_norms(long n)
{
    require(n >= 3, "meeting norms need n >= 3");
    require(n <= 12, "meeting norms limited to n <= 12");
    const long m = 1L << (n - 1);
    const CycloElement one = CycloElement::rational(m, 1);
    const CycloElement two = CycloElement::rational(m, 2);
    const CycloElement zeta = CycloElement::zeta_power(m, 1);
    const CycloElement two_i = two * CycloElement::imaginary_unit(m);

    auto abs_norm = [](const CycloElement& e) {
        const Rational r = cyclo_norm(e);
        if (r.get_den() != 1) fail(ErrorKind::Internal, "norm of an algebraic integer is not an integer");
        return Integer(abs(r.get_num()));
    };

    MeetingNorms out;
    for (long k : units_mod(m)) {
        const CycloElement zk = CycloElement::zeta_power(m, k);
        if (k != 1) out.condition_a.insert(abs_norm((one - zk) * (one - zeta) + one));
        // The numerator of s_k +- i carries 2 - zeta^k; the literal form 2 - zeta is
        // also included. Extra norms only shrink the set of admissible primes.
        for (const CycloElement& two_minus : {two - zeta, two - zk}) {
            const CycloElement base = zk * two_minus;
            const CycloElement twist = two_i * (one - zk);
            out.condition_b.insert(abs_norm(base + twist));
            out.condition_b.insert(abs_norm(base - twist));
        }
    }
    return out;
}

}  // namespace galr
