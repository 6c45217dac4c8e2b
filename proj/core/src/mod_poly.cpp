#include "galr/mod_poly.hpp"

#include "galr/arith.hpp"
#include "galr/error.hpp"

namespace galr {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    const std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

std::uint64_t reduce_rational(const Rational& c, std::uint64_t p)
{
    const Integer pz = from_u64(p);
    Integer num, den;
    mpz_mod(num.get_mpz_t(), c.get_num_mpz_t(), pz.get_mpz_t());
    mpz_mod(den.get_mpz_t(), c.get_den_mpz_t(), pz.get_mpz_t());
    require(den != 0, "prime " + std::to_string(p) + " divides a coefficient denominator");
    return mulmod(to_u64(num), invmod(to_u64(den), p), p);
}

}  // namespace

ModPolynomial::ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs))
{
    require(p >= 2, "modulus must be a prime");
    for (auto& c : coeffs_) c %= p_;
    normalize();
}

ModPolynomial ModPolynomial::reduce(const RatPolynomial& f, std::uint64_t p)
{
    require(is_prime_u64(p), std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.push_back(reduce_rational(q, p));
    return ModPolynomial(p, std::move(c));
}

ModPolynomial ModPolynomial::monomial(std::uint64_t p, std::size_t k, std::uint64_t c)
{
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return ModPolynomial(p, std::move(v));
}

void ModPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t ModPolynomial::eval(std::uint64_t x) const
{
    std::uint64_t acc = 0;
    x %= p_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = addm(mulmod(acc, x, p_), *it, p_);
    return acc;
}

ModPolynomial ModPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) return ModPolynomial(p_);
    std::vector<std::uint64_t> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = mulmod(coeffs_[i], i % p_, p_);
    return ModPolynomial(p_, std::move(d));
}

ModPolynomial ModPolynomial::monic() const
{
    if (is_zero()) return *this;
    const std::uint64_t inv = invmod(leading(), p_);
    ModPolynomial r(*this);
    for (auto& c : r.coeffs_) c = mulmod(c, inv, p_);
    return r;
}

ModPolynomial& ModPolynomial::operator+=(const ModPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = addm(coeffs_[i], o.coeffs_[i], p_);
    normalize();
    return *this;
}

ModPolynomial& ModPolynomial::operator-=(const ModPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = subm(coeffs_[i], o.coeffs_[i], p_);
    normalize();
    return *this;
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b)
{
    const auto p = a.p_;
    if (a.is_zero() || b.is_zero()) return ModPolynomial(p);
    std::vector<std::uint64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] = addm(r[i + j], mulmod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
    return ModPolynomial(p, std::move(r));
}

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b)
{
    require(!b.is_zero(), "polynomial division by zero mod p");
    const auto p = a.prime();
    if (a.degree() < b.degree()) return {ModPolynomial(p), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    const std::uint64_t inv = invmod(b.leading(), p);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const std::uint64_t f = mulmod(rem[i], inv, p);
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = subm(rem[i - db + j], mulmod(f, b.coeffs()[j], p), p);
    }
    rem.resize(db);
    return {ModPolynomial(p, std::move(quot)), ModPolynomial(p, std::move(rem))};
}

ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).second; }

ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b)
{
    ModPolynomial x = a, y = b;
    while (!y.is_zero()) {
        ModPolynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& modulus)
{
    const auto p = modulus.prime();
    ModPolynomial result = ModPolynomial(p, {1}) % modulus;
    ModPolynomial b = base % modulus;
    const auto nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = nbits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % modulus;
    }
    return result;
}

bool is_squarefree(const ModPolynomial& f)
{
    if (f.degree() <= 0) return true;
    const ModPolynomial d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

std::optional<DegreePattern> ddf_degree_pattern(const ModPolynomial& f)
{
    require(!f.is_zero(), "degree pattern of the zero polynomial");
    if (!is_squarefree(f)) return std::nullopt;
    const auto p = f.prime();
    const Integer pz = from_u64(p);
    DegreePattern pattern;
    ModPolynomial rest = f.monic();
    const ModPolynomial x = ModPolynomial::monomial(p, 1);
    ModPolynomial h = x % rest;  // X^(p^d) mod rest
    for (long d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, pz, rest);
        ModPolynomial g = gcd(rest, h - x);
        if (g.degree() > 0) {
            pattern[d] += g.degree() / d;
            rest = divmod(rest, g).first;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) pattern[rest.degree()] += 1;
    return pattern;
}

namespace {

void split_linear(const ModPolynomial& g, std::set<std::uint64_t>& out)
{
    const auto p = g.prime();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        const ModPolynomial m = g.monic();
        out.insert(subm(0, m.coeffs()[0], p));
        return;
    }
    const Integer half = (from_u64(p) - 1) / 2;
    // Deterministic shifts a = 0, 1, 2, ...; each splits g with probability about 1/2.
    for (std::uint64_t a = 0; a < p; ++a) {
        const ModPolynomial shifted(p, {a, 1});
        ModPolynomial w = powmod(shifted, half, g) - ModPolynomial(p, {1});
        ModPolynomial h = gcd(g, w);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, out);
            split_linear(divmod(g, h).first, out);
            return;
        }
    }
    fail(ErrorKind::Internal, "root splitting did not terminate");
}

}  // namespace

std::set<std::uint64_t> roots_mod_p(const RatPolynomial& f, std::uint64_t p)
{
    require(p > 2 && is_prime_u64(p), "roots_mod_p requires an odd prime");
    const ModPolynomial fp = ModPolynomial::reduce(f, p);
    std::set<std::uint64_t> roots;
    if (fp.is_zero()) {
        for (std::uint64_t r = 0; r < p; ++r) roots.insert(r);
        return roots;
    }
    if (fp.degree() == 0) return roots;
    const ModPolynomial x = ModPolynomial::monomial(p, 1);
    const ModPolynomial frob = powmod(x, from_u64(p), fp) - x;
    split_linear(gcd(fp, frob), roots);
    return roots;
}

}  // namespace galr
