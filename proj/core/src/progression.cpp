#include "galr/progression.hpp"

#include <map>
#include <mutex>

#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"
#include "galr/mod_poly.hpp"

namespace galr {

namespace {

constexpr long max_norm_n = 12;

const std::set<Integer>& cached_norms(long n)
{
    static std::mutex mutex;
    static std::map<long, std::set<Integer>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, branch_meeting_norms(n).all()).first;
    return it->second;
}

const RatPolynomial& cached_branch_poly(long n)
{
    static std::mutex mutex;
    static std::map<long, RatPolynomial> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, branch_values(1L << (n - 1)).branch_poly).first;
    return it->second;
}

Integer fermat_like(long n)
{
    // 2^(2^(n-2)) + 1
    return (Integer(1) << static_cast<mp_bitcnt_t>(1UL << (n - 2))) + 1;
}

Integer mod_nonneg(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

PrimeRoute route_for(long n, const Integer& p, std::vector<std::string>& reasons, const char* name)
{
    if (n <= max_norm_n) {
        for (const auto& norm : cached_norms(n)) {
            if (norm % p == 0) {
                reasons.push_back(std::string(name) + " = " + to_string(p) + " divides the meeting norm " +
                                  to_string(norm));
                return PrimeRoute::Rejected;
            }
        }
        return PrimeRoute::MeetingNorms;
    }
    if (satisfies_size_bound(n, p)) return PrimeRoute::SizeBound;
    reasons.push_back(std::string(name) + " is below 7^(2^(n-2)) + 1 and meeting norms are not computed for n > " +
                      std::to_string(max_norm_n));
    return PrimeRoute::Rejected;
}

void check_n(long n)
{
    require(n >= 3, "progressions need n >= 3");
    require(n <= 20, "n too large");
}

}  // namespace

std::string_view to_string(PrimeRoute r)
{
    switch (r) {
        case PrimeRoute::MeetingNorms: return "meeting-norms";
        case PrimeRoute::SizeBound: return "size-bound";
        case PrimeRoute::Rejected: return "rejected";
    }
    return "unknown";
}

Integer size_bound(long n)
{
    check_n(n);
    Integer b;
    mpz_ui_pow_ui(b.get_mpz_t(), 7, 1UL << (n - 2));
    return b + 1;
}

bool satisfies_size_bound(long n, const Integer& p) { return p >= size_bound(n); }

PrimePairReport is_good_prime_pair(long n, const Integer& p, const Integer& q)
{
    check_n(n);
    PrimePairReport report;
    auto& why = report.reasons;
    const Integer m = Integer(1) << static_cast<mp_bitcnt_t>(n - 1);
    const Integer f = fermat_like(n);

    bool basic = true;
    for (const auto& [x, name] : {std::pair<const Integer&, const char*>{p, "p"}, {q, "q"}}) {
        if (x < 3 || !is_prime(x)) {
            why.push_back(std::string(name) + " = " + to_string(x) + " is not an odd prime");
            basic = false;
            continue;
        }
        if (f % x == 0) {
            why.push_back(std::string(name) + " = " + to_string(x) + " divides 2^(2^(n-2)) + 1 = " + to_string(f));
            basic = false;
        }
    }
    if (p == q) {
        why.push_back("p and q must be distinct");
        basic = false;
    }
    if (p > 0 && mod_nonneg(p, m) != 1) {
        why.push_back("p = " + to_string(p) + " is not 1 mod 2^(n-1) = " + to_string(m));
        basic = false;
    }
    if (q > 0 && mod_nonneg(q, 4) != 1) {
        why.push_back("q = " + to_string(q) + " is not 1 mod 4");
        basic = false;
    }
    if (p >= 3) report.route_p = route_for(n, p, why, "p");
    if (q >= 3) report.route_q = route_for(n, q, why, "q");
    report.good = basic && report.route_p != PrimeRoute::Rejected && report.route_q != PrimeRoute::Rejected;
    return report;
}

CertifyResult certify(long n, const Integer& p, const Integer& q, const Integer& t0)
{
    CertifyResult out;
    const PrimePairReport pair = is_good_prime_pair(n, p, q);
    out.reasons = pair.reasons;

    Certificate& c = out.certificate;
    c.used_7power_shortcut = pair.route_p == PrimeRoute::SizeBound || pair.route_q == PrimeRoute::SizeBound;
    if (n <= max_norm_n) {
        const auto& norms = cached_norms(n);
        c.norms_checked.assign(norms.begin(), norms.end());
    }
    if (p > 0) c.root_mod_p = mod_nonneg(t0, p);
    if (q > 0) c.root_mod_q = mod_nonneg(t0, q);
    if (!pair.good) return out;

    const Rational t(t0);
    c.v_p_of_m_t0 = valuation_p(cached_branch_poly(n).eval(t), p);
    c.v_q_of_t0sq_plus_1 = valuation_p(Rational(t0 * t0 + 1), q);
    bool ok = true;
    if (c.v_p_of_m_t0 != Valuation(1)) {
        out.reasons.push_back("v_p(m(t0)) = " + c.v_p_of_m_t0.to_string() + ", expected 1");
        ok = false;
    }
    if (c.v_q_of_t0sq_plus_1 != Valuation(1)) {
        out.reasons.push_back("v_q(t0^2 + 1) = " + c.v_q_of_t0sq_plus_1.to_string() + ", expected 1");
        ok = false;
    }
    out.ok = ok;
    return out;
}

namespace {

/// A lift r + j*prime (0 <= j < prime) of some root r with valuation exactly one.
Integer lift_to_valuation_one(const RatPolynomial& f, const Integer& prime, const std::set<std::uint64_t>& roots)
{
    for (std::uint64_t r : roots) {
        // For a simple root, at most one lift has valuation >= 2, so j = 0 or 1 suffices.
        for (Integer j = 0; j < prime; ++j) {
            const Integer cand = from_u64(r) + j * prime;
            if (valuation_p(f.eval(Rational(cand)), prime) == Valuation(1)) return cand;
        }
    }
    fail(ErrorKind::DegenerateRoot, "no lift with valuation one modulo " + to_string(prime));
}

}  // namespace

Progression find_t0(long n, const Integer& p, const Integer& q)
{
    const PrimePairReport pair = is_good_prime_pair(n, p, q);
    if (!pair.good) {
        std::string msg = "not a good prime pair:";
        for (const auto& r : pair.reasons) msg += " " + r + ";";
        fail(ErrorKind::InvalidArgument, msg);
    }
    require(fits_u64(p) && fits_u64(q), "primes must fit in 64 bits");

    const RatPolynomial& branch = cached_branch_poly(n);
    const RatPolynomial circle{Rational(1), Rational(0), Rational(1)};
    const auto roots_p = roots_mod_p(branch, to_u64(p));
    const auto roots_q = roots_mod_p(circle, to_u64(q));
    if (roots_p.empty()) fail(ErrorKind::Internal, "branch polynomial has no root mod " + to_string(p));
    if (roots_q.empty()) fail(ErrorKind::Internal, "X^2 + 1 has no root mod " + to_string(q));

    const Integer tp = lift_to_valuation_one(branch, p, roots_p);
    const Integer tq = lift_to_valuation_one(circle, q, roots_q);
    const Integer p2 = p * p;
    const Integer q2 = q * q;
    const Integer t0 = crt_pair(mod_nonneg(tp, p2), p2, mod_nonneg(tq, q2), q2);

    const CertifyResult check = certify(n, p, q, t0);
    if (!check.ok) fail(ErrorKind::Internal, "constructed t0 = " + to_string(t0) + " fails certification");
    return {n, p, q, t0, p2 * q2, check.certificate};
}

std::optional<std::pair<Integer, Integer>> find_good_pair(long n, std::uint64_t limit)
{
    check_n(n);
    const std::uint64_t m = 1ULL << (n - 1);
    auto good_single = [&](std::uint64_t x, std::uint64_t modulus) {
        if (x % modulus != 1 || !is_prime_u64(x)) return false;
        std::vector<std::string> ignored;
        if (fermat_like(n) % from_u64(x) == 0) return false;
        return route_for(n, from_u64(x), ignored, "x") != PrimeRoute::Rejected;
    };
    for (std::uint64_t p = m + 1; p < limit; p += m) {
        if (!good_single(p, m)) continue;
        for (std::uint64_t q = 5; q < limit; q += 4) {
            if (q == p || !good_single(q, 4)) continue;
            return std::make_pair(from_u64(p), from_u64(q));
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace galr
