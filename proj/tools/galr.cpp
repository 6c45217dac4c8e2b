// galr: explicit realizations of semidirect Z/m x| Z/2 and generalized quaternion
// groups, specialization progressions and Frobenius statistics, as JSON.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"
#include "galr/groups.hpp"
#include "galr/progression.hpp"
#include "galr/realization.hpp"
#include "galr/serialize.hpp"
#include "galr/verifier.hpp"

namespace {

using galr::Json;

enum Exit { ok = 0, assertion_failed = 1, usage_error = 2, computation_error = 3 };

struct Options {
    std::optional<long> n, m, d;
    std::optional<std::string> family;
    std::optional<std::string> t;
    std::optional<std::string> p, q, t0;
    long precision_bits = 256;
    long num_primes = 300;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
    std::optional<std::string> realization;
    std::optional<std::string> poly;
};

void emit(const Options& opt, const Json& j)
{
    const std::string text = j.dump(2) + "\n";
    if (opt.out) {
        std::ofstream f(*opt.out);
        if (!f) galr::fail(galr::ErrorKind::InvalidArgument, "cannot open " + *opt.out + " for writing");
        f << text;
    } else {
        std::cout << text;
    }
}

galr::GroupSpec spec_from(const Options& opt)
{
    galr::require(opt.family.has_value(), "--family is required");
    return galr::GroupSpec::from_fields(galr::parse_family(*opt.family), opt.m, opt.d, opt.n);
}

long need_n(const Options& opt)
{
    galr::require(opt.n.has_value(), "--n is required");
    galr::require(*opt.n >= 3, "--n must be at least 3");
    return *opt.n;
}

std::pair<galr::Integer, galr::Integer> primes_from(const Options& opt, long n)
{
    galr::require(opt.p.has_value() == opt.q.has_value(), "give both --p and --q or neither");
    if (opt.p) return {galr::parse_integer(*opt.p), galr::parse_integer(*opt.q)};
    const auto pair = galr::find_good_pair(n);
    if (!pair) galr::fail(galr::ErrorKind::Internal, "no good prime pair found below the search limit");
    std::cerr << "using p = " << pair->first.get_str() << ", q = " << pair->second.get_str() << "\n";
    return *pair;
}

int cmd_branch_poly(const Options& opt)
{
    galr::require(opt.n.has_value() != opt.m.has_value(), "give exactly one of --n or --m");
    const long m = opt.n ? (need_n(opt), 1L << (*opt.n - 1)) : *opt.m;
    const galr::BranchData data = galr::branch_values(m);
    Json out;
    out["m"] = m;
    out["poly"] = galr::to_json(data.branch_poly);
    emit(opt, out);
    std::cerr << "m(X) = " << data.branch_poly.to_string() << "\n";
    return ok;
}

int cmd_check_primes(const Options& opt)
{
    const long n = need_n(opt);
    galr::require(opt.p && opt.q, "--p and --q are required");
    const galr::Integer p = galr::parse_integer(*opt.p);
    const galr::Integer q = galr::parse_integer(*opt.q);
    const galr::PrimePairReport report = galr::is_good_prime_pair(n, p, q);
    Json out;
    out["n"] = n;
    out["p"] = galr::to_json(p);
    out["q"] = galr::to_json(q);
    out["report"] = galr::to_json(report);
    out["size_bound"] = galr::to_json(galr::size_bound(n));
    out["p_above_size_bound"] = galr::satisfies_size_bound(n, p);
    out["q_above_size_bound"] = galr::satisfies_size_bound(n, q);
    emit(opt, out);
    for (const auto& r : report.reasons) std::cerr << r << "\n";
    return report.good ? ok : assertion_failed;
}

int cmd_find_progression(const Options& opt)
{
    const long n = need_n(opt);
    if (opt.t0) {
        galr::require(opt.p && opt.q, "--t0 needs --p and --q");
        const galr::Integer p = galr::parse_integer(*opt.p);
        const galr::Integer q = galr::parse_integer(*opt.q);
        const galr::Integer t0 = galr::parse_integer(*opt.t0);
        const galr::CertifyResult res = galr::certify(n, p, q, t0);
        Json out;
        out["n"] = n;
        out["p"] = galr::to_json(p);
        out["q"] = galr::to_json(q);
        out["t0"] = galr::to_json(t0);
        out["modulus"] = galr::to_json(galr::Integer(p * p * q * q));
        out["certified"] = res.ok;
        out["certificate"] = galr::to_json(res.certificate);
        out["reasons"] = res.reasons;
        emit(opt, out);
        for (const auto& r : res.reasons) std::cerr << r << "\n";
        return res.ok ? ok : assertion_failed;
    }
    const auto [p, q] = primes_from(opt, n);
    emit(opt, galr::to_json(galr::find_t0(n, p, q)));
    return ok;
}

int cmd_construct(const Options& opt)
{
    const galr::GroupSpec spec = spec_from(opt);
    galr::require(opt.t.has_value(), "--t is required");
    const galr::Rational t = galr::parse_rational(*opt.t);
    const auto r = galr::build_specialized(spec, t, opt.precision_bits);
    emit(opt, galr::to_json(r));
    std::cerr << "degree " << r.poly.degree() << " at " << r.precision_bits << " bits, residual "
              << r.residual.to_string(5) << "\n";
    return ok;
}

int cmd_verify(const Options& opt)
{
    galr::require(opt.realization.has_value() != opt.poly.has_value(), "give exactly one of --realization or --poly");
    std::optional<galr::GroupSpec> spec;
    galr::RatPolynomial poly;
    if (opt.realization) {
        std::ifstream f(*opt.realization);
        galr::require(static_cast<bool>(f), "cannot read " + *opt.realization);
        Json j;
        try {
            j = Json::parse(f);
        } catch (const Json::parse_error& e) {
            galr::fail(galr::ErrorKind::InvalidArgument, std::string("malformed realization JSON: ") + e.what());
        }
        const auto r = galr::realization_from_json(j);
        poly = r.poly;
        spec = r.spec;
    } else {
        Json j;
        try {
            j = Json::parse(*opt.poly);
        } catch (const Json::parse_error& e) {
            galr::fail(galr::ErrorKind::InvalidArgument, std::string("malformed --poly JSON: ") + e.what());
        }
        poly = galr::poly_from_json(j);
    }
    if (opt.family) spec = spec_from(opt);
    galr::require(spec.has_value(), "--family is required with --poly");
    const auto report = galr::verify(poly, *spec, opt.num_primes, opt.seed);
    emit(opt, galr::to_json(report));
    std::cerr << "verdict: " << galr::to_string(report.verdict) << "\n";
    return report.verdict == galr::Verdict::Consistent ? ok : assertion_failed;
}

int cmd_pipeline(const Options& opt)
{
    const long n = need_n(opt);
    const auto [p, q] = primes_from(opt, n);
    const galr::Progression prog = galr::find_t0(n, p, q);
    const galr::GroupSpec spec = galr::GroupSpec::quaternion(n);
    const auto real = galr::build_specialized(spec, galr::Rational(prog.t0), opt.precision_bits);
    const auto report = galr::verify(real.poly, spec, opt.num_primes, opt.seed);
    Json out;
    out["progression"] = galr::to_json(prog);
    out["realization"] = galr::to_json(real);
    out["verification"] = galr::to_json(report);
    emit(opt, out);
    std::cerr << "t0 = " << prog.t0.get_str() << ", verdict: " << galr::to_string(report.verdict) << "\n";
    return report.verdict == galr::Verdict::Consistent ? ok : assertion_failed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Explicit regular realizations of Z/m x| Z/2 and Q_{2^n} over Q"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "2-group parameter n (order 2^n)");
        sub->add_option("--m", opt.m, "cyclic part order m");
        sub->add_option("--d", opt.d, "action d with d^2 = 1 mod m");
        sub->add_option("--family", opt.family, "dihedral|quasidihedral|modular|quaternion|semidirect")
            ->check(CLI::IsMember({"dihedral", "quasidihedral", "modular", "quaternion", "semidirect"}));
        sub->add_option("--t", opt.t, "specialization point num/den");
        sub->add_option("--p", opt.p, "prime p = 1 mod 2^(n-1)");
        sub->add_option("--q", opt.q, "prime q = 1 mod 4");
        sub->add_option("--t0", opt.t0, "progression base point to certify");
        sub->add_option("--precision-bits", opt.precision_bits, "starting binary precision")
            ->check(CLI::Range(64L, static_cast<long>(galr::max_precision_bits)));
        sub->add_option("--num-primes", opt.num_primes, "primes to sample")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "reserved; results do not depend on it");
        sub->add_option("--out", opt.out, "write JSON here instead of stdout");
    };

    struct Entry {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Entry entries[] = {
        {"branch-poly", "branch polynomial m(X) for conductor 2^(n-1) or m", cmd_branch_poly},
        {"find-progression", "progression t = t0 mod p^2 q^2 (or certify --t0)", cmd_find_progression},
        {"check-primes", "good-prime conditions for (n, p, q)", cmd_check_primes},
        {"construct", "specialized defining polynomial at t", cmd_construct},
        {"verify", "Frobenius statistics against the target group", cmd_verify},
        {"pipeline", "progression, construction at t0 and verification", cmd_pipeline},
    };
    int (*selected)(const Options&) = nullptr;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common(sub);
        if (std::string(e.name) == "verify") {
            sub->add_option("--realization", opt.realization, "realization JSON file from construct");
            sub->add_option("--poly", opt.poly, "inline JSON array of coefficients, ascending");
        }
        sub->callback([&selected, run = e.run] { selected = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage_error;
    }

    try {
        return selected(opt);
    } catch (const galr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == galr::ErrorKind::InvalidArgument ? usage_error : computation_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return computation_error;
    }
}
