#include "galr/rational.hpp"

#include "galr/error.hpp"

namespace galr {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::ReconstructionFailed: return "reconstruction-failed";
        case ErrorKind::RationalizationFailed: return "rationalization-failed";
        case ErrorKind::ConjugateCollision: return "conjugate-collision";
        case ErrorKind::BranchPoint: return "branch-point";
        case ErrorKind::DegenerateRoot: return "degenerate-root";
        case ErrorKind::DegeneratePolynomial: return "degenerate-polynomial";
        case ErrorKind::Internal: return "internal-error";
    }
    return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den)
{
    require(den != 0, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text)
{
    require(valid_integer_text(text), "malformed integer '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const std::string_view den_text = text.substr(slash + 1);
    require(!den_text.empty() && den_text.front() != '-' && den_text.front() != '+',
            "malformed rational '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

bool fits_u64(const Integer& z)
{
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& z)
{
    require(fits_u64(z), "integer does not fit in 64 bits");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
    return v;
}

Integer from_u64(std::uint64_t v)
{
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return z;
}

}  // namespace galr
