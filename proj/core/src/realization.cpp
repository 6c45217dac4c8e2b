#include "galr/realization.hpp"

#include "galr/arith.hpp"
#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"

namespace galr {

namespace {

std::string label_text(const GroupSpec& spec, const ConjugateLabel& l)
{
    if (spec.is_quaternion()) return "(a=" + std::to_string(l.sign_index) + ", delta=" + std::to_string(l.shift) + ")";
    return "(eps=" + std::to_string(l.sign_index) + ", delta=" + std::to_string(l.shift) + ")";
}

void check_distinct(const GroupSpec& spec, const std::vector<LabeledConjugate>& conj, const Rational& t,
                    mpfr_prec_t precision)
{
    const Real tol = Real::pow2(-static_cast<long>(precision / 2), precision);
    for (std::size_t i = 0; i < conj.size(); ++i) {
        for (std::size_t j = i + 1; j < conj.size(); ++j) {
            if (abs(conj[i].value - conj[j].value) < tol) {
                fail(ErrorKind::ConjugateCollision, "conjugates " + label_text(spec, conj[i].label) + " and " +
                                                        label_text(spec, conj[j].label) + " coincide at t = " +
                                                        to_string(t));
            }
        }
    }
}

struct Attempt {
    RatPolynomial poly;
    Real residual;
};

class AttemptFailed : public std::exception {};

Attempt attempt_at(const GroupSpec& spec, const Rational& t, mpfr_prec_t precision)
{
    const RadicalContext ctx(spec.cyclic_order(), t, precision);
    std::vector<LabeledConjugate> conj = conjugate_set(spec, ctx);
    std::vector<Complex> roots;
    roots.reserve(conj.size());
    for (auto& c : conj) roots.push_back(std::move(c.value));
    const std::vector<Complex> coeffs = expand_product(roots);

    const mpfr_prec_t bits = ctx.working_precision();
    const Real imag_tol = Real::pow2(-static_cast<long>(precision / 2), bits);
    const Real tol = Real::pow2(-static_cast<long>(precision / 4), bits);
    const Integer bound = Integer(1) << static_cast<mp_bitcnt_t>(precision / 16);

    std::vector<Rational> exact;
    exact.reserve(coeffs.size());
    Real residual(0L, bits);
    for (const auto& c : coeffs) {
        if (abs(c.im()) >= imag_tol) throw AttemptFailed();
        Rational q;
        try {
            q = rational_reconstruct(c.re(), bound, tol);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ReconstructionFailed) throw AttemptFailed();
            throw;
        }
        const Real diff = abs(c.re() - Real(q, bits));
        if (diff > residual) residual = diff;
        exact.push_back(q);
    }
    RatPolynomial poly(std::move(exact));
    if (!poly.is_monic() || poly.degree() != spec.order()) throw AttemptFailed();

    // Each conjugate must be a root of the rounded polynomial up to the coefficient tolerance.
    Real max_abs(1L, bits);
    for (const auto& w : roots) {
        const Real a = abs(w) + Real(1L, bits);
        if (a > max_abs) max_abs = a;
    }
    Real scale = tol;
    for (long i = 0; i < poly.degree(); ++i) scale *= max_abs;
    for (const auto& w : roots) {
        if (abs(poly.eval(w)) >= scale) throw AttemptFailed();
    }
    return {std::move(poly), std::move(residual)};
}

}  // namespace

std::vector<LabeledConjugate> conjugate_set(const GroupSpec& spec, const RadicalContext& ctx)
{
    require(ctx.m() == spec.cyclic_order(), "radical context conductor does not match the group");
    const Complex root(ctx.sqrt_t2p1());
    std::vector<LabeledConjugate> out;

    if (spec.is_quaternion()) {
        const auto mu = mu_values(ctx);
        // a even pairs with +sqrt(t^2+1) and {mu, -mu}; a odd with -sqrt(t^2+1) and {mu', -mu'}.
        const Complex* mu_for[5] = {nullptr, &mu[2], &mu[1], &mu[3], &mu[0]};
        for (const auto& label : conjugate_index_set(spec)) {
            const long a = label.sign_index;
            const Complex s = *mu_for[a] + ctx.v(-1, label.shift);
            Complex w = s * s;
            if (a % 2 == 0)
                w += root;
            else
                w -= root;
            out.push_back({label, std::move(w)});
        }
    } else {
        const long d = spec.action();
        const long d_inv = inverse_mod(d, spec.cyclic_order());
        for (const auto& label : conjugate_index_set(spec)) {
            const bool negated = label.sign_index == 1;
            Complex w = ctx.v(negated ? d_inv : d, label.shift);
            if (negated)
                w -= root;
            else
                w += root;
            out.push_back({label, std::move(w)});
        }
    }
    check_distinct(spec, out, ctx.t(), ctx.precision());
    return out;
}

std::vector<Complex> expand_product(const std::vector<Complex>& roots)
{
    const mpfr_prec_t bits = roots.empty() ? 64 : roots.front().precision();
    std::vector<Complex> poly{Complex(Real(1L, bits))};
    for (const auto& w : roots) {
        std::vector<Complex> next(poly.size() + 1, Complex(bits));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * w;
        }
        poly = std::move(next);
    }
    return poly;
}

SpecializedRealization build_specialized(const GroupSpec& spec, const Rational& t, mpfr_prec_t precision)
{
    require(precision >= 64, "precision must be at least 64 bits");
    require(precision <= max_precision_bits, "precision above the supported maximum");
    if (spec.is_quaternion() && t == 0)
        fail(ErrorKind::BranchPoint, "t = 0 is a branch point of the quaternion family");

    for (mpfr_prec_t bits = precision; bits <= max_precision_bits; bits *= 2) {
        Attempt attempt;
        try {
            attempt = attempt_at(spec, t, bits);
        } catch (const AttemptFailed&) {
            continue;
        }
        if (!is_squarefree(attempt.poly))
            fail(ErrorKind::DegeneratePolynomial, "reconstructed polynomial is not squarefree at t = " + to_string(t));

        SpecializedRealization out{spec, t, std::move(attempt.poly), std::move(attempt.residual), bits, true, {}};
        out.notes.push_back("principal m-th roots: argument in [0, 2*pi/m)");
        if (spec.is_quaternion())
            out.notes.push_back("inner radicand taken as t^2 + 1 + (-1)^a t sqrt(t^2+1)");
        if (bits != precision)
            out.notes.push_back("precision raised from " + std::to_string(precision) + " to " + std::to_string(bits) +
                                " bits");
        return out;
    }
    fail(ErrorKind::RationalizationFailed, "coefficients did not rationalize at up to " +
                                               std::to_string(max_precision_bits) + " bits");
}

}  // namespace galr
