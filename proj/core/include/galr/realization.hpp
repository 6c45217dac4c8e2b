#pragma once

#include <string>
#include <vector>

#include "galr/bigfloat.hpp"
#include "galr/groups.hpp"
#include "galr/radicals.hpp"
#include "galr/rat_poly.hpp"

namespace galr {

struct LabeledConjugate {
    ConjugateLabel label;
    Complex value;
};

/// Semidirect families: (-1)^eps sqrt(t^2+1) + v_delta(d^((-1)^eps)) over eps in {0,1},
/// delta in [1, m]. Quaternion: (-1)^a sqrt(t^2+1) + (mu_a + v_delta)^2 over a in [1,4],
/// delta in [0, 2^(n-2) - 1], with v_delta = v_delta(-1).
/// Throws ConjugateCollision when two values lie within 2^(-precision/2) of each other.
std::vector<LabeledConjugate> conjugate_set(const GroupSpec& spec, const RadicalContext& ctx);

/// Monic product of (X - w) over the conjugates, expanded in floating point.
std::vector<Complex> expand_product(const std::vector<Complex>& roots);

struct SpecializedRealization {
    GroupSpec spec;
    Rational t;
    RatPolynomial poly;
    /// max over coefficients of |floating coefficient - reconstructed rational|.
    Real residual;
    mpfr_prec_t precision_bits;
    bool conjugates_distinct;
    std::vector<std::string> notes;
};

inline constexpr mpfr_prec_t max_precision_bits = 4096;

/// Builds the conjugate set at t, expands the product and rationalizes every coefficient.
/// Precision doubles (up to max_precision_bits) whenever reconstruction or one of the
/// numerical consistency checks fails. Throws RationalizationFailed past the cap,
/// ConjugateCollision, BranchPoint for quaternion at t = 0, and DegeneratePolynomial
/// when the reconstructed polynomial is not squarefree.
SpecializedRealization build_specialized(const GroupSpec& spec, const Rational& t, mpfr_prec_t precision = 256);

}  // namespace galr
