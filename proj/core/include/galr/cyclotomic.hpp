#pragma once

#include <map>
#include <set>
#include <vector>

#include "galr/bigfloat.hpp"
#include "galr/rat_poly.hpp"

namespace galr {

long euler_phi(long m);
/// Units of Z/m in ascending order of their representatives in [1, m).
std::vector<long> units_mod(long m);
/// Representative of a mod m in [0, m).
long mod_floor(long a, long m);
/// Inverse of a unit modulo m.
long inverse_mod(long a, long m);

/// The m-th cyclotomic polynomial (monic, integer coefficients).
RatPolynomial cyclotomic_polynomial(long m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1), zeta a fixed
/// root of the m-th cyclotomic polynomial. Under the embedding zeta -> exp(2*pi*i/m)
/// it is the value sum_j coords[j] * exp(2*pi*i*j/m).
class CycloElement {
public:
    /// Zero element.
    explicit CycloElement(long m);
    CycloElement(long m, std::vector<Rational> coords);
    /// Reduction of an arbitrary polynomial in zeta modulo Phi_m.
    static CycloElement from_polynomial(long m, const RatPolynomial& poly);
    static CycloElement rational(long m, const Rational& c);
    /// zeta^k for any integer k.
    static CycloElement zeta_power(long m, long k);
    /// sqrt(-1) in Q(zeta_m) for 4 | m, taken as zeta^(m/4).
    static CycloElement imaginary_unit(long m);

    long conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    /// Constant coordinate; meaningful when is_rational().
    const Rational& rational_part() const { return coords_.front(); }
    RatPolynomial as_polynomial() const;

    /// Value under zeta -> exp(2*pi*i*j/m), j a unit.
    Complex embed(long j, mpfr_prec_t bits) const;

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    CycloElement& operator*=(const CycloElement& o);
    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
    friend bool operator==(const CycloElement& a, const CycloElement& b)
    {
        return a.m_ == b.m_ && a.coords_ == b.coords_;
    }

private:
    void check_same_field(const CycloElement& o) const;
    long m_;
    std::vector<Rational> coords_;
};

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);
/// Multiplicative inverse via extended gcd with Phi_m. Throws InvalidArgument on zero.
CycloElement cyclo_inv(const CycloElement& e);
/// Image under zeta -> zeta^j, gcd(j, m) = 1.
CycloElement cyclo_conjugate(const CycloElement& e, long j);
/// Product of all phi(m) Galois conjugates.
Rational cyclo_norm(const CycloElement& e);
/// Res(Phi_m, coordinate polynomial of e); equals the norm since Phi_m is monic.
Rational cyclo_norm_by_resultant(const CycloElement& e);

/// Branch values s_k = -(1 - zeta^k)/2 + 1/(2(1 - zeta^k)) and their monic product polynomial.
struct BranchData {
    long m = 0;
    std::map<long, CycloElement> s_values;
    RatPolynomial branch_poly;
};

/// Throws Internal if the s_k fail to be pairwise distinct or one equals +-i.
BranchData branch_values(long m);

/// Absolute norms whose prime divisors can make two branch points of the quaternion
/// family meet mod p (conductor 2^(n-1)).
struct MeetingNorms {
    /// |N((1 - zeta^k)(1 - zeta) + 1)| for units k != 1.
    std::set<Integer> condition_a;
    /// |N(zeta^k (2 - zeta^e) +- 2i (1 - zeta^k))| for every unit k, both signs,
    /// and e in {1, k}.
    std::set<Integer> condition_b;

    std::set<Integer> all() const;
};

MeetingNorms branch_meeting_norms(long n);

}  // namespace galr
