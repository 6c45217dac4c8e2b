#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galr/rational.hpp"

namespace galr {

enum class Family { SemidirectC2, Dihedral, QuasiDihedral, Modular, Quaternion };

std::string_view to_string(Family f);
/// Accepts the CLI spellings: semidirect, dihedral, quasidihedral, modular, quaternion.
Family parse_family(std::string_view name);

/// Target group. Semidirect families Z/m x| Z/2 are given by (m, d) with the
/// generator of Z/2 acting as multiplication by d; the generalized quaternion group
/// of order 2^n by n.
class GroupSpec {
public:
    static GroupSpec semidirect(long m, long d);
    static GroupSpec dihedral(long m);
    static GroupSpec quasi_dihedral(long n);
    static GroupSpec modular(long n);
    static GroupSpec quaternion(long n);
    /// Validating constructor from optional fields (as parsed from JSON or the CLI).
    static GroupSpec from_fields(Family family, std::optional<long> m, std::optional<long> d, std::optional<long> n);

    Family family() const { return family_; }
    bool is_quaternion() const { return family_ == Family::Quaternion; }
    /// Cyclic-part size: m for semidirect families, 2^(n-1) for quaternion.
    long cyclic_order() const { return m_; }
    /// Action exponent d in [0, m) (semidirect) or m - 1 (quaternion's dihedral layer).
    long action() const { return d_; }
    std::optional<long> n() const { return n_; }
    long order() const { return 2 * m_; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    GroupSpec(Family f, long m, long d, std::optional<long> n) : family_(f), m_(m), d_(d), n_(n) {}
    Family family_;
    long m_;
    long d_;
    std::optional<long> n_;
};

/// Element order -> number of elements of that order.
struct OrderDistribution {
    std::map<long, long> counts;
    long group_order = 0;

    long exponent() const;
    friend bool operator==(const OrderDistribution&, const OrderDistribution&) = default;
};

/// Enumerates the group with its defining multiplication and tallies element orders.
OrderDistribution element_orders(const GroupSpec& spec);
/// Orders in a direct product of cyclic groups Z/c1 x Z/c2 x ...
OrderDistribution abelian_orders(const std::vector<long>& cyclic_factors);

/// Frobenius degree e -> Chebotarev density #{g : ord g = e} / |G|.
std::map<long, Rational> expected_pattern_distribution(const GroupSpec& spec);
std::map<long, Rational> pattern_distribution(const OrderDistribution& orders);

/// Labels of the conjugates produced by the realization formulas.
struct ConjugateLabel {
    /// epsilon in {0,1} (semidirect) or a in [1,4] (quaternion).
    long sign_index;
    /// delta in [1, m] (semidirect) or [0, 2^(n-2) - 1] (quaternion).
    long shift;
};
std::vector<ConjugateLabel> conjugate_index_set(const GroupSpec& spec);

/// Group elements in normal form: Lambda^a Sigma^b for quaternion, r^a s^b otherwise.
struct GroupElement {
    long a;
    int b;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};
GroupElement multiply(const GroupSpec& spec, GroupElement x, GroupElement y);
long element_order(const GroupSpec& spec, GroupElement x);

/// Conjugacy class sizes by brute-force conjugation, sorted ascending.
std::vector<long> conjugacy_class_sizes(const GroupSpec& spec);

}  // namespace galr
