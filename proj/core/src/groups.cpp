#include "galr/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galr/cyclotomic.hpp"
#include "galr/error.hpp"

namespace galr {

std::string_view to_string(Family f)
{
    switch (f) {
        case Family::SemidirectC2: return "semidirect";
        case Family::Dihedral: return "dihedral";
        case Family::QuasiDihedral: return "quasidihedral";
        case Family::Modular: return "modular";
        case Family::Quaternion: return "quaternion";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::SemidirectC2, Family::Dihedral, Family::QuasiDihedral, Family::Modular,
                     Family::Quaternion}) {
        if (to_string(f) == name) return f;
    }
    fail(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

namespace {

void check_two_power_n(long n)
{
    require(n >= 3, "2-group families need n >= 3");
    require(n <= 20, "n too large");
}

}  // namespace

GroupSpec GroupSpec::semidirect(long m, long d)
{
    require(m >= 3, "semidirect product needs m >= 3");
    const long dd = mod_floor(d, m);
    require(std::gcd(dd, m) == 1, "action d must be a unit mod m");
    require(mod_floor(dd * dd, m) == 1, "action d must satisfy d^2 = 1 mod m");
    return GroupSpec(Family::SemidirectC2, m, dd, std::nullopt);
}

GroupSpec GroupSpec::dihedral(long m)
{
    require(m >= 3, "dihedral group needs m >= 3");
    return GroupSpec(Family::Dihedral, m, m - 1, std::nullopt);
}

GroupSpec GroupSpec::quasi_dihedral(long n)
{
    check_two_power_n(n);
    const long m = 1L << (n - 1);
    return GroupSpec(Family::QuasiDihedral, m, (1L << (n - 2)) - 1, n);
}

GroupSpec GroupSpec::modular(long n)
{
    check_two_power_n(n);
    const long m = 1L << (n - 1);
    return GroupSpec(Family::Modular, m, (1L << (n - 2)) + 1, n);
}

GroupSpec GroupSpec::quaternion(long n)
{
    check_two_power_n(n);
    const long m = 1L << (n - 1);
    return GroupSpec(Family::Quaternion, m, m - 1, n);
}

GroupSpec GroupSpec::from_fields(Family family, std::optional<long> m, std::optional<long> d, std::optional<long> n)
{
    auto n_from_m = [&]() -> long {
        if (n) return *n;
        require(m.has_value(), std::string(to_string(family)) + " needs n (or m = 2^(n-1))");
        require(*m >= 4 && (*m & (*m - 1)) == 0, "m must be a power of two >= 4");
        long k = 1;
        while ((1L << (k - 1)) < *m) ++k;
        return k;
    };
    GroupSpec spec = [&] {
        switch (family) {
            case Family::SemidirectC2:
                require(m.has_value() && d.has_value(), "semidirect needs m and d");
                return semidirect(*m, *d);
            case Family::Dihedral:
                require(m.has_value(), "dihedral needs m");
                return dihedral(*m);
            case Family::QuasiDihedral: return quasi_dihedral(n_from_m());
            case Family::Modular: return modular(n_from_m());
            case Family::Quaternion: return quaternion(n_from_m());
        }
        fail(ErrorKind::InvalidArgument, "unknown family");
    }();
    if (m) require(*m == spec.m_, "m inconsistent with the family");
    if (d) require(mod_floor(*d, spec.m_) == spec.d_, "d inconsistent with the family");
    if (n && spec.n_) require(*n == *spec.n_, "n inconsistent with the family");
    return spec;
}

long OrderDistribution::exponent() const
{
    long e = 1;
    for (const auto& [order, count] : counts) e = std::lcm(e, order);
    return e;
}

GroupElement multiply(const GroupSpec& spec, GroupElement x, GroupElement y)
{
    const long m = spec.cyclic_order();
    if (spec.is_quaternion()) {
        // Sigma Lambda Sigma^-1 = Lambda^-1 and Sigma^2 = Lambda^(m/2).
        long a = x.a + (x.b == 0 ? y.a : -y.a);
        int b = x.b + y.b;
        if (b == 2) {
            a += m / 2;
            b = 0;
        }
        return {mod_floor(a, m), b};
    }
    // s r s^-1 = r^d, so (a, e)(a', e') = (a + d^e a', e + e').
    const long twisted = x.b == 0 ? y.a : spec.action() * y.a;
    return {mod_floor(x.a + twisted, m), (x.b + y.b) % 2};
}

long element_order(const GroupSpec& spec, GroupElement x)
{
    const GroupElement id{0, 0};
    GroupElement acc = x;
    long k = 1;
    while (!(acc == id)) {
        acc = multiply(spec, acc, x);
        ++k;
        if (k > spec.order()) fail(ErrorKind::Internal, "element order exceeds group order");
    }
    return k;
}

OrderDistribution element_orders(const GroupSpec& spec)
{
    OrderDistribution out;
    out.group_order = spec.order();
    for (int b = 0; b < 2; ++b)
        for (long a = 0; a < spec.cyclic_order(); ++a) ++out.counts[element_order(spec, {a, b})];
    return out;
}

OrderDistribution abelian_orders(const std::vector<long>& cyclic_factors)
{
    OrderDistribution out;
    long total = 1;
    for (long c : cyclic_factors) {
        require(c >= 1, "cyclic factor must be positive");
        total *= c;
    }
    out.group_order = total;
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        long order = 1;
        for (long c : cyclic_factors) {
            const long coord = rest % c;
            rest /= c;
            order = std::lcm(order, c / std::gcd(coord, c));
        }
        ++out.counts[order];
    }
    return out;
}

std::map<long, Rational> pattern_distribution(const OrderDistribution& orders)
{
    std::map<long, Rational> out;
    for (const auto& [e, count] : orders.counts) out[e] = make_rational(count, orders.group_order);
    return out;
}

std::map<long, Rational> expected_pattern_distribution(const GroupSpec& spec)
{
    return pattern_distribution(element_orders(spec));
}

std::vector<ConjugateLabel> conjugate_index_set(const GroupSpec& spec)
{
    std::vector<ConjugateLabel> labels;
    if (spec.is_quaternion()) {
        const long half = spec.cyclic_order() / 2;
        for (long a = 1; a <= 4; ++a)
            for (long delta = 0; delta < half; ++delta) labels.push_back({a, delta});
    } else {
        for (long eps = 0; eps <= 1; ++eps)
            for (long delta = 1; delta <= spec.cyclic_order(); ++delta) labels.push_back({eps, delta});
    }
    return labels;
}

std::vector<long> conjugacy_class_sizes(const GroupSpec& spec)
{
    std::vector<GroupElement> elements;
    for (int b = 0; b < 2; ++b)
        for (long a = 0; a < spec.cyclic_order(); ++a) elements.push_back({a, b});
    auto inverse = [&](GroupElement g) {
        for (const auto& h : elements)
            if (multiply(spec, g, h) == GroupElement{0, 0}) return h;
        fail(ErrorKind::Internal, "element without inverse");
    };
    auto key = [&](GroupElement g) { return g.b * spec.cyclic_order() + g.a; };
    std::vector<bool> seen(elements.size(), false);
    std::vector<long> sizes;
    for (const auto& g : elements) {
        if (seen[static_cast<std::size_t>(key(g))]) continue;
        std::set<long> cls;
        for (const auto& h : elements) cls.insert(key(multiply(spec, multiply(spec, h, g), inverse(h))));
        for (long k : cls) seen[static_cast<std::size_t>(k)] = true;
        sizes.push_back(static_cast<long>(cls.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace galr
