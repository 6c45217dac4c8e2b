#include "galr/serialize.hpp"

#include "galr/error.hpp"

namespace galr {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

Json to_json(const Valuation& v)
{
    if (v.is_infinite()) return "inf";
    return v.value();
}

Json to_json(const RatPolynomial& f)
{
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_string(c));
    return out;
}

Json to_json(const CycloElement& e)
{
    Json coords = Json::array();
    for (const auto& c : e.coords()) coords.push_back(to_string(c));
    return Json{{"m", e.conductor()}, {"coords", coords}};
}

Json to_json(const GroupSpec& spec)
{
    Json out;
    out["family"] = std::string(to_string(spec.family()));
    if (spec.is_quaternion()) {
        out["m"] = nullptr;
        out["d"] = nullptr;
    } else {
        out["m"] = spec.cyclic_order();
        out["d"] = spec.action();
    }
    if (spec.n())
        out["n"] = *spec.n();
    else
        out["n"] = nullptr;
    return out;
}

Json to_json(const BranchData& data)
{
    Json s = Json::object();
    for (const auto& [k, v] : data.s_values) s[std::to_string(k)] = to_json(v);
    return Json{{"m", data.m}, {"poly", to_json(data.branch_poly)}, {"s_values", s}};
}

Json to_json(const PrimePairReport& report)
{
    return Json{{"good", report.good},
                {"route_p", std::string(to_string(report.route_p))},
                {"route_q", std::string(to_string(report.route_q))},
                {"reasons", report.reasons}};
}

Json to_json(const Certificate& c)
{
    Json norms = Json::array();
    for (const auto& n : c.norms_checked) norms.push_back(to_json(n));
    return Json{{"root_mod_p", to_json(c.root_mod_p)},
                {"v_p_of_m_t0", to_json(c.v_p_of_m_t0)},
                {"root_mod_q", to_json(c.root_mod_q)},
                {"v_q_of_t0sq_plus_1", to_json(c.v_q_of_t0sq_plus_1)},
                {"ssssoi_norms_checked", norms},
                {"used_7power_shortcut", c.used_7power_shortcut}};
}

Json to_json(const Progression& prog)
{
    return Json{{"n", prog.n},
                {"p", to_json(prog.p)},
                {"q", to_json(prog.q)},
                {"t0", to_json(prog.t0)},
                {"modulus", to_json(prog.modulus)},
                {"certificate", to_json(prog.certificate)}};
}

Json to_json(const SpecializedRealization& r)
{
    Json out = to_json(r.spec);
    out["t"] = to_string(r.t);
    out["poly"] = to_json(r.poly);
    out["residual"] = r.residual.is_zero() ? std::string("0") : r.residual.to_string(5);
    out["precision_bits"] = static_cast<long>(r.precision_bits);
    out["conjugates_distinct"] = r.conjugates_distinct;
    out["notes"] = r.notes;
    return out;
}

Json to_json(const VerificationReport& r)
{
    Json tallies = Json::object();
    for (const auto& [e, c] : r.tallies) tallies[std::to_string(e)] = c;
    Json freqs = Json::object();
    for (const auto& [e, f] : r.frequencies) freqs[std::to_string(e)] = f;
    Json expected = Json::object();
    for (const auto& [e, f] : r.expected) expected[std::to_string(e)] = to_string(f);

    Json out;
    out["poly"] = to_json(r.poly);
    out["spec"] = to_json(r.spec);
    out["primes_sampled"] = r.primes_sampled;
    out["skipped_ramified"] = r.skipped_ramified;
    out["largest_prime"] = r.largest_prime;
    out["tallies"] = tallies;
    out["frequencies"] = freqs;
    out["expected"] = expected;
    out["max_abs_deviation"] = r.max_abs_deviation;
    out["tolerance"] = r.tolerance;
    out["uniformity_violations"] = r.uniformity_violations;
    out["forbidden_pattern_hits"] = r.forbidden_pattern_hits;
    if (r.best_alternative)
        out["best_alternative"] = *r.best_alternative;
    else
        out["best_alternative"] = nullptr;
    out["verdict"] = std::string(to_string(r.verdict));
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    fail(ErrorKind::InvalidArgument, "expected a rational as \"num/den\" or an integer, got " + j.dump());
}

RatPolynomial poly_from_json(const Json& j)
{
    require(j.is_array(), "polynomial must be a JSON array of coefficients, ascending degree");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return RatPolynomial(std::move(c));
}

GroupSpec group_spec_from_json(const Json& j)
{
    require(j.is_object() && j.contains("family"), "group spec needs a family");
    auto field = [&](const char* key) -> std::optional<long> {
        if (!j.contains(key) || j[key].is_null()) return std::nullopt;
        return j[key].get<long>();
    };
    const Family family = parse_family(j["family"].get<std::string>());
    // The quaternion m is derived; d is not a free parameter there.
    return GroupSpec::from_fields(family, field("m"), family == Family::Quaternion ? std::nullopt : field("d"),
                                  field("n"));
}

SpecializedRealization realization_from_json(const Json& j)
{
    require(j.is_object(), "realization must be a JSON object");
    const GroupSpec spec = group_spec_from_json(j);
    const auto bits = static_cast<mpfr_prec_t>(j.value("precision_bits", 256L));
    Real residual(bits);
    const std::string text = j.value("residual", std::string("0"));
    if (mpfr_set_str(residual.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
        fail(ErrorKind::InvalidArgument, "unreadable residual '" + text + "'");
    std::vector<std::string> notes;
    if (j.contains("notes")) notes = j["notes"].get<std::vector<std::string>>();
    require(j.contains("poly"), "realization needs a poly field");
    return {spec,
            rational_from_json(j.value("t", Json("0/1"))),
            poly_from_json(j["poly"]),
            residual,
            bits,
            j.value("conjugates_distinct", true),
            notes};
}

}  // namespace galr
