#pragma once

#include <nlohmann/json.hpp>

#include "galr/cyclotomic.hpp"
#include "galr/groups.hpp"
#include "galr/progression.hpp"
#include "galr/realization.hpp"
#include "galr/verifier.hpp"

namespace galr {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Number when it fits in a signed 64-bit integer, decimal string otherwise.
Json to_json(const Integer& z);
Json to_json(const Valuation& v);
Json to_json(const RatPolynomial& f);
Json to_json(const CycloElement& e);
Json to_json(const GroupSpec& spec);
Json to_json(const BranchData& data);
Json to_json(const PrimePairReport& report);
Json to_json(const Certificate& c);
Json to_json(const Progression& prog);
Json to_json(const SpecializedRealization& r);
Json to_json(const VerificationReport& r);

Rational rational_from_json(const Json& j);
RatPolynomial poly_from_json(const Json& j);
GroupSpec group_spec_from_json(const Json& j);
/// Reads the fields written by to_json(SpecializedRealization); residual is parsed back.
SpecializedRealization realization_from_json(const Json& j);

}  // namespace galr
