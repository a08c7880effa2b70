#pragma once

#include "slope_lab/check_report.hpp"
#include "slope_lab/errors.hpp"
#include "slope_lab/families.hpp"
#include "slope_lab/hn_engine.hpp"
#include "slope_lab/slope_theorems.hpp"
#include "slope_lab/wps_ring.hpp"

#include <json.hpp>

#include <string>

namespace slope_lab {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed JSON text.
Json parse_json_text(const std::string& text);

/// Rationals are written as "p/q" strings; reading also accepts JSON integers.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);
/// Integers that fit a long are JSON numbers, larger ones are strings.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json weights_to_json(const WeightVector& a);
WeightVector weights_from_json(const Json& j);

Json profile_to_json(const HNProfile& p);
HNProfile profile_from_json(const Json& j);

Json model_to_json(const IntersectionModel& m);
IntersectionModel model_from_json(const Json& j);

Json invariants_to_json(const FamilyInvariants& inv);
/// Accepts bare invariants or any object with an "invariants" member.
FamilyInvariants invariants_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

Json bundle_to_json(const BundleOnCurve& E);
BundleOnCurve bundle_from_json(const Json& j);

/// Builds a family from {"kind": ..., ...}; kinds pn, veronese, quadric,
/// quadric_low_rank, scroll, wps, double_cover (with a nested "base").
FamilyRecord family_from_json(const Json& spec);
/// The record with its construction spec, invariants, slope, BS and provenance.
Json record_to_json(const FamilyRecord& rec, const Json& spec);

Json fano_to_json(const FanoFamilyData& data);
FanoFamilyData fano_from_json(const Json& j);

Json error_to_json(const Error& e);

}  // namespace slope_lab
