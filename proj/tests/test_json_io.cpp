#include "slope_lab/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace slope_lab;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParamRange;
}

const char* kSpecs[] = {
    R"({"kind":"pn","E":{"rank":3,"degree":"5/2","mu_minus":0}})",
    R"({"kind":"veronese","E":{"rank":3,"degree":2}})",
    R"({"kind":"quadric","E":{"rank":4,"degree":3,"mu_minus":"1/2"},"degA":"-1/3"})",
    R"({"kind":"quadric_low_rank","n":3,"r":4,"dd":2})",
    R"({"kind":"scroll","E":{"rank":2,"degree":2,"mu_minus":1},"d":[3,1],"a":["1/2",0]})",
    R"({"kind":"wps","a":[1,1,8,12],"d":24,"e":2,"h":1,"l":1})",
    R"({"kind":"wps","a":[1,2,4],"d":8,"e":1,"h":1,"l":1,"require_well_formed":false})",
    R"({"kind":"double_cover","base":{"kind":"pn","E":{"rank":3,"degree":1,"mu_minus":0}},"m":4})",
    R"({"kind":"double_cover","base":{"kind":"scroll","E":{"rank":2,"degree":2,"mu_minus":1},"d":[3,1],"a":[1,0]},"alpha":2,"beta":1})",
};

}  // namespace

TEST_CASE("numbers") {
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(Json(-7)) == -7);
  CHECK(rational_to_json(Rational(-6, 4)) == Json("-3/2"));
  CHECK(rational_to_json(Rational(4)) == Json("4"));
  CHECK(integer_to_json(Integer(12)) == Json(12));
  const Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big) == Json("123456789012345678901234567890"));
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json(Json(1.5)); }) == ErrorCode::ParseError);
  CHECK(code_of([] { integer_from_json(Json("x")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_json_text("{\"a\":"); }) == ErrorCode::ParseError);
}

TEST_CASE("profiles and models") {
  const auto p = validate_profile({{1, Rational(5)}, {3, Rational(1, 2)}, {4, Rational(-1)}});
  const auto back = profile_from_json(profile_to_json(p));
  CHECK(back.length() == 3);
  CHECK(back.slope(2) == Rational(1, 2));
  CHECK(back.rank(3) == 4);
  CHECK(code_of([] { profile_from_json(parse_json_text(R"({"steps":[{"rank":2,"slope":1},{"rank":1,"slope":0}]})")); }) ==
        ErrorCode::NotStrictlyIncreasingRanks);
  CHECK(code_of([] { profile_from_json(parse_json_text(R"({"steps":[]})")); }) == ErrorCode::EmptyProfile);

  std::map<ClassMultiset, Rational> table;
  for (const auto& idx : IntersectionModel::all_multisets(2, 3)) table[idx] = frac(idx[0] * idx[1], 3);
  const IntersectionModel m(2, 3, table);
  const auto m2 = model_from_json(model_to_json(m));
  CHECK(m2.n() == 2);
  CHECK(m2.classes() == 3);
  CHECK(m2.table() == m.table());
  Json missing = model_to_json(m);
  missing["table"].erase(missing["table"].begin());
  CHECK(code_of([&] { model_from_json(missing); }) == ErrorCode::InvalidModel);
  Json twice = model_to_json(m);
  twice["table"].push_back(twice["table"][0]);
  CHECK(code_of([&] { model_from_json(twice); }) == ErrorCode::InvalidModel);
}

TEST_CASE("family records round-trip through invariants") {
  for (const char* text : kSpecs) {
    CAPTURE(text);
    const Json spec = parse_json_text(text);
    const auto rec = family_from_json(spec);
    const Json out = record_to_json(rec, spec);
    CHECK(out["family"] == spec);
    const FamilyInvariants inv = invariants_from_json(out);
    CHECK(invariants_to_json(inv).dump() == out["invariants"].dump());
    CHECK(inv.top_self == rec.inv.top_self);
    CHECK(inv.push_deg == rec.inv.push_deg);
    CHECK(inv.h0 == rec.inv.h0);
    CHECK(inv.flags.gen_finite_at_q == rec.inv.flags.gen_finite_at_q);
    CHECK(out["slope"] == rational_to_json(slope(rec.inv)));
    // The JSON text itself round-trips.
    CHECK(parse_json_text(out.dump()) == out);
  }
  const Json xiao = record_to_json(family_from_json(parse_json_text(kSpecs[5])), parse_json_text(kSpecs[5]));
  CHECK(xiao["slope"] == "37/36");
  CHECK(xiao["invariants"]["flags"]["gen_finite_at_q"] == 4);
}

TEST_CASE("family spec errors") {
  CHECK(code_of([] { family_from_json(parse_json_text(R"({"kind":"cone"})")); }) == ErrorCode::UnknownIdentifier);
  CHECK(code_of([] { family_from_json(parse_json_text(R"({"kind":"pn"})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { family_from_json(parse_json_text(R"({"kind":"pn","E":{"rank":2,"degree":1,"mu_minus":-1}})")); }) ==
        ErrorCode::NotNef);
  CHECK(code_of([] { family_from_json(parse_json_text(R"({"kind":"wps","a":[1,2,4],"d":8,"e":1,"h":1,"l":1})")); }) ==
        ErrorCode::NotWellFormed);
  CHECK(code_of([] { invariants_from_json(parse_json_text(
                         R"({"n":1,"top_self":1,"push_deg":1,"h0":2,"fiber_top":1,"flags":{"nef":true}})")); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("random invariants round-trip") {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    FamilyInvariants inv;
    inv.n = 1 + static_cast<long>(rng() % 5);
    inv.top_self = Rational(static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 50));
    inv.top_self.canonicalize();
    inv.push_deg = Rational(static_cast<long>(rng() % 100) - 20, 1 + static_cast<long>(rng() % 7));
    inv.push_deg.canonicalize();
    inv.h0 = static_cast<long>(rng() % 30);
    inv.fiber_top = Rational(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
    inv.fiber_top.canonicalize();
    inv.flags.birational = rng() % 2;
    inv.flags.curve_special = rng() % 2;
    if (rng() % 2) inv.flags.gen_finite_at_q = Integer(1 + static_cast<long>(rng() % 9));
    if (rng() % 2) inv.params.w = Rational(1, 1 + static_cast<long>(rng() % 9));
    const Json j = invariants_to_json(inv);
    const FamilyInvariants back = invariants_from_json(parse_json_text(j.dump()));
    CHECK(invariants_to_json(back) == j);
  }
}

TEST_CASE("fano data and reports") {
  FanoFamilyData d;
  d.n = 2;
  d.v = 9;
  d.delta = Rational(3, 2);
  d.C = 4;
  d.q = 2;
  d.antican_top = -5;
  d.push_deg_neg_q = 7;
  d.h0_fiber = 28;
  d.twist_integral = true;
  const auto back = fano_from_json(fano_to_json(d));
  CHECK(fano_to_json(back) == fano_to_json(d));
  CHECK(fano_hc_top(back) == fano_hc_top(d));

  const auto rec = family_from_json(parse_json_text(kSpecs[5]));
  const Json r = report_to_json(check_slope_inequality(TheoremId::XIAO_H1, rec.inv, HypothesisPolicy::report));
  CHECK(r["theorem"] == "XIAO_H1");
  CHECK(r["lhs"] == "37/12");
  CHECK(r["rhs"] == "4");
  CHECK(r["slack"] == "-11/12");
  CHECK(r["holds"] == false);
  CHECK(r["hypothesis_ok"] == false);
  const Json err = error_to_json(Error(ErrorCode::GapOne, "x"));
  CHECK(err["error"]["code"] == "GapOne");
}
