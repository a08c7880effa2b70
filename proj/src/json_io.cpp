#include "slope_lab/json_io.hpp"

#include <algorithm>

namespace slope_lab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }

long long_from_json(const Json& j) { return to_long(integer_from_json(j)); }

bool bool_from_json(const Json& j) {
  if (!j.is_boolean()) bad("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

std::string string_from_json(const Json& j) {
  if (!j.is_string()) bad("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  bad("expected an exact rational (string \"p/q\" or integer), got " + j.dump());
}

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad("expected an integer, got " + j.dump());
}

Json weights_to_json(const WeightVector& a) {
  Json out = Json::array();
  for (const auto& w : a.weights()) out.push_back(integer_to_json(w));
  return out;
}

WeightVector weights_from_json(const Json& j) {
  if (!j.is_array()) bad("weights must be a JSON array");
  std::vector<Integer> w;
  for (const auto& x : j) w.push_back(integer_from_json(x));
  return WeightVector(std::move(w));
}

Json profile_to_json(const HNProfile& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps()) steps.push_back({{"rank", s.rank}, {"slope", rational_to_json(s.slope)}});
  return {{"steps", steps}};
}

HNProfile profile_from_json(const Json& j) {
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("'steps' must be an array");
  std::vector<HNStep> out;
  for (const auto& s : steps) out.push_back({long_from_json(field(s, "rank")), rational_from_json(field(s, "slope"))});
  return validate_profile(std::move(out));
}

Json model_to_json(const IntersectionModel& m) {
  Json table = Json::array();
  for (const auto& [idx, value] : m.table()) table.push_back({{"indices", idx}, {"value", rational_to_json(value)}});
  return {{"n", m.n()}, {"classes", m.classes()}, {"table", table}};
}

IntersectionModel model_from_json(const Json& j) {
  const int n = static_cast<int>(long_from_json(field(j, "n")));
  const int classes = static_cast<int>(long_from_json(field(j, "classes")));
  const Json& table = field(j, "table");
  if (!table.is_array()) bad("'table' must be an array");
  std::map<ClassMultiset, Rational> entries;
  for (const auto& row : table) {
    const Json& idx = field(row, "indices");
    if (!idx.is_array()) bad("'indices' must be an array");
    ClassMultiset key;
    for (const auto& i : idx) key.push_back(static_cast<int>(long_from_json(i)));
    std::sort(key.begin(), key.end());
    if (!entries.emplace(key, rational_from_json(field(row, "value"))).second) {
      throw Error(ErrorCode::InvalidModel, "duplicate multiset " + idx.dump());
    }
  }
  return IntersectionModel(n, classes, std::move(entries));
}

Json invariants_to_json(const FamilyInvariants& inv) {
  const auto& f = inv.flags;
  Json flags = {{"L_nef", f.L_nef},
                {"push_nef", f.push_nef},
                {"birational", f.birational},
                {"kodaira_nonneg", f.kodaira_nonneg},
                {"curve_special", f.curve_special},
                {"canonical_sings", f.canonical_sings}};
  if (f.gen_finite_at_q) flags["gen_finite_at_q"] = integer_to_json(*f.gen_finite_at_q);
  if (f.LF_cartier_gg_at_q) flags["LF_cartier_gg_at_q"] = integer_to_json(*f.LF_cartier_gg_at_q);
  Json out = {{"n", inv.n},
              {"top_self", rational_to_json(inv.top_self)},
              {"push_deg", rational_to_json(inv.push_deg)},
              {"h0", integer_to_json(inv.h0)},
              {"fiber_top", rational_to_json(inv.fiber_top)},
              {"flags", flags}};
  Json params = Json::object();
  if (inv.params.m) params["m"] = integer_to_json(*inv.params.m);
  if (inv.params.s) params["s"] = integer_to_json(*inv.params.s);
  if (inv.params.w) params["w"] = rational_to_json(*inv.params.w);
  if (!params.empty()) out["params"] = params;
  return out;
}

FamilyInvariants invariants_from_json(const Json& j) {
  if (has(j, "invariants")) return invariants_from_json(j.at("invariants"));
  FamilyInvariants inv;
  inv.n = long_from_json(field(j, "n"));
  inv.top_self = rational_from_json(field(j, "top_self"));
  inv.push_deg = rational_from_json(field(j, "push_deg"));
  inv.h0 = integer_from_json(field(j, "h0"));
  inv.fiber_top = rational_from_json(field(j, "fiber_top"));
  if (has(j, "flags")) {
    const Json& fl = j.at("flags");
    if (!fl.is_object()) bad("'flags' must be an object");
    static const char* known[] = {"L_nef", "push_nef", "birational", "kodaira_nonneg", "curve_special",
                                  "canonical_sings", "gen_finite_at_q", "LF_cartier_gg_at_q"};
    for (const auto& [key, value] : fl.items()) {
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) bad("unknown flag '" + key + "'");
      (void)value;
    }
    auto& f = inv.flags;
    if (has(fl, "L_nef")) f.L_nef = bool_from_json(fl.at("L_nef"));
    if (has(fl, "push_nef")) f.push_nef = bool_from_json(fl.at("push_nef"));
    if (has(fl, "birational")) f.birational = bool_from_json(fl.at("birational"));
    if (has(fl, "kodaira_nonneg")) f.kodaira_nonneg = bool_from_json(fl.at("kodaira_nonneg"));
    if (has(fl, "curve_special")) f.curve_special = bool_from_json(fl.at("curve_special"));
    if (has(fl, "canonical_sings")) f.canonical_sings = bool_from_json(fl.at("canonical_sings"));
    if (has(fl, "gen_finite_at_q")) f.gen_finite_at_q = integer_from_json(fl.at("gen_finite_at_q"));
    if (has(fl, "LF_cartier_gg_at_q")) f.LF_cartier_gg_at_q = integer_from_json(fl.at("LF_cartier_gg_at_q"));
  }
  if (has(j, "params")) {
    const Json& p = j.at("params");
    if (has(p, "m")) inv.params.m = integer_from_json(p.at("m"));
    if (has(p, "s")) inv.params.s = integer_from_json(p.at("s"));
    if (has(p, "w")) inv.params.w = rational_from_json(p.at("w"));
  }
  validate_invariants(inv);
  return inv;
}

Json report_to_json(const CheckReport& r) {
  Json out = {{"theorem", r.theorem_id},
              {"lhs", rational_to_json(r.lhs)},
              {"rhs", rational_to_json(r.rhs)},
              {"holds", r.holds},
              {"slack", rational_to_json(r.slack)},
              {"hypothesis_ok", r.hypothesis_ok}};
  if (r.coefficient) out["coefficient"] = rational_to_json(*r.coefficient);
  if (r.ratio) out["slope"] = rational_to_json(*r.ratio);
  out["notes"] = r.notes;
  return out;
}

Json bundle_to_json(const BundleOnCurve& E) {
  return {{"rank", E.rank}, {"degree", rational_to_json(E.degree)}, {"mu_minus", rational_to_json(E.mu_minus)}};
}

BundleOnCurve bundle_from_json(const Json& j) {
  BundleOnCurve E;
  E.rank = long_from_json(field(j, "rank"));
  E.degree = rational_from_json(field(j, "degree"));
  E.mu_minus = has(j, "mu_minus") ? rational_from_json(j.at("mu_minus")) : E.degree / Rational(E.rank > 0 ? E.rank : 1);
  validate_bundle(E);
  return E;
}

FamilyRecord family_from_json(const Json& spec) {
  const std::string kind = string_from_json(field(spec, "kind"));
  if (kind == "pn") return family_pn(bundle_from_json(field(spec, "E")));
  if (kind == "veronese") return family_veronese(bundle_from_json(field(spec, "E")));
  if (kind == "quadric") return family_quadric(bundle_from_json(field(spec, "E")), rational_from_json(field(spec, "degA")));
  if (kind == "quadric_low_rank") {
    return family_quadric_low_rank(long_from_json(field(spec, "n")), long_from_json(field(spec, "r")),
                                   integer_from_json(field(spec, "dd")));
  }
  if (kind == "scroll") {
    ScrollFamily s;
    s.E = bundle_from_json(field(spec, "E"));
    const Json& d = field(spec, "d");
    const Json& a = field(spec, "a");
    if (!d.is_array() || !a.is_array()) bad("scroll 'd' and 'a' must be arrays");
    for (const auto& x : d) s.d.push_back(long_from_json(x));
    for (const auto& x : a) s.a.push_back(rational_from_json(x));
    return family_scroll(s);
  }
  if (kind == "wps") {
    WpsHypersurfaceFamily fam;
    fam.a = weights_from_json(field(spec, "a"));
    fam.d = integer_from_json(field(spec, "d"));
    fam.e = integer_from_json(field(spec, "e"));
    fam.h = integer_from_json(field(spec, "h"));
    fam.l = integer_from_json(field(spec, "l"));
    WpsOptions options;
    if (has(spec, "require_well_formed")) options.require_well_formed = bool_from_json(spec.at("require_well_formed"));
    return wps_family(fam, options);
  }
  if (kind == "double_cover") {
    FamilyRecord base = family_from_json(field(spec, "base"));
    BranchParams branch;
    if (has(spec, "m")) branch.m = integer_from_json(spec.at("m"));
    if (has(spec, "alpha")) branch.alpha = integer_from_json(spec.at("alpha"));
    if (has(spec, "beta")) branch.beta = integer_from_json(spec.at("beta"));
    return family_double_cover(base, branch);
  }
  throw Error(ErrorCode::UnknownIdentifier, "unknown family kind '" + kind + "'");
}

Json record_to_json(const FamilyRecord& rec, const Json& spec) {
  Json out = {{"kind", rec.kind}};
  if (!rec.base_kind.empty()) out["base_kind"] = rec.base_kind;
  out["family"] = spec;
  out["invariants"] = invariants_to_json(rec.inv);
  out["slope"] = rec.inv.push_deg != 0 ? rational_to_json(slope(rec.inv)) : Json(nullptr);
  out["bs"] = rec.inv.h0 > 0 ? rational_to_json(bs_invariant(rec.inv)) : Json(nullptr);
  out["provenance"] = rec.provenance;
  out["attributes"] = rec.attributes;
  out["notes"] = rec.notes;
  return out;
}

Json fano_to_json(const FanoFamilyData& d) {
  return {{"n", d.n},
          {"v", rational_to_json(d.v)},
          {"delta", rational_to_json(d.delta)},
          {"C", rational_to_json(d.C)},
          {"q", integer_to_json(d.q)},
          {"antican_top", rational_to_json(d.antican_top)},
          {"push_deg_neg_q", rational_to_json(d.push_deg_neg_q)},
          {"h0_fiber", integer_to_json(d.h0_fiber)},
          {"k_semistable", d.k_semistable},
          {"twist_integral", d.twist_integral},
          {"gen_finite", d.gen_finite},
          {"globally_generated", d.globally_generated}};
}

FanoFamilyData fano_from_json(const Json& j) {
  FanoFamilyData d;
  d.n = long_from_json(field(j, "n"));
  d.v = rational_from_json(field(j, "v"));
  d.delta = rational_from_json(field(j, "delta"));
  d.C = rational_from_json(field(j, "C"));
  d.q = integer_from_json(field(j, "q"));
  d.antican_top = rational_from_json(field(j, "antican_top"));
  d.push_deg_neg_q = rational_from_json(field(j, "push_deg_neg_q"));
  d.h0_fiber = integer_from_json(field(j, "h0_fiber"));
  if (has(j, "k_semistable")) d.k_semistable = bool_from_json(j.at("k_semistable"));
  if (has(j, "twist_integral")) d.twist_integral = bool_from_json(j.at("twist_integral"));
  if (has(j, "gen_finite")) d.gen_finite = bool_from_json(j.at("gen_finite"));
  if (has(j, "globally_generated")) d.globally_generated = bool_from_json(j.at("globally_generated"));
  return d;
}

Json error_to_json(const Error& e) {
  return {{"error", {{"code", std::string(code_name(e.code()))}, {"message", e.what()}}}};
}

}  // namespace slope_lab
