#include "slope_lab/cli.hpp"

#include "slope_lab/bound_lib.hpp"
#include "slope_lab/json_io.hpp"
#include "slope_lab/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace slope_lab {

namespace {

enum class OutputMode { json, table };

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return parts;
}

std::vector<long> long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& p : split_list(text)) out.push_back(to_long(parse_integer(p)));
  return out;
}

Json integer_list_json(const std::string& text) {
  Json out = Json::array();
  for (const auto& p : split_list(text)) out.push_back(integer_to_json(parse_integer(p)));
  return out;
}

Json rational_list_json(const std::string& text) {
  Json out = Json::array();
  for (const auto& p : split_list(text)) out.push_back(rational_to_json(parse_rational(p)));
  return out;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

/// Option values are kept as text and parsed exactly afterwards.
struct Args {
  std::string output;
  // family
  std::string rank, degree, mu_minus, degA, n, r, dd, d_list, a_list, d, e, h, l, base, m, alpha, beta, input;
  bool allow_not_well_formed = false;
  // check
  std::string theorem, policy = "report";
  // bound
  std::string N, p, k, h0, h0_M, h0_L, gap, b, seq;
  bool kodaira = false;
  // hn
  std::string profile, model, strategy = "best", seq_s, seq_m, extra = "pullback_L";
  // wps
  std::string weights, index;
  bool oracle = false;
  // cone / fano
  std::string part, w, q, v, which, variant;
  bool leading = false;
  // report
  std::string format = "md";
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  int emit(const Json& j, const std::string& table, OutputMode mode, int code = kExitOk) {
    if (mode == OutputMode::json) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << table;
      if (!table.empty() && table.back() != '\n') out_ << '\n';
    }
    return code;
  }

  int emit_value(const std::string& key, const std::string& value, OutputMode mode) {
    return emit(Json{{key, value}}, value, mode);
  }

  int emit_report(const CheckReport& r, OutputMode mode) {
    std::ostringstream t;
    t << r.theorem_id << ": " << (r.holds ? "holds" : "fails") << "\n";
    t << "  lhs   " << to_string(r.lhs) << "\n  rhs   " << to_string(r.rhs) << "\n  slack " << to_string(r.slack) << "\n";
    if (r.coefficient) t << "  coefficient " << to_string(*r.coefficient) << "\n";
    if (r.ratio) t << "  slope " << to_string(*r.ratio) << "\n";
    t << "  hypothesis_ok " << (r.hypothesis_ok ? "true" : "false") << "\n";
    for (const auto& note : r.notes) t << "  note: " << note << "\n";
    return emit(report_to_json(r), t.str(), mode, r.holds ? kExitOk : kExitFails);
  }

  int emit_record(const FamilyRecord& rec, const Json& spec, OutputMode mode) {
    Json j = record_to_json(rec, spec);
    std::ostringstream t;
    t << "kind " << rec.kind << "\n";
    for (const char* key : {"n", "top_self", "push_deg", "h0", "fiber_top"}) {
      t << "  " << key << " " << j["invariants"][key].dump() << "\n";
    }
    t << "  slope " << j["slope"].dump() << "\n  bs " << j["bs"].dump() << "\n";
    for (const auto& [key, value] : rec.attributes) t << "  " << key << " " << value << "\n";
    for (const auto& note : rec.notes) t << "  note: " << note << "\n";
    return emit(j, t.str(), mode);
  }

  Json load(const std::string& path) { return parse_json_text(read_source(path, in_)); }

 private:
  std::istream& in_;
  std::ostream& out_;
};

Rational rat(const std::string& text, const char* name) {
  if (text.empty()) throw Error(ErrorCode::ParseError, std::string("missing --") + name);
  return parse_rational(text);
}

Integer integer(const std::string& text, const char* name) {
  if (text.empty()) throw Error(ErrorCode::ParseError, std::string("missing --") + name);
  return parse_integer(text);
}

Json bundle_spec(const Args& a) {
  Json E = {{"rank", integer_to_json(integer(a.rank, "rank"))}, {"degree", rational_to_json(rat(a.degree, "degree"))}};
  if (!a.mu_minus.empty()) E["mu_minus"] = rational_to_json(parse_rational(a.mu_minus));
  return E;
}

Json family_spec(const std::string& kind, const Args& a, Runner& runner) {
  if (kind == "pn" || kind == "veronese") return {{"kind", kind}, {"E", bundle_spec(a)}};
  if (kind == "quadric") return {{"kind", kind}, {"E", bundle_spec(a)}, {"degA", rational_to_json(rat(a.degA, "degA"))}};
  if (kind == "quadric-low-rank") {
    return {{"kind", "quadric_low_rank"},
            {"n", integer_to_json(integer(a.n, "n"))},
            {"r", integer_to_json(integer(a.r, "r"))},
            {"dd", integer_to_json(integer(a.dd, "dd"))}};
  }
  if (kind == "scroll") {
    Json E = {{"rank", 2}, {"degree", rational_to_json(rat(a.degree, "degree"))}};
    if (!a.mu_minus.empty()) E["mu_minus"] = rational_to_json(parse_rational(a.mu_minus));
    if (a.d_list.empty() || a.a_list.empty()) throw Error(ErrorCode::ParseError, "scroll needs --d and --a lists");
    return {{"kind", kind}, {"E", E}, {"d", integer_list_json(a.d_list)}, {"a", rational_list_json(a.a_list)}};
  }
  if (kind == "wps") {
    if (a.a_list.empty()) throw Error(ErrorCode::ParseError, "missing --a");
    Json spec = {{"kind", kind},
                 {"a", integer_list_json(a.a_list)},
                 {"d", integer_to_json(integer(a.d, "d"))},
                 {"e", integer_to_json(integer(a.e, "e"))},
                 {"h", integer_to_json(integer(a.h, "h"))},
                 {"l", integer_to_json(integer(a.l, "l"))}};
    if (a.allow_not_well_formed) spec["require_well_formed"] = false;
    return spec;
  }
  if (kind == "double-cover") {
    Json base = runner.load(a.base);
    if (base.is_object() && base.contains("family")) base = base.at("family");
    Json spec = {{"kind", "double_cover"}, {"base", base}};
    if (!a.m.empty()) spec["m"] = integer_to_json(parse_integer(a.m));
    if (!a.alpha.empty()) spec["alpha"] = integer_to_json(parse_integer(a.alpha));
    if (!a.beta.empty()) spec["beta"] = integer_to_json(parse_integer(a.beta));
    return spec;
  }
  // kind == "spec": the construction is read verbatim.
  Json spec = runner.load(a.input);
  if (spec.is_object() && spec.contains("family")) spec = spec.at("family");
  return spec;
}

CheckReport run_check(const std::string& theorem, const FamilyInvariants& inv, HypothesisPolicy policy) {
  if (theorem == "F_POSITIVE") return check_f_positive(inv);
  return check_slope_inequality(parse_theorem_id(theorem), inv, policy);
}

ExtraVariant parse_extra(const std::string& text) {
  if (text == "reuse_last") return ExtraVariant::reuse_last;
  if (text == "pullback_L") return ExtraVariant::pullback_L;
  if (text == "m_ell") return ExtraVariant::m_ell;
  throw Error(ErrorCode::UnknownIdentifier, "unknown extra class choice '" + text + "'");
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int run_bound(const std::string& kind, const Args& a, Runner& runner, OutputMode mode) {
  auto value = [&](const Integer& v) { return runner.emit(Json{{"bound", kind}, {"value", integer_to_json(v)}}, v.get_str(), mode); };
  if (kind == "castelnuovo") {
    const Integer dv = integer(a.d, "d");
    const Integer Nv = integer(a.N, "N");
    const CastelnuovoData data = castelnuovo_data(dv, Nv);
    const Integer g = castelnuovo_genus_bound(dv, Nv);
    Json j = {{"bound", kind}, {"value", integer_to_json(g)}, {"A", integer_to_json(data.A)}, {"eps", integer_to_json(data.eps)}};
    return runner.emit(j, g.get_str() + "  (A = " + data.A.get_str() + ", eps = " + data.eps.get_str() + ")", mode);
  }
  if (kind == "min-degree") return value(min_degree_birational_subcanonical(integer(a.h0, "h0"), integer(a.p, "p")));
  if (kind == "harris") return value(harris_bound(integer(a.n, "n"), integer(a.p, "p"), integer(a.h0, "h0")));
  if (kind == "noether-I") return value(noether_I_bound(integer(a.k, "k"), integer(a.h0, "h0")));
  if (kind == "noether-Ibis") return value(noether_Ibis_bound(integer(a.k, "k"), integer(a.h0, "h0")));
  if (kind == "noether-II") return value(noether_II_bound(integer(a.h0_M, "h0-M"), a.kodaira));
  if (kind == "noether-III") {
    NoetherGap gap = NoetherGap::ge2;
    if (a.gap == "eq0") gap = NoetherGap::eq0;
    else if (a.gap == "one") gap = NoetherGap::one;
    else if (a.gap != "ge2") throw Error(ErrorCode::UnknownIdentifier, "unknown gap case '" + a.gap + "'");
    return value(noether_III_bound(integer(a.h0_M, "h0-M"), integer(a.h0_L, "h0-L"), integer(a.n, "n"), gap));
  }
  if (kind == "castelnuovo2") {
    return value(castelnuovo2_bound(integer(a.n, "n"), integer(a.p, "p"), integer(a.k, "k"), integer(a.h0_M, "h0-M")));
  }
  if (kind == "castelnuovo3") return value(castelnuovo3_bound(integer(a.n, "n"), integer(a.p, "p"), integer(a.h0_M, "h0-M")));
  if (kind == "clifford") return value(clifford_bound(integer(a.h0, "h0")));
  if (kind == "log-concave") {
    std::vector<Integer> seq;
    if (a.seq.empty()) throw Error(ErrorCode::ParseError, "missing --seq");
    for (const auto& part : split_list(a.seq)) seq.push_back(parse_integer(part));
    return runner.emit_report(check_log_concave_lemma(seq), mode);
  }
  if (kind == "existence") {
    const Rational c = existence_constant(to_long(integer(a.n, "n")), rat(a.b, "b"));
    return runner.emit(Json{{"bound", kind}, {"value", rational_to_json(c)}}, to_string(c), mode);
  }
  if (kind == "miyaoka") {
    const bool nef = miyaoka_nef_check(rat(a.mu_minus, "mu-minus"), integer(a.d, "d"), rat(a.degA, "degA"));
    return runner.emit(Json{{"bound", kind}, {"nef", nef}}, nef ? "true" : "false", mode);
  }
  if (kind == "rineqbs") {
    const auto [first, second] = rineqbs_lower_bounds(invariants_from_json(runner.load(a.input)));
    Json j = {{"bound", kind}, {"first", rational_to_json(first)}, {"second", rational_to_json(second)}};
    return runner.emit(j, to_string(first) + " " + to_string(second), mode);
  }
  throw Error(ErrorCode::UnknownIdentifier, "unknown bound kind '" + kind + "'");
}

int run_hn(const Args& a, Runner& runner, OutputMode mode) {
  const HNProfile profile = profile_from_json(runner.load(a.profile));
  const IntersectionModel model = model_from_json(runner.load(a.model));
  const ExtraClassChoice extra = make_extra(parse_extra(a.extra), profile);
  Json j = {{"strategy", a.strategy}, {"push_deg", rational_to_json(pushforward_degree(profile))}};
  Rational value;
  std::string table;
  if (a.strategy == "general") {
    if (a.seq_s.empty() || a.seq_m.empty()) throw Error(ErrorCode::InvalidSequence, "general strategy needs --seq-s and --seq-m");
    value = xiao_bound_general(profile, model, extra, long_list(a.seq_s), long_list(a.seq_m));
  } else if (a.strategy == "1A") {
    value = xiao_bound_1A(profile, model, extra);
  } else if (a.strategy == "1B") {
    value = xiao_bound_1B(profile, model, extra);
  } else if (a.strategy == "2") {
    if (a.seq_s.empty()) throw Error(ErrorCode::InvalidSequence, "strategy 2 needs --seq-s");
    value = xiao_bound_2(profile, model, extra, long_list(a.seq_s));
  } else if (a.strategy == "best") {
    const BestBound best = best_xiao_bound(profile, model, extra, search_cap_from_env());
    value = best.value;
    j["seq_s"] = best.seq_s;
    j["seq_m"] = best.seq_m;
    j["exhaustive"] = best.exhaustive;
    j["candidates"] = best.candidates;
    table = "\n  seq_s " + join(best.seq_s) + "\n  seq_m " + join(best.seq_m) +
            (best.exhaustive ? "\n  exhaustive" : "\n  capped: closed forms only");
  } else {
    throw Error(ErrorCode::UnknownIdentifier, "unknown strategy '" + a.strategy + "'");
  }
  j["value"] = rational_to_json(value);
  return runner.emit(j, to_string(value) + table, mode);
}

int run_wps(const std::string& which, const Args& a, Runner& runner, OutputMode mode) {
  if (a.weights.empty()) throw Error(ErrorCode::ParseError, "missing --weights");
  std::vector<Integer> w;
  for (const auto& part : split_list(a.weights)) w.push_back(parse_integer(part));
  const WeightVector weights(std::move(w));
  if (which == "dim") {
    const Integer mv = integer(a.m, "m");
    const Integer value = a.oracle ? graded_dim_oracle(weights, to_long(mv)) : graded_dim(weights, mv);
    return runner.emit(Json{{"dim", integer_to_json(value)}}, value.get_str(), mode);
  }
  if (which == "cartier") {
    const Integer value = cartier_index(weights);
    return runner.emit(Json{{"cartier_index", integer_to_json(value)}}, value.get_str(), mode);
  }
  if (which == "wellformed") {
    const bool value = is_well_formed(weights);
    return runner.emit(Json{{"well_formed", value}}, value ? "true" : "false", mode);
  }
  if (which == "top") return runner.emit_value("top_self", to_string(taut_top_self_intersection(weights)), mode);
  // cohomology
  const Integer value = wps_cohomology_dim(weights, integer(a.m, "m"), to_long(integer(a.index, "i")));
  return runner.emit(Json{{"h", integer_to_json(value)}}, value.get_str(), mode);
}

int run_cone(const std::string& which, const Args& a, Runner& runner, OutputMode mode) {
  const long nv = to_long(integer(a.n, "n"));
  const Integer mv = integer(a.m, "m");
  if (which == "interval") {
    const long part = to_long(integer(a.part, "part"));
    const Rational wq = part == 1 ? rat(a.w, "w") : rat(a.q, "q");
    const RationalInterval iv = ample_interval(static_cast<int>(part), nv, mv, wq);
    Json j = {{"lower", rational_to_json(iv.lower)}, {"upper", rational_to_json(iv.upper)}, {"upper_open", iv.upper_open}};
    return runner.emit(j, iv.to_string(), mode);
  }
  if (which == "away") {
    const NefAwayCase c = parse_nef_away_case(a.which);
    const Rational vq = !a.v.empty() ? parse_rational(a.v) : rat(a.q, "v or --q");
    return runner.emit_value("coefficient", to_string(nef_away_coefficient(c, nv, vq, mv)), mode);
  }
  const Rational value = a.leading ? lambda_m_leading(nv, mv) : asymptotic_nef_threshold(nv, mv);
  return runner.emit_value(a.leading ? "lambda_m_leading" : "threshold", to_string(value), mode);
}

FanoVariant parse_variant(const std::string& text) {
  if (text == "i") return FanoVariant::i;
  if (text == "ii") return FanoVariant::ii;
  if (text == "iii") return FanoVariant::iii;
  throw Error(ErrorCode::UnknownIdentifier, "unknown Fano variant '" + text + "'");
}

Json usage_error_json(const std::string& message) { return {{"error", {{"code", "UsageError"}, {"message", message}}}}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact slope inequalities for fibrations over curves", "slope_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "print help");
  app.add_option("--output", a.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* family = app.add_subcommand("family", "invariants of an explicit family");
  family->require_subcommand(1);
  std::vector<CLI::App*> family_kinds;
  for (const char* kind : {"pn", "veronese", "quadric", "quadric-low-rank", "scroll", "wps", "double-cover", "spec"}) {
    family_kinds.push_back(family->add_subcommand(kind));
  }
  for (auto* k : {family_kinds[0], family_kinds[1], family_kinds[2]}) {
    k->add_option("--rank", a.rank)->required();
    k->add_option("--degree", a.degree)->required();
    k->add_option("--mu-minus", a.mu_minus, "defaults to degree/rank");
  }
  family_kinds[2]->add_option("--degA", a.degA)->required();
  family_kinds[3]->add_option("--n", a.n)->required();
  family_kinds[3]->add_option("--r", a.r)->required();
  family_kinds[3]->add_option("--dd", a.dd)->required();
  family_kinds[4]->add_option("--degree", a.degree)->required();
  family_kinds[4]->add_option("--mu-minus", a.mu_minus);
  family_kinds[4]->add_option("--d", a.d_list, "comma list d_1 >= ... >= d_n")->required();
  family_kinds[4]->add_option("--a", a.a_list, "comma list of deg A_i")->required();
  family_kinds[5]->add_option("--a", a.a_list, "weights")->required();
  family_kinds[5]->add_option("--d", a.d)->required();
  family_kinds[5]->add_option("--e", a.e)->required();
  family_kinds[5]->add_option("--h", a.h)->required();
  family_kinds[5]->add_option("--l", a.l)->required();
  family_kinds[5]->add_flag("--allow-not-well-formed", a.allow_not_well_formed);
  family_kinds[6]->add_option("--base", a.base, "base family JSON file, or - for stdin")->required();
  family_kinds[6]->add_option("--m", a.m);
  family_kinds[6]->add_option("--alpha", a.alpha);
  family_kinds[6]->add_option("--beta", a.beta);
  family_kinds[7]->add_option("--input", a.input, "family JSON file, or - for stdin");

  auto* check = app.add_subcommand("check", "evaluate a slope inequality on family invariants");
  check->add_option("--theorem", a.theorem)->required();
  check->add_option("--input", a.input, "invariants JSON file, or - for stdin");
  check->add_option("--policy", a.policy)->check(CLI::IsMember({"enforce", "report"}));

  auto* bound = app.add_subcommand("bound", "classical and auxiliary bounds");
  bound->require_subcommand(1);
  const std::vector<std::string> bound_kinds{"castelnuovo", "min-degree",   "harris",       "noether-I",
                                             "noether-Ibis", "noether-II", "noether-III",  "castelnuovo2",
                                             "castelnuovo3", "clifford",   "log-concave",  "existence",
                                             "miyaoka",      "rineqbs"};
  for (const auto& kind : bound_kinds) {
    auto* k = bound->add_subcommand(kind);
    k->add_option("--d", a.d);
    k->add_option("--N", a.N);
    k->add_option("--n", a.n);
    k->add_option("--p", a.p);
    k->add_option("--k", a.k);
    k->add_option("--h0", a.h0);
    k->add_option("--h0-M", a.h0_M);
    k->add_option("--h0-L", a.h0_L);
    k->add_option("--gap", a.gap, "ge2, eq0 or one");
    k->add_flag("--kodaira", a.kodaira, "K_F >= 0 and dim >= 2");
    k->add_option("--seq", a.seq);
    k->add_option("--b", a.b);
    k->add_option("--mu-minus", a.mu_minus);
    k->add_option("--degA", a.degA);
    k->add_option("--input", a.input);
  }

  auto* hn = app.add_subcommand("hn", "lower bounds from a Harder-Narasimhan profile");
  auto* hn_bound = hn->add_subcommand("bound");
  hn->require_subcommand(1);
  hn_bound->add_option("--profile", a.profile)->required();
  hn_bound->add_option("--model", a.model)->required();
  hn_bound->add_option("--strategy", a.strategy)->check(CLI::IsMember({"general", "1A", "1B", "2", "best"}));
  hn_bound->add_option("--seq-s", a.seq_s);
  hn_bound->add_option("--seq-m", a.seq_m);
  hn_bound->add_option("--extra", a.extra)->check(CLI::IsMember({"reuse_last", "pullback_L", "m_ell"}));

  auto* wps = app.add_subcommand("wps", "weighted projective space queries");
  wps->require_subcommand(1);
  for (const char* which : {"dim", "cartier", "wellformed", "cohomology", "top"}) {
    auto* k = wps->add_subcommand(which);
    k->add_option("--weights", a.weights)->required();
    if (std::string(which) == "dim" || std::string(which) == "cohomology") k->add_option("--m", a.m)->required();
    if (std::string(which) == "dim") k->add_flag("--oracle", a.oracle, "use the enumeration oracle");
    if (std::string(which) == "cohomology") k->add_option("--i", a.index)->required();
  }

  auto* cone = app.add_subcommand("cone", "ample and nef thresholds on the moduli space");
  cone->require_subcommand(1);
  for (const char* which : {"interval", "away", "asymptotic"}) {
    auto* k = cone->add_subcommand(which);
    k->add_option("--n", a.n)->required();
    k->add_option("--m", a.m)->required();
    if (std::string(which) == "interval") {
      k->add_option("--part", a.part)->required()->check(CLI::IsMember({"1", "2"}));
      k->add_option("--w", a.w);
      k->add_option("--q", a.q);
    } else if (std::string(which) == "away") {
      k->add_option("--case", a.which)->required();
      k->add_option("--v", a.v);
      k->add_option("--q", a.q);
    } else {
      k->add_flag("--leading", a.leading, "two leading terms of lambda_m instead");
    }
  }

  auto* fano = app.add_subcommand("fano", "Fano fibration slope inequalities");
  auto* fano_check = fano->add_subcommand("check");
  fano->require_subcommand(1);
  fano_check->add_option("--variant", a.variant)->required()->check(CLI::IsMember({"i", "ii", "iii"}));
  fano_check->add_option("--input", a.input, "Fano data JSON file, or - for stdin");

  auto* report = app.add_subcommand("report", "regenerate the example table");
  auto* report_examples = report->add_subcommand("examples");
  report->require_subcommand(1);
  report_examples->add_option("--format", a.format)->check(CLI::IsMember({"md", "csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.what()) << '\n';
      return kExitOk;
    }
    const bool json = std::find(args.begin(), args.end(), "json") != args.end();
    if (json) out << usage_error_json(e.what()).dump(2) << '\n';
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  OutputMode mode = family->parsed() ? OutputMode::json : OutputMode::table;
  if (!a.output.empty()) mode = a.output == "json" ? OutputMode::json : OutputMode::table;
  Runner runner(in, out);
  try {
    if (family->parsed()) {
      for (auto* k : family_kinds) {
        if (!k->parsed()) continue;
        const Json spec = family_spec(k->get_name(), a, runner);
        return runner.emit_record(family_from_json(spec), spec, mode);
      }
    }
    if (check->parsed()) {
      if (a.theorem != "F_POSITIVE") parse_theorem_id(a.theorem);
      const FamilyInvariants inv = invariants_from_json(runner.load(a.input));
      const auto policy = a.policy == "enforce" ? HypothesisPolicy::enforce : HypothesisPolicy::report;
      return runner.emit_report(run_check(a.theorem, inv, policy), mode);
    }
    if (bound->parsed()) {
      for (auto* k : bound->get_subcommands()) return run_bound(k->get_name(), a, runner, mode);
    }
    if (hn->parsed()) return run_hn(a, runner, mode);
    if (wps->parsed()) {
      for (auto* k : wps->get_subcommands()) return run_wps(k->get_name(), a, runner, mode);
    }
    if (cone->parsed()) {
      for (auto* k : cone->get_subcommands()) return run_cone(k->get_name(), a, runner, mode);
    }
    if (fano->parsed()) {
      return runner.emit_report(check_fano_slope(fano_from_json(runner.load(a.input)), parse_variant(a.variant)), mode);
    }
    if (report->parsed()) {
      const auto rows = example_rows();
      out << render_rows(rows, parse_report_format(a.format));
      const bool all = std::all_of(rows.begin(), rows.end(), [](const ExampleRow& r) { return r.match; });
      return all ? kExitOk : kExitFails;
    }
  } catch (const Error& e) {
    if (mode == OutputMode::json) out << error_to_json(e).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    const Error wrapped(ErrorCode::ParseError, e.what());
    if (mode == OutputMode::json) out << error_to_json(wrapped).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "no subcommand\n";
  return kExitError;
}

}  // namespace slope_lab
