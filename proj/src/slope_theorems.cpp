#include "slope_lab/slope_theorems.hpp"

#include "slope_lab/errors.hpp"

#include <array>

namespace slope_lab {

namespace {

Rational rat(long v) { return Rational(v); }

bool is_positive_witness(const std::optional<Integer>& q) { return q.has_value() && *q >= 1; }

}  // namespace

void validate_invariants(const FamilyInvariants& inv) {
  if (inv.n < 1) throw Error(ErrorCode::InvalidInvariants, "fiber dimension n must be >= 1");
  if (inv.h0 < 0) throw Error(ErrorCode::InvalidInvariants, "h0 must be nonnegative");
  if (inv.flags.L_nef && inv.fiber_top < 0) {
    throw Error(ErrorCode::InvalidInvariants, "L_F^n < 0 contradicts the L_nef flag");
  }
  for (const auto* q : {&inv.flags.gen_finite_at_q, &inv.flags.LF_cartier_gg_at_q}) {
    if (q->has_value() && **q < 1) throw Error(ErrorCode::InvalidInvariants, "witness multiples must be >= 1");
  }
  if (inv.params.m && *inv.params.m < 1) throw Error(ErrorCode::InvalidInvariants, "m must be positive");
  if (inv.params.s && *inv.params.s < 0) throw Error(ErrorCode::InvalidInvariants, "s must be nonnegative");
  if (inv.params.w && *inv.params.w <= 0) throw Error(ErrorCode::InvalidInvariants, "w must be positive");
}

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 10> kTheoremNames{{
    {TheoremId::XIAO_H1, "XIAO_H1"},
    {TheoremId::XIAO_H2, "XIAO_H2"},
    {TheoremId::XIAO_BIR1, "XIAO_BIR1"},
    {TheoremId::XIAO_BIR2, "XIAO_BIR2"},
    {TheoremId::BARJA_1, "BARJA_1"},
    {TheoremId::BARJA_2, "BARJA_2"},
    {TheoremId::KSB_1, "KSB_1"},
    {TheoremId::KSB_2, "KSB_2"},
    {TheoremId::KSB_3, "KSB_3"},
    {TheoremId::KSB_4, "KSB_4"},
}};

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& [key, label] : kTheoremNames) {
    if (label == name) return key;
  }
  throw Error(ErrorCode::UnknownIdentifier, "unknown theorem id '" + std::string(name) + "'");
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& entry : kTheoremNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

Rational bs_invariant(const FamilyInvariants& inv) {
  if (inv.h0 == 0) throw Error(ErrorCode::NoSections, "h0 = 0, BS invariant undefined");
  return rat(inv.n + 1) * inv.fiber_top / Rational(inv.h0);
}

Rational slope(const FamilyInvariants& inv) {
  if (inv.push_deg == 0) throw Error(ErrorCode::ZeroPushforwardDegree, "slope undefined for deg f_*O(L) = 0");
  return inv.top_self / inv.push_deg;
}

CheckReport check_f_positive(const FamilyInvariants& inv) {
  Rational bs = bs_invariant(inv);
  CheckReport report = make_report("F_POSITIVE", inv.top_self, bs * inv.push_deg);
  report.notes.push_back("BS = " + to_string(bs));
  return report;
}

namespace {

/// dim F >= 2 with kappa(F) >= 0, or dim F = 1 with L_F special.
bool doubled_regime(const FamilyInvariants& inv) {
  return (inv.n >= 2 && inv.flags.kodaira_nonneg) || (inv.n == 1 && inv.flags.curve_special);
}

}  // namespace

std::pair<Rational, Rational> rineqbs_lower_bounds(const FamilyInvariants& inv) {
  validate_invariants(inv);
  if (!inv.flags.L_nef) throw Error(ErrorCode::HypothesisNotMet, "rineqbs_lower_bounds needs L_nef");
  if (inv.flags.gen_finite_at_q != Integer(1)) {
    throw Error(ErrorCode::HypothesisNotMet, "rineqbs_lower_bounds needs gen_finite_at_q = 1");
  }
  const Rational bs = bs_invariant(inv);
  const Rational n(inv.n);
  const Rational t = inv.fiber_top;
  const Rational h0(inv.h0);
  const Rational factor = doubled_regime(inv) ? Rational(2) : Rational(1);
  const Rational first = factor * (n + 1) * t / (t + factor * n);
  const Rational second = factor * (n + 1) * (h0 - n) / h0;
  if (!(bs >= first && first >= second)) {
    throw Error(ErrorCode::HypothesisNotMet, "chain BS >= " + to_string(first) + " >= " + to_string(second) +
                                                 " violated (BS = " + to_string(bs) +
                                                 "); L_F^n is below the Noether-type bound");
  }
  return {first, second};
}

namespace {

/// Coefficient, lhs scale and the list of unmet boolean hypotheses.
struct Evaluation {
  Rational coefficient;
  Rational lhs_scale = 1;
  std::vector<std::string> missing;
  std::vector<std::string> notes;
};

[[noreturn]] void need_param(TheoremId id, const std::string& what) {
  throw Error(ErrorCode::HypothesisNotMet, std::string(theorem_name(id)) + " needs " + what);
}

void require_nef_pair(const FamilyInvariants& inv, Evaluation& ev) {
  if (!inv.flags.L_nef) ev.missing.push_back("L_nef");
  if (!inv.flags.push_nef) ev.missing.push_back("push_nef");
}

Rational positive_h0(TheoremId id, const FamilyInvariants& inv) {
  if (inv.h0 < 1) need_param(id, "h0 >= 1");
  return Rational(inv.h0);
}

/// Smallest available witness q, optionally restricted to multiples of m.
std::optional<Integer> best_witness(std::initializer_list<const std::optional<Integer>*> candidates,
                                    const Integer& divisor = 1) {
  std::optional<Integer> best;
  for (const auto* c : candidates) {
    if (!is_positive_witness(*c)) continue;
    if (**c % divisor != 0) continue;
    Integer q = **c / divisor;
    if (!best || q < *best) best = q;
  }
  return best;
}

Evaluation evaluate(TheoremId id, const FamilyInvariants& inv) {
  validate_invariants(inv);
  Evaluation ev;
  const Rational n(inv.n);
  const unsigned long nn = static_cast<unsigned long>(inv.n);
  const Rational t = inv.fiber_top;
  const auto& f = inv.flags;
  switch (id) {
    case TheoremId::XIAO_H1: {
      require_nef_pair(inv, ev);
      if (f.gen_finite_at_q != Integer(1)) ev.missing.push_back("gen_finite_at_q = 1 (phi_{L_F} generically finite)");
      const Rational h0 = positive_h0(id, inv);
      ev.coefficient = (doubled_regime(inv) ? 4 : 2) * (h0 - n) / h0;
      break;
    }
    case TheoremId::XIAO_H2: {
      require_nef_pair(inv, ev);
      if (f.LF_cartier_gg_at_q != Integer(1)) ev.missing.push_back("LF_cartier_gg_at_q = 1 (L_F Cartier, globally generated)");
      if (t <= 0) ev.missing.push_back("L_F big (L_F^n > 0)");
      if (t + n == 0) need_param(id, "L_F^n + n != 0");
      ev.coefficient = doubled_regime(inv) ? Rational(4 * t / (t + 2 * n)) : Rational(2 * t / (t + n));
      break;
    }
    case TheoremId::XIAO_BIR1:
    case TheoremId::XIAO_BIR2: {
      require_nef_pair(inv, ev);
      if (!f.birational) ev.missing.push_back("birational");
      if (!f.canonical_sings) ev.missing.push_back("canonical_sings");
      if (inv.n < 2) ev.missing.push_back("n >= 2");
      if (!inv.params.s) need_param(id, "parameter s (K_F - sL_F >= 0)");
      const Rational ns = n + Rational(*inv.params.s);
      if (id == TheoremId::XIAO_BIR1) {
        const Rational h0 = positive_h0(id, inv);
        ev.coefficient = 2 * ns * (h0 - n - 2) / h0;
      } else {
        if (f.LF_cartier_gg_at_q != Integer(1)) ev.missing.push_back("LF_cartier_gg_at_q = 1");
        const Rational denom = t + ns * (n + 2);
        if (denom == 0) need_param(id, "L_F^n + (n+s)(n+2) != 0");
        ev.coefficient = 2 * ns * t / denom;
      }
      break;
    }
    case TheoremId::BARJA_1: {
      require_nef_pair(inv, ev);
      // qL_F Cartier and big also witnesses the bound; globally generated is more than needed.
      std::optional<Integer> q = t > 0 ? best_witness({&f.gen_finite_at_q, &f.LF_cartier_gg_at_q})
                                       : best_witness({&f.gen_finite_at_q});
      if (!q) need_param(id, "a witness q (gen_finite_at_q, or LF_cartier_gg_at_q with L_F big)");
      ev.coefficient = Rational(1) / Rational(pow(*q, nn));
      ev.notes.push_back("q = " + q->get_str());
      break;
    }
    case TheoremId::BARJA_2: {
      require_nef_pair(inv, ev);
      if (!is_positive_witness(f.gen_finite_at_q)) need_param(id, "gen_finite_at_q");
      if (!doubled_regime(inv)) ev.missing.push_back(inv.n >= 2 ? "kodaira_nonneg" : "curve_special");
      ev.coefficient = Rational(2) / Rational(pow(*f.gen_finite_at_q, nn));
      ev.notes.push_back("q = " + f.gen_finite_at_q->get_str());
      break;
    }
    case TheoremId::KSB_1:
    case TheoremId::KSB_2: {
      if (!inv.params.m) need_param(id, "parameter m");
      const Integer& m = *inv.params.m;
      if (f.LF_cartier_gg_at_q != m) ev.missing.push_back("LF_cartier_gg_at_q = m (mL Cartier, globally generated)");
      const Rational mn(pow(m, nn));
      ev.lhs_scale = Rational(pow(m, nn + 1));
      if (id == TheoremId::KSB_1) {
        if (!inv.params.w) need_param(id, "parameter w (volume lower bound)");
        const Rational& w = *inv.params.w;
        ev.coefficient = 2 * w * mn / (w * mn + n);
      } else {
        ev.coefficient = 1;
      }
      ev.notes.push_back("push_deg read as deg f_*O(mL)");
      break;
    }
    case TheoremId::KSB_3: {
      if (!inv.params.m) need_param(id, "parameter m");
      const Integer& m = *inv.params.m;
      auto q = best_witness({&f.gen_finite_at_q, &f.LF_cartier_gg_at_q}, m);
      if (!q) need_param(id, "a witness that is a multiple mq of m");
      ev.lhs_scale = Rational(pow(m, nn + 1));
      ev.coefficient = Rational(1) / Rational(pow(*q, nn));
      ev.notes.push_back("q = " + q->get_str());
      ev.notes.push_back("push_deg read as deg f_*O(mL)");
      break;
    }
    case TheoremId::KSB_4: {
      if (!f.L_nef) ev.missing.push_back("L_nef");
      auto q = best_witness({&f.gen_finite_at_q, &f.LF_cartier_gg_at_q});
      if (!q) need_param(id, "a witness q");
      ev.coefficient = Rational(1) / Rational(pow(*q, nn));
      ev.notes.push_back("q = " + q->get_str());
      break;
    }
  }
  return ev;
}

void enforce(TheoremId id, const Evaluation& ev) {
  if (ev.missing.empty()) return;
  std::string list;
  for (const auto& m : ev.missing) list += (list.empty() ? "" : ", ") + m;
  throw Error(ErrorCode::HypothesisNotMet, std::string(theorem_name(id)) + " hypotheses not met: " + list);
}

}  // namespace

Rational slope_rhs_coefficient(TheoremId id, const FamilyInvariants& inv) {
  Evaluation ev = evaluate(id, inv);
  enforce(id, ev);
  return ev.coefficient;
}

Rational slope_lhs_scale(TheoremId id, const FamilyInvariants& inv) { return evaluate(id, inv).lhs_scale; }

CheckReport check_slope_inequality(TheoremId id, const FamilyInvariants& inv, HypothesisPolicy policy) {
  Evaluation ev = evaluate(id, inv);
  if (policy == HypothesisPolicy::enforce) enforce(id, ev);
  CheckReport report = make_report(std::string(theorem_name(id)), ev.lhs_scale * inv.top_self,
                                   ev.coefficient * inv.push_deg, ev.missing.empty());
  report.coefficient = ev.coefficient;
  if (inv.push_deg != 0) report.ratio = report.lhs / inv.push_deg;
  for (const auto& m : ev.missing) report.notes.push_back("hypothesis not met: " + m);
  for (auto& note : ev.notes) report.notes.push_back(std::move(note));
  return report;
}

Rational existence_constant(long n, const Rational& b) {
  if (n < 1) throw Error(ErrorCode::ParamRange, "n must be positive");
  if (b <= 0) throw Error(ErrorCode::ParamRange, "b must be positive");
  return Rational(1) / pow(b, static_cast<unsigned long>(n));
}

FamilyInvariants convbs_twist(const FamilyInvariants& inv, const Rational& degA, const Rational& k) {
  if (inv.push_deg <= 0) throw Error(ErrorCode::ZeroPushforwardDegree, "convbs_twist needs deg f_*O(L) > 0");
  if (degA <= 0) throw Error(ErrorCode::ParamRange, "deg A must be positive");
  if (k < 0) throw Error(ErrorCode::ParamRange, "k must be nonnegative");
  FamilyInvariants out = inv;
  out.top_self += k * Rational(inv.n + 1) * inv.fiber_top * degA;
  out.push_deg += k * Rational(inv.h0) * degA;
  return out;
}

namespace {

void check_fano_thresholds(const FanoFamilyData& d) {
  if (d.delta <= 1) throw Error(ErrorCode::InvalidThreshold, "delta must exceed 1, got " + to_string(d.delta));
  if (d.C <= 1) throw Error(ErrorCode::InvalidThreshold, "C must exceed 1, got " + to_string(d.C));
  if (d.n < 1) throw Error(ErrorCode::InvalidInvariants, "n must be positive");
  if (d.v <= 0) throw Error(ErrorCode::InvalidInvariants, "volume v must be positive");
  if (d.q < 1) throw Error(ErrorCode::InvalidInvariants, "q must be positive");
  if (d.k_semistable && d.antican_top > 0) {
    throw Error(ErrorCode::InvalidInvariants, "deg lambda_CM = -(-K-Delta)^{n+1} must be >= 0");
  }
}

}  // namespace

Rational fano_hc_top(const FanoFamilyData& d) {
  check_fano_thresholds(d);
  const Rational qpow(pow(d.q, static_cast<unsigned long>(d.n + 1)));
  return qpow * (-d.antican_top) * (d.delta * (d.C - 1) + 1) / (d.delta - 1);
}

Rational fano_hc_pushdeg(const FanoFamilyData& d) {
  check_fano_thresholds(d);
  if (!d.twist_integral) {
    throw Error(ErrorCode::NonIntegralTwist, "q C delta/((delta-1) v (n+1)) lambda_CM not asserted integral");
  }
  const Rational q(d.q);
  return d.push_deg_neg_q -
         d.C * (q * Rational(d.h0_fiber) / (d.v * Rational(d.n + 1))) * (d.delta / (d.delta - 1)) * d.antican_top;
}

CheckReport check_fano_slope(const FanoFamilyData& d, FanoVariant variant) {
  check_fano_thresholds(d);
  if (Rational(d.q) < Rational(1) / (d.C - 1)) {
    throw Error(ErrorCode::TwistTooSmall, "q = " + d.q.get_str() + " below 1/(C-1) = " + to_string(1 / (d.C - 1)));
  }
  const Rational n(d.n);
  Rational coefficient = 1;
  std::string id = "FANO_I";
  if (variant == FanoVariant::ii) {
    id = "FANO_II";
    if (!d.gen_finite) throw Error(ErrorCode::HypothesisNotMet, "variant ii needs -q(K_F+Delta_F) generically finite");
    if (d.h0_fiber < 1) throw Error(ErrorCode::NoSections, "h0_fiber = 0");
    coefficient = 2 * (Rational(d.h0_fiber) - n) / Rational(d.h0_fiber);
  } else if (variant == FanoVariant::iii) {
    id = "FANO_III";
    if (!d.globally_generated) throw Error(ErrorCode::HypothesisNotMet, "variant iii needs -q(K_F+Delta_F) globally generated");
    const Rational qv = Rational(pow(d.q, static_cast<unsigned long>(d.n))) * d.v;
    coefficient = 2 * qv / (qv + n);
  }
  const Rational push = fano_hc_pushdeg(d);
  CheckReport report = make_report(id, fano_hc_top(d), coefficient * push);
  report.coefficient = coefficient;
  if (push != 0) report.ratio = report.lhs / push;
  return report;
}

FamilyInvariants fano_as_invariants(const FanoFamilyData& d) {
  FamilyInvariants inv;
  inv.n = d.n;
  inv.top_self = fano_hc_top(d);
  inv.push_deg = fano_hc_pushdeg(d);
  inv.h0 = d.h0_fiber;
  inv.fiber_top = Rational(pow(d.q, static_cast<unsigned long>(d.n))) * d.v;
  inv.flags.L_nef = true;
  inv.flags.push_nef = true;
  // qH_C is Cartier; the fiber class -q(K_F+Delta_F) is big.
  inv.flags.LF_cartier_gg_at_q = Integer(1);
  if (d.gen_finite) inv.flags.gen_finite_at_q = Integer(1);
  return inv;
}

std::string RationalInterval::to_string() const {
  return "[" + slope_lab::to_string(lower) + ", " + slope_lab::to_string(upper) + (upper_open ? ")" : "]");
}

RationalInterval ample_interval(int part, long n, const Integer& m, const Rational& w_or_q) {
  if (n < 1) throw Error(ErrorCode::ParamRange, "n must be positive");
  if (m < 1) throw Error(ErrorCode::ParamRange, "m must be positive");
  const unsigned long nn = static_cast<unsigned long>(n);
  const Rational mn(pow(m, nn));
  const Rational mn1(pow(m, nn + 1));
  RationalInterval out{0, 0, true};
  if (part == 1) {
    if (w_or_q <= 0) throw Error(ErrorCode::ParamRange, "w must be positive");
    out.upper = (2 * w_or_q * mn / (w_or_q * mn + Rational(n))) / mn1;
  } else if (part == 2) {
    if (w_or_q < 1 || w_or_q.get_den() != 1) throw Error(ErrorCode::ParamRange, "q must be a positive integer");
    out.upper = Rational(1) / (pow(w_or_q, nn) * mn1);
  } else {
    throw Error(ErrorCode::ParamRange, "part must be 1 or 2");
  }
  return out;
}

NefAwayCase parse_nef_away_case(std::string_view text) {
  if (text == "1a") return NefAwayCase::c1a;
  if (text == "1b") return NefAwayCase::c1b;
  if (text == "2") return NefAwayCase::c2;
  if (text == "3") return NefAwayCase::c3;
  throw Error(ErrorCode::UnknownIdentifier, "unknown case '" + std::string(text) + "' (1a, 1b, 2, 3)");
}

Rational nef_away_coefficient(NefAwayCase which, long n, const Rational& v_or_q, const Integer& m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::ParamRange, "n and m must be positive");
  if (v_or_q <= 0) throw Error(ErrorCode::ParamRange, "v or q must be positive");
  const unsigned long nn = static_cast<unsigned long>(n);
  const Rational mn(pow(m, nn));
  const Rational& v = v_or_q;
  switch (which) {
    case NefAwayCase::c1a:
      if (!(n >= 2 || (n == 1 && m == 1))) throw Error(ErrorCode::HypothesisNotMet, "case 1a needs n >= 2 or n = m = 1");
      return 4 * v * mn / (v * mn + 2 * n);
    case NefAwayCase::c1b:
      if (!(n == 1 && m >= 2)) throw Error(ErrorCode::HypothesisNotMet, "case 1b needs n = 1 and m >= 2");
      return 2 * v * mn / (v * mn + n);
    case NefAwayCase::c2:
    case NefAwayCase::c3: {
      if (v_or_q.get_den() != 1) throw Error(ErrorCode::ParamRange, "q must be an integer");
      if (which == NefAwayCase::c2 && !(n >= 2 || (n == 1 && v_or_q == 1 && m == 1))) {
        throw Error(ErrorCode::HypothesisNotMet, "case 2 needs n >= 2 or n = q = m = 1");
      }
      const Rational base = which == NefAwayCase::c2 ? 2 : 1;
      return base / pow(v_or_q, nn);
    }
  }
  throw Error(ErrorCode::UnknownIdentifier, "unknown nef-away case");
}

Rational asymptotic_nef_threshold(long n, const Integer& m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::ParamRange, "n and m must be positive");
  const Integer denom = 2 * m - (n + 1);
  if (denom <= 0) throw Error(ErrorCode::DegenerateDenominator, "2m <= n+1");
  return frac(Integer(2 * factorial(static_cast<unsigned long>(n + 1)) * m), denom);
}

Rational lambda_m_leading(long n, const Integer& m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::ParamRange, "n and m must be positive");
  const unsigned long nn = static_cast<unsigned long>(n);
  return frac(pow(m, nn + 1), factorial(nn + 1)) - frac(pow(m, nn), Integer(2 * factorial(nn)));
}

}  // namespace slope_lab
