#pragma once

#include "slope_lab/check_report.hpp"
#include "slope_lab/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slope_lab {

/// Caller-asserted geometric hypotheses. The q-valued entries carry the
/// witnessing multiple: phi_{qL_F} generically finite, qL_F Cartier and
/// globally generated.
struct FamilyFlags {
  bool L_nef = false;
  bool push_nef = false;
  std::optional<Integer> gen_finite_at_q;
  bool birational = false;
  std::optional<Integer> LF_cartier_gg_at_q;
  bool kodaira_nonneg = false;
  bool curve_special = false;
  bool canonical_sings = false;
};

struct FamilyParams {
  std::optional<Integer> m;
  std::optional<Integer> s;
  std::optional<Rational> w;
};

/// Numerical package of a polarized fibration f: X -> T over a curve.
struct FamilyInvariants {
  long n = 1;
  Rational top_self;   // L^{n+1}
  Rational push_deg;   // deg f_* O(L)
  Integer h0;          // h^0(F, floor(L_F))
  Rational fiber_top;  // L_F^n
  FamilyFlags flags;
  FamilyParams params;
};

/// Throws InvalidInvariants on n < 1, h0 < 0, nonpositive witnesses, or L_F^n < 0 with L nef.
void validate_invariants(const FamilyInvariants& inv);

enum class TheoremId {
  XIAO_H1,
  XIAO_H2,
  XIAO_BIR1,
  XIAO_BIR2,
  BARJA_1,
  BARJA_2,
  KSB_1,
  KSB_2,
  KSB_3,
  KSB_4,
};

std::string_view theorem_name(TheoremId id);
/// Throws UnknownIdentifier.
TheoremId parse_theorem_id(std::string_view name);
const std::vector<TheoremId>& all_theorem_ids();

/// enforce: unmet hypotheses throw HypothesisNotMet.
/// report: boolean hypotheses that fail are listed in the notes and
/// hypothesis_ok is false, but the inequality is still evaluated.
enum class HypothesisPolicy { enforce, report };

Rational bs_invariant(const FamilyInvariants& inv);
Rational slope(const FamilyInvariants& inv);

CheckReport check_f_positive(const FamilyInvariants& inv);

/// ((n+1)t/(t+n), (n+1)(h0-n)/h0), doubled with t+2n when K(F) >= 0 (n >= 2) or the curve is special.
std::pair<Rational, Rational> rineqbs_lower_bounds(const FamilyInvariants& inv);

/// Multiplicative constant on the pushforward degree.
Rational slope_rhs_coefficient(TheoremId id, const FamilyInvariants& inv);
/// Factor applied to top_self on the left: m^{n+1} for KSB_1..3, else 1.
Rational slope_lhs_scale(TheoremId id, const FamilyInvariants& inv);

CheckReport check_slope_inequality(TheoremId id, const FamilyInvariants& inv,
                                   HypothesisPolicy policy = HypothesisPolicy::enforce);

Rational existence_constant(long n, const Rational& b);

/// Invariants of L + k f^*A with deg A = degA.
FamilyInvariants convbs_twist(const FamilyInvariants& inv, const Rational& degA, const Rational& k);

struct FanoFamilyData {
  long n = 1;
  Rational v;              // volume of -(K_F + Delta_F)
  Rational delta;          // stability threshold
  Rational C;
  Integer q;
  Rational antican_top;    // (-K_{X/T} - Delta)^{n+1}
  Rational push_deg_neg_q; // deg f_* O(-q(K + Delta))
  Integer h0_fiber;        // h^0(F, -q(K_F + Delta_F))
  bool k_semistable = true;
  bool twist_integral = false;
  bool gen_finite = false;
  bool globally_generated = false;
};

enum class FanoVariant { i, ii, iii };

Rational fano_hc_top(const FanoFamilyData& data);
Rational fano_hc_pushdeg(const FanoFamilyData& data);
CheckReport check_fano_slope(const FanoFamilyData& data, FanoVariant variant);
/// The same data as a FamilyInvariants package for L = qH_C.
FamilyInvariants fano_as_invariants(const FanoFamilyData& data);

struct RationalInterval {
  Rational lower;
  Rational upper;
  bool upper_open = true;

  std::string to_string() const;
};

/// Part 1 reads w_or_q as w, part 2 as q.
RationalInterval ample_interval(int part, long n, const Integer& m, const Rational& w_or_q);

enum class NefAwayCase { c1a, c1b, c2, c3 };

NefAwayCase parse_nef_away_case(std::string_view text);
Rational nef_away_coefficient(NefAwayCase which, long n, const Rational& v_or_q, const Integer& m);

Rational asymptotic_nef_threshold(long n, const Integer& m);
/// Only the two displayed leading terms of lambda_m's expansion.
Rational lambda_m_leading(long n, const Integer& m);

}  // namespace slope_lab
