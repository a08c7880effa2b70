#pragma once

#include "slope_lab/check_report.hpp"
#include "slope_lab/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace slope_lab {

struct HNStep {
  long rank = 0;
  Rational slope;
};

/// Ranks 0 < r_1 < ... < r_l and slopes mu_1 > ... > mu_l of an HN filtration.
class HNProfile {
 public:
  const std::vector<HNStep>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  /// 1-based, as in the filtration indexing.
  long rank(std::size_t i) const { return steps_.at(i - 1).rank; }
  const Rational& slope(std::size_t i) const { return steps_.at(i - 1).slope; }

 private:
  friend HNProfile validate_profile(std::vector<HNStep> steps);
  std::vector<HNStep> steps_;
};

HNProfile validate_profile(std::vector<HNStep> steps);

/// Sum of mu_i (r_i - r_{i-1}); cross-checked against sum of r_i (mu_i - mu_{i+1}).
Rational pushforward_degree(const HNProfile& p);

bool is_nef_profile(const HNProfile& p);

using ClassMultiset = std::vector<int>;

/// Degree-n intersection numbers of the restricted classes P_1, ..., P_{l+1},
/// keyed by sorted multisets of 1-based class indices.
class IntersectionModel {
 public:
  /// Throws InvalidModel unless the table covers every size-n multiset with a
  /// nonnegative value (and, if requested, is monotone in each index).
  IntersectionModel(int n, int classes, std::map<ClassMultiset, Rational> table, bool check_monotone = false);

  int n() const { return n_; }
  int classes() const { return classes_; }
  const std::map<ClassMultiset, Rational>& table() const { return table_; }

  /// Value of an arbitrary-order index list (sorted internally).
  const Rational& value(ClassMultiset indices) const;

  bool is_monotone() const;

  /// Every size-n multiset over {1..classes} in lexicographic order.
  static std::vector<ClassMultiset> all_multisets(int n, int classes);

 private:
  int n_;
  int classes_;
  std::map<ClassMultiset, Rational> table_;
};

enum class ExtraVariant { reuse_last, pullback_L, m_ell };

/// The choice of (N_{l+1}, mu_{l+1}); only mu_{l+1} reaches the arithmetic.
struct ExtraClassChoice {
  ExtraVariant variant = ExtraVariant::pullback_L;
  Rational mu_extra;
};

ExtraClassChoice make_extra(ExtraVariant variant, const HNProfile& p);

/// seq_s = (s_1, ..., s_{q+1}) and seq_m = (m_0, ..., m_{n+1}).
Rational xiao_bound_general(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                            const std::vector<long>& seq_s, const std::vector<long>& seq_m);

Rational xiao_bound_1A(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra);
Rational xiao_bound_1B(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra);
Rational xiao_bound_2(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                      const std::vector<long>& seq_s);

/// The (seq_s, seq_m) pairs at which the general bound reduces to 1A, 1B and 2.
std::vector<long> full_seq_s(std::size_t ell);
std::vector<long> seq_m_1A(int n, long q);
std::vector<long> seq_m_1B(int n, long q);

inline constexpr long kDefaultSearchCap = 100000;
/// kDefaultSearchCap unless SLOPE_LAB_SEARCH_CAP holds a positive integer.
long search_cap_from_env();

struct BestBound {
  Rational value;
  std::vector<long> seq_s;
  std::vector<long> seq_m;
  bool exhaustive = true;
  long candidates = 0;
};

/// Number of admissible (seq_s, seq_m) pairs: sum over q of C(l, q) C(n+q, n).
Integer admissible_pair_count(std::size_t ell, int n);

BestBound best_xiao_bound(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                          long search_cap = kDefaultSearchCap);

/// d = (d_0, ..., d_n) with n >= 2.
CheckReport check_log_concave_lemma(const std::vector<Integer>& d);

bool miyaoka_nef_check(const Rational& mu_minus, const Integer& d, const Rational& degA);

}  // namespace slope_lab
