#include "slope_lab/hn_engine.hpp"

#include "slope_lab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace slope_lab {

HNProfile validate_profile(std::vector<HNStep> steps) {
  if (steps.empty()) throw Error(ErrorCode::EmptyProfile, "HN profile has no steps");
  long previous_rank = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].rank <= previous_rank) {
      throw Error(ErrorCode::NotStrictlyIncreasingRanks,
                  "rank " + std::to_string(steps[i].rank) + " at step " + std::to_string(i + 1) +
                      " does not exceed " + std::to_string(previous_rank));
    }
    previous_rank = steps[i].rank;
    if (i > 0 && !(steps[i].slope < steps[i - 1].slope)) {
      throw Error(ErrorCode::NotStrictlyDecreasingSlopes,
                  "slope " + to_string(steps[i].slope) + " at step " + std::to_string(i + 1) + " is not below " +
                      to_string(steps[i - 1].slope));
    }
  }
  HNProfile p;
  p.steps_ = std::move(steps);
  return p;
}

Rational pushforward_degree(const HNProfile& p) {
  const auto& s = p.steps();
  Rational graded = 0;
  long previous_rank = 0;
  for (const auto& step : s) {
    graded += step.slope * (step.rank - previous_rank);
    previous_rank = step.rank;
  }
  Rational summed = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational next = (i + 1 < s.size()) ? s[i + 1].slope : Rational(0);
    summed += Rational(s[i].rank) * (s[i].slope - next);
  }
  if (graded != summed) {
    throw Error(ErrorCode::InvalidModel, "pushforward closed forms disagree: " + to_string(graded) + " vs " +
                                             to_string(summed));
  }
  return graded;
}

bool is_nef_profile(const HNProfile& p) { return p.steps().back().slope >= 0; }

std::vector<ClassMultiset> IntersectionModel::all_multisets(int n, int classes) {
  std::vector<ClassMultiset> out;
  ClassMultiset current;
  std::function<void(int)> grow = [&](int lowest) {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (int c = lowest; c <= classes; ++c) {
      current.push_back(c);
      grow(c);
      current.pop_back();
    }
  };
  grow(1);
  return out;
}

IntersectionModel::IntersectionModel(int n, int classes, std::map<ClassMultiset, Rational> table, bool check_monotone)
    : n_(n), classes_(classes), table_(std::move(table)) {
  if (n < 1) throw Error(ErrorCode::InvalidModel, "fiber dimension n must be >= 1");
  if (classes < 2) throw Error(ErrorCode::InvalidModel, "need at least two classes (l >= 1)");
  std::map<ClassMultiset, Rational> sorted;
  for (auto& [key, value] : table_) {
    ClassMultiset k = key;
    std::sort(k.begin(), k.end());
    if (static_cast<int>(k.size()) != n) {
      throw Error(ErrorCode::InvalidModel, "table entry of size " + std::to_string(k.size()) + ", expected " +
                                               std::to_string(n));
    }
    for (int c : k) {
      if (c < 1 || c > classes) throw Error(ErrorCode::InvalidModel, "class index " + std::to_string(c) + " out of range");
    }
    if (value < 0) throw Error(ErrorCode::InvalidModel, "negative intersection number " + to_string(value));
    auto [it, inserted] = sorted.emplace(k, value);
    if (!inserted && it->second != value) throw Error(ErrorCode::InvalidModel, "conflicting duplicate table entry");
  }
  table_ = std::move(sorted);
  for (const auto& k : all_multisets(n, classes)) {
    if (!table_.count(k)) {
      std::string label;
      for (int c : k) label += (label.empty() ? "" : ",") + std::to_string(c);
      throw Error(ErrorCode::InvalidModel, "table missing multiset [" + label + "]");
    }
  }
  if (check_monotone && !is_monotone()) throw Error(ErrorCode::InvalidModel, "table is not monotone");
}

const Rational& IntersectionModel::value(ClassMultiset indices) const {
  std::sort(indices.begin(), indices.end());
  auto it = table_.find(indices);
  if (it == table_.end()) throw Error(ErrorCode::ModelMismatch, "intersection index outside the model");
  return it->second;
}

bool IntersectionModel::is_monotone() const {
  for (const auto& [key, value] : table_) {
    for (std::size_t pos = 0; pos < key.size(); ++pos) {
      if (key[pos] == classes_) continue;
      ClassMultiset bigger = key;
      bigger[pos] += 1;
      if (value > this->value(bigger)) return false;
    }
  }
  return true;
}

ExtraClassChoice make_extra(ExtraVariant variant, const HNProfile& p) {
  ExtraClassChoice extra;
  extra.variant = variant;
  extra.mu_extra = variant == ExtraVariant::reuse_last ? p.steps().back().slope : Rational(0);
  return extra;
}

namespace {

/// mu_h for h in 1..l+1.
Rational mu_at(const HNProfile& p, const ExtraClassChoice& extra, long h) {
  if (h == static_cast<long>(p.length()) + 1) return extra.mu_extra;
  return p.slope(static_cast<std::size_t>(h));
}

void check_model(const HNProfile& p, const IntersectionModel& model) {
  if (model.classes() != static_cast<int>(p.length()) + 1) {
    throw Error(ErrorCode::ModelMismatch, "model has " + std::to_string(model.classes()) + " classes, profile needs " +
                                              std::to_string(p.length() + 1));
  }
}

void check_extra(const HNProfile& p, const ExtraClassChoice& extra) {
  Rational expected = extra.variant == ExtraVariant::reuse_last ? p.steps().back().slope : Rational(0);
  if (extra.mu_extra != expected) {
    throw Error(ErrorCode::InvalidSequence, "mu_extra " + to_string(extra.mu_extra) + " inconsistent with its variant");
  }
}

void check_seq_s(const std::vector<long>& seq_s, std::size_t ell) {
  const long last = static_cast<long>(ell) + 1;
  if (seq_s.size() < 2 || seq_s.size() > ell + 1) {
    throw Error(ErrorCode::InvalidSequence, "seq_s must list s_1..s_{q+1} with 1 <= q <= l");
  }
  if (seq_s.front() < 1 || seq_s.back() != last) {
    throw Error(ErrorCode::InvalidSequence, "seq_s must start >= 1 and end at l+1 = " + std::to_string(last));
  }
  for (std::size_t i = 1; i < seq_s.size(); ++i) {
    if (seq_s[i] <= seq_s[i - 1]) throw Error(ErrorCode::InvalidSequence, "seq_s must be strictly increasing");
  }
}

void check_seq_m(const std::vector<long>& seq_m, int n, long q) {
  if (static_cast<int>(seq_m.size()) != n + 2) {
    throw Error(ErrorCode::InvalidSequence, "seq_m must list m_0..m_{n+1} (" + std::to_string(n + 2) + " entries)");
  }
  if (seq_m.front() != 1 || seq_m.back() != q + 1) {
    throw Error(ErrorCode::InvalidSequence, "seq_m must start at 1 and end at q+1 = " + std::to_string(q + 1));
  }
  for (std::size_t i = 1; i < seq_m.size(); ++i) {
    if (seq_m[i] < seq_m[i - 1]) throw Error(ErrorCode::InvalidSequence, "seq_m must be nondecreasing");
  }
}

/// Unchecked evaluation of the double sum; seq_s and seq_m are 1-based in content.
Rational evaluate_general(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                          const std::vector<long>& s, const std::vector<long>& m) {
  const int n = model.n();
  auto s_at = [&](long j) { return s[static_cast<std::size_t>(j - 1)]; };
  Rational total = 0;
  ClassMultiset indices;
  for (int i = 0; i <= n; ++i) {
    ClassMultiset tail;
    for (int t = i + 1; t <= n; ++t) tail.push_back(static_cast<int>(s_at(m[t])));
    for (long j = m[i]; j <= m[i + 1] - 1; ++j) {
      const long lo = s_at(j);
      const long hi = s_at(j + 1);
      Rational inner = 0;
      for (int k = 0; k <= i; ++k) {
        indices.assign(tail.begin(), tail.end());
        indices.insert(indices.end(), k, static_cast<int>(lo));
        indices.insert(indices.end(), i - k, static_cast<int>(hi));
        inner += model.value(indices);
      }
      total += inner * (mu_at(p, extra, lo) - mu_at(p, extra, hi));
    }
  }
  return total;
}

}  // namespace

Rational xiao_bound_general(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                            const std::vector<long>& seq_s, const std::vector<long>& seq_m) {
  check_model(p, model);
  check_extra(p, extra);
  check_seq_s(seq_s, p.length());
  check_seq_m(seq_m, model.n(), static_cast<long>(seq_s.size()) - 1);
  return evaluate_general(p, model, extra, seq_s, seq_m);
}

std::vector<long> full_seq_s(std::size_t ell) {
  std::vector<long> s(ell + 1);
  for (std::size_t j = 0; j <= ell; ++j) s[j] = static_cast<long>(j) + 1;
  return s;
}

std::vector<long> seq_m_1A(int n, long q) {
  std::vector<long> m(static_cast<std::size_t>(n) + 2, q + 1);
  m[0] = 1;
  m[1] = 1;
  return m;
}

std::vector<long> seq_m_1B(int n, long q) {
  std::vector<long> m(static_cast<std::size_t>(n) + 2, 1);
  m.back() = q + 1;
  return m;
}

namespace {

/// sum_j (P_{s_j} + P_{s_{j+1}}) P_{l+1}^{n-1} (mu_{s_j} - mu_{s_{j+1}}), the shape shared by 1A and 2.
Rational linear_form(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                     const std::vector<long>& s) {
  const int top = static_cast<int>(p.length()) + 1;
  const int n = model.n();
  Rational total = 0;
  for (std::size_t j = 0; j + 1 < s.size(); ++j) {
    ClassMultiset with_lo(static_cast<std::size_t>(n - 1), top);
    ClassMultiset with_hi = with_lo;
    with_lo.push_back(static_cast<int>(s[j]));
    with_hi.push_back(static_cast<int>(s[j + 1]));
    total += (model.value(with_lo) + model.value(with_hi)) * (mu_at(p, extra, s[j]) - mu_at(p, extra, s[j + 1]));
  }
  return total;
}

}  // namespace

Rational xiao_bound_1A(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra) {
  check_model(p, model);
  check_extra(p, extra);
  return linear_form(p, model, extra, full_seq_s(p.length()));
}

Rational xiao_bound_1B(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra) {
  check_model(p, model);
  check_extra(p, extra);
  const int n = model.n();
  Rational total = 0;
  for (long j = 1; j <= static_cast<long>(p.length()); ++j) {
    Rational inner = 0;
    for (int k = 0; k <= n; ++k) {
      ClassMultiset idx(static_cast<std::size_t>(k), static_cast<int>(j));
      idx.insert(idx.end(), n - k, static_cast<int>(j + 1));
      inner += model.value(idx);
    }
    total += inner * (mu_at(p, extra, j) - mu_at(p, extra, j + 1));
  }
  return total;
}

Rational xiao_bound_2(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                      const std::vector<long>& seq_s) {
  check_model(p, model);
  check_extra(p, extra);
  check_seq_s(seq_s, p.length());
  return linear_form(p, model, extra, seq_s);
}

long search_cap_from_env() {
  const char* raw = std::getenv("SLOPE_LAB_SEARCH_CAP");
  if (raw == nullptr) return kDefaultSearchCap;
  try {
    Integer v = parse_integer(raw);
    if (v >= 1 && v.fits_slong_p()) return v.get_si();
  } catch (const Error&) {
  }
  return kDefaultSearchCap;
}

Integer admissible_pair_count(std::size_t ell, int n) {
  Integer count = 0;
  for (std::size_t q = 1; q <= ell; ++q) {
    count += binomial(Integer(static_cast<unsigned long>(ell)), q) *
             binomial(Integer(static_cast<unsigned long>(n + static_cast<int>(q))), static_cast<unsigned long>(n));
  }
  return count;
}

namespace {

void consider(BestBound& best, bool& have, Rational value, const std::vector<long>& s, const std::vector<long>& m) {
  ++best.candidates;
  bool better = !have || value > best.value ||
                (value == best.value && std::make_pair(s, m) < std::make_pair(best.seq_s, best.seq_m));
  if (better) {
    best.value = std::move(value);
    best.seq_s = s;
    best.seq_m = m;
    have = true;
  }
}

/// Calls visit(s) for every strictly increasing s_1 < ... < s_q in [1, l], with s_{q+1} = l+1 appended.
void for_each_seq_s(std::size_t ell, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> current;
  std::function<void(long)> grow = [&](long lowest) {
    if (!current.empty()) {
      current.push_back(static_cast<long>(ell) + 1);
      visit(current);
      current.pop_back();
    }
    for (long v = lowest; v <= static_cast<long>(ell); ++v) {
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(1);
}

void for_each_seq_m(int n, long q, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> m(static_cast<std::size_t>(n) + 2);
  m[0] = 1;
  m.back() = q + 1;
  std::function<void(int, long)> fill = [&](int pos, long lowest) {
    if (pos == n + 1) {
      visit(m);
      return;
    }
    for (long v = lowest; v <= q + 1; ++v) {
      m[pos] = v;
      fill(pos + 1, v);
    }
  };
  fill(1, 1);
}

}  // namespace

BestBound best_xiao_bound(const HNProfile& p, const IntersectionModel& model, const ExtraClassChoice& extra,
                          long search_cap) {
  check_model(p, model);
  check_extra(p, extra);
  if (search_cap < 1) throw Error(ErrorCode::ParamRange, "search cap must be positive");
  const std::size_t ell = p.length();
  const int n = model.n();
  BestBound best;
  bool have = false;
  best.exhaustive = admissible_pair_count(ell, n) <= search_cap;
  if (best.exhaustive) {
    for_each_seq_s(ell, [&](const std::vector<long>& s) {
      for_each_seq_m(n, static_cast<long>(s.size()) - 1, [&](const std::vector<long>& m) {
        consider(best, have, evaluate_general(p, model, extra, s, m), s, m);
      });
    });
    return best;
  }
  const auto full = full_seq_s(ell);
  const long q = static_cast<long>(ell);
  consider(best, have, evaluate_general(p, model, extra, full, seq_m_1A(n, q)), full, seq_m_1A(n, q));
  consider(best, have, evaluate_general(p, model, extra, full, seq_m_1B(n, q)), full, seq_m_1B(n, q));
  for_each_seq_s(ell, [&](const std::vector<long>& s) {
    auto m = seq_m_1A(n, static_cast<long>(s.size()) - 1);
    consider(best, have, evaluate_general(p, model, extra, s, m), s, m);
  });
  return best;
}

CheckReport check_log_concave_lemma(const std::vector<Integer>& d) {
  if (d.size() < 3) throw Error(ErrorCode::TooShort, "need d_0..d_n with n >= 2");
  const std::size_t n = d.size() - 1;
  std::vector<std::string> failed;
  if (d[0] < 2) failed.push_back("d_0 >= 2");
  for (std::size_t i = 1; i <= n; ++i) {
    if (d[i] < d[i - 1]) {
      failed.push_back("d_" + std::to_string(i) + " >= d_" + std::to_string(i - 1));
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (d[i] * d[i] < d[i + 1] * d[i - 1]) {
      failed.push_back("d_" + std::to_string(i) + "^2 >= d_" + std::to_string(i + 1) + " d_" + std::to_string(i - 1));
    }
  }
  if (d[n] - d[n - 1] < 2) failed.push_back("d_n - d_{n-1} >= 2");

  Integer min_step = d[1] - d[0];
  for (std::size_t i = 2; i <= n; ++i) min_step = std::min<Integer>(min_step, d[i] - d[i - 1]);
  CheckReport report = make_report("LOG_CONCAVE", Rational(min_step), Rational(2), failed.empty());
  for (const auto& f : failed) report.notes.push_back("hypothesis failed: " + f);
  const bool second = d[n - 1] >= d[0] + Integer(2 * static_cast<long>(n - 1));
  report.notes.push_back(std::string("d_{n-1} >= d_0 + 2(n-1): ") + (second ? "true" : "false"));
  return report;
}

bool miyaoka_nef_check(const Rational& mu_minus, const Integer& d, const Rational& degA) {
  return d >= 0 && Rational(d) * mu_minus + degA >= 0;
}

}  // namespace slope_lab
