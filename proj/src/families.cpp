#include "slope_lab/families.hpp"

#include "slope_lab/chow_tower.hpp"
#include "slope_lab/errors.hpp"

#include <functional>
#include <numeric>

namespace slope_lab {

void validate_bundle(const BundleOnCurve& E) {
  if (E.rank < 1) throw Error(ErrorCode::InvalidInvariants, "bundle rank must be positive");
  if (E.mu_minus > E.degree / Rational(E.rank)) {
    throw Error(ErrorCode::InvalidInvariants, "mu_-(E) = " + to_string(E.mu_minus) + " exceeds deg/rank = " +
                                                  to_string(E.degree / Rational(E.rank)));
  }
}

std::pair<Integer, Rational> sym_power_degree(const BundleOnCurve& E, long k) {
  validate_bundle(E);
  if (k < 1) throw Error(ErrorCode::ParamRange, "symmetric power must be positive");
  Integer rank = binomial(Integer(E.rank + k - 1), static_cast<unsigned long>(k));
  Rational degree = Rational(rank) * Rational(k) * E.degree / Rational(E.rank);
  return {rank, degree};
}

namespace {

void require_nef_positive(const BundleOnCurve& E) {
  validate_bundle(E);
  if (!E.nef()) throw Error(ErrorCode::NotNef, "E must be nef (mu_- >= 0), got mu_- = " + to_string(E.mu_minus));
  if (E.degree <= 0) throw Error(ErrorCode::NonpositiveDegree, "deg E must be positive, got " + to_string(E.degree));
}

FamilyRecord projective_record(std::string kind, const BundleOnCurve& E) {
  FamilyRecord rec;
  rec.kind = std::move(kind);
  rec.bundle = E;
  rec.inv.flags.L_nef = true;
  rec.inv.flags.push_nef = true;
  rec.inv.flags.gen_finite_at_q = Integer(1);
  rec.inv.flags.LF_cartier_gg_at_q = Integer(1);
  rec.inv.flags.birational = true;
  rec.inv.flags.canonical_sings = true;
  return rec;
}

}  // namespace

FamilyRecord family_pn(const BundleOnCurve& E) {
  require_nef_positive(E);
  if (E.rank < 2) throw Error(ErrorCode::WrongRank, "projective bundle needs rank >= 2");
  FamilyRecord rec = projective_record("pn", E);
  rec.inv.n = E.rank - 1;
  rec.inv.top_self = E.degree;
  rec.inv.push_deg = E.degree;
  rec.inv.h0 = E.rank;
  rec.inv.fiber_top = 1;
  rec.provenance = {{"top_self", "H^{n+1} = deg E"},
                    {"push_deg", "f_*O(H) = E"},
                    {"h0", "h^0(P^n, O(1)) = n+1"},
                    {"fiber_top", "hyperplane degree 1"}};
  return rec;
}

FamilyRecord family_veronese(const BundleOnCurve& E) {
  if (E.rank != 3) throw Error(ErrorCode::WrongRank, "Veronese family needs rank 3, got " + std::to_string(E.rank));
  require_nef_positive(E);
  FamilyRecord rec = projective_record("veronese", E);
  rec.inv.n = 2;
  rec.inv.top_self = 8 * E.degree;
  rec.inv.push_deg = sym_power_degree(E, 2).second;
  rec.inv.h0 = 6;
  rec.inv.fiber_top = 4;
  rec.provenance = {{"top_self", "(2H)^3 = 8 deg E"},
                    {"push_deg", "deg Sym^2 E = 4 deg E"},
                    {"h0", "h^0(P^2, O(2)) = 6"},
                    {"fiber_top", "O(2)^2 = 4"}};
  return rec;
}

FamilyRecord family_quadric(const BundleOnCurve& E, const Rational& degA) {
  require_nef_positive(E);
  if (E.rank < 3) throw Error(ErrorCode::WrongRank, "quadric family needs rank n+2 >= 3");
  FamilyRecord rec = projective_record("quadric", E);
  rec.degA = degA;
  const long n = E.rank - 2;
  rec.inv.n = n;
  rec.inv.top_self = 2 * E.degree + degA;
  rec.inv.push_deg = E.degree;
  rec.inv.h0 = E.rank;
  rec.inv.fiber_top = 2;
  rec.provenance = {{"top_self", "H^{n+1}(2H + A) = 2 deg E + deg A"},
                    {"push_deg", "f_*O(L) = E"},
                    {"h0", "h^0(Q, O(1)) = n+2"},
                    {"fiber_top", "quadric degree 2"}};
  const Rational boundary = -2 * E.degree / Rational(E.rank);
  rec.attributes["f_positive_iff"] = "deg A >= " + to_string(boundary);
  rec.notes.push_back("general member of |2H + A| assumed normal");
  return rec;
}

FamilyRecord family_quadric_low_rank(long n, long r, const Integer& dd) {
  if (n < 1 || r < 3 || r > n + 2) {
    throw Error(ErrorCode::RankRange, "need 3 <= r <= n+2, got r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
  if (dd < 1) throw Error(ErrorCode::ParamRange, "dd must be positive");
  BundleOnCurve E{n + 2, Rational(r * dd), r == n + 2 ? Rational(dd) : Rational(0)};
  FamilyRecord rec = family_quadric(E, Rational(-2 * dd));
  rec.kind = "quadric_low_rank";
  rec.attributes["generic_rank"] = std::to_string(r);
  rec.attributes["dd"] = dd.get_str();
  rec.attributes["n"] = std::to_string(n);
  rec.notes.push_back("E = O^{n+2-r} + O(dd)^r on P^1, deg A = -2 dd");
  return rec;
}

namespace {

void validate_scroll(const ScrollFamily& s) {
  validate_bundle(s.E);
  if (s.E.rank != 2) throw Error(ErrorCode::WrongRank, "scroll base needs rank 2");
  if (s.d.empty() || s.d.size() != s.a.size()) {
    throw Error(ErrorCode::InvalidInvariants, "d and a must have equal length n >= 1");
  }
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    if (s.d[i] < 0) throw Error(ErrorCode::InvalidInvariants, "d_i must be nonnegative");
    if (i > 0 && s.d[i] > s.d[i - 1]) throw Error(ErrorCode::InvalidInvariants, "d must be nonincreasing");
    if (s.a[i] + Rational(s.d[i]) * s.E.mu_minus < 0) {
      throw Error(ErrorCode::AssumptionViolated, "a_" + std::to_string(i + 1) + " + d_" + std::to_string(i + 1) +
                                                     " mu_-(E) < 0");
    }
  }
}

Rational scroll_top(const ScrollFamily& s) {
  const std::size_t n = s.d.size();
  Rational quad = 0;
  Rational lin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    quad += Rational(s.d[i] * s.d[i]);
    lin += 2 * Rational(s.d[i]) * s.a[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) quad += Rational(s.d[i] * s.d[j]);
      if (i != j) lin += Rational(s.d[i]) * s.a[j];
    }
  }
  return quad * s.E.degree + lin;
}

Rational scroll_push(const ScrollFamily& s) {
  Rational total = 0;
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    total += Rational(binomial(Integer(s.d[i] + 1), 2)) * s.E.degree + Rational(s.d[i] + 1) * s.a[i];
  }
  return total;
}

}  // namespace

FamilyRecord family_scroll(const ScrollFamily& s) {
  validate_scroll(s);
  FamilyRecord rec;
  rec.kind = "scroll";
  rec.scroll = s;
  rec.bundle = s.E;
  const long n = static_cast<long>(s.d.size());
  const long sum_d = std::accumulate(s.d.begin(), s.d.end(), 0L);
  rec.inv.n = n;
  rec.inv.top_self = scroll_top(s);
  rec.inv.push_deg = scroll_push(s);
  rec.inv.h0 = sum_d + n;
  rec.inv.fiber_top = sum_d;
  auto& f = rec.inv.flags;
  f.L_nef = true;
  f.push_nef = true;
  f.LF_cartier_gg_at_q = Integer(1);
  f.canonical_sings = true;
  if (sum_d > 0) {
    f.gen_finite_at_q = Integer(1);
    f.birational = true;
  }
  rec.provenance = {{"top_self", "(sum d_i^2 + sum_{i<j} d_i d_j) deg E + sum 2 d_i a_i + sum_{i!=j} d_i a_j"},
                    {"push_deg", "sum [C(d_i+1,2) deg E + (d_i+1) a_i]"},
                    {"h0", "sum (d_i + 1)"},
                    {"fiber_top", "sum d_i"}};
  if (rec.inv.push_deg <= 0) {
    rec.notes.push_back("deg f_*O(L) = 0: E semistable and every a_i + d_i mu_-(E) = 0");
  }
  return rec;
}

Rational scroll_a1_limit_slope(const ScrollFamily& s) {
  validate_scroll(s);
  ScrollFamily bumped = s;
  bumped.a[0] += 1;
  const Rational dtop = scroll_top(bumped) - scroll_top(s);
  const Rational dpush = scroll_push(bumped) - scroll_push(s);
  return dtop / dpush;
}

FamilyRecord family_double_cover(const FamilyRecord& base, const BranchParams& branch) {
  const std::string& kind = base.kind;
  const long n = base.inv.n;
  FamilyRecord rec = base;
  rec.kind = "double_cover";
  rec.base_kind = kind;
  auto need_m = [&](long minimum) -> Integer {
    if (!branch.m) throw Error(ErrorCode::BranchTooSmall, "branch parameter m is required");
    if (*branch.m < minimum) {
      throw Error(ErrorCode::BranchTooSmall, kind + " double cover needs m >= " + std::to_string(minimum) + ", got " +
                                                 branch.m->get_str());
    }
    return *branch.m;
  };
  auto& f = rec.inv.flags;
  f.kodaira_nonneg = false;
  f.curve_special = false;
  if (kind == "pn") {
    Integer m = need_m(2);
    f.kodaira_nonneg = n >= 2 && m >= n + 1;
    f.curve_special = n == 1 && m >= 3;
    rec.attributes["branch"] = "2(mH + A), m = " + m.get_str();
  } else if (kind == "veronese") {
    Integer m = need_m(3);
    f.kodaira_nonneg = true;
    rec.attributes["branch"] = "2(mH + A), m = " + m.get_str();
  } else if (kind == "quadric" || kind == "quadric_low_rank") {
    Integer m = need_m(2);
    f.kodaira_nonneg = n >= 2 && m >= n;
    f.curve_special = n == 1;
    rec.attributes["branch"] = "2(mL + B), m = " + m.get_str();
  } else if (kind == "scroll") {
    if (!branch.alpha || !branch.beta) throw Error(ErrorCode::BranchTooSmall, "scroll double cover needs alpha and beta");
    const Integer& alpha = *branch.alpha;
    const Integer& beta = *branch.beta;
    const auto& d = base.scroll->d;
    if (alpha < 2) throw Error(ErrorCode::BranchTooSmall, "scroll double cover needs alpha >= 2");
    if (alpha * d.back() + beta <= 0) throw Error(ErrorCode::BranchTooSmall, "scroll double cover needs alpha d_n + beta > 0");
    const long sum_d = std::accumulate(d.begin(), d.end(), 0L);
    // K of the cover is the pullback of (alpha - n) L + (beta + sum d - 2) f on the scroll.
    f.kodaira_nonneg = n >= 2 && alpha >= n && (alpha - n) * d.front() + beta + sum_d - 2 >= 0;
    f.curve_special = n == 1 && (alpha - 1) * d.front() + beta - 2 >= 0;
    rec.attributes["branch"] = "2(alpha L + beta H_S + B), alpha = " + alpha.get_str() + ", beta = " + beta.get_str();
  } else {
    throw Error(ErrorCode::UnknownIdentifier, "no double cover construction for kind '" + kind + "'");
  }
  rec.inv.top_self = 2 * base.inv.top_self;
  rec.inv.fiber_top = 2 * base.inv.fiber_top;
  f.birational = false;
  rec.provenance = {{"top_self", "2 L^{n+1} of the base"},
                    {"push_deg", "f_*O(L) of the base (anti-invariant part has no sections)"},
                    {"h0", "h^0 of the base fiber"},
                    {"fiber_top", "2 L_F^n of the base"}};
  rec.attributes["branch_smooth_assumed"] = "true";
  return rec;
}

namespace {

/// (x_H H + x_F F)^{dim} on P(E) or on the scroll tower; summands empty means P(E) only.
ChowTower scroll_tower(const BundleOnCurve& E, const std::vector<std::pair<long, Rational>>& summands) {
  ChowTower tower = ChowTower::over_curve();
  std::vector<ChowTower::Element> chern_E;
  chern_E.push_back(tower.scale(tower.fiber_class(0), E.degree));
  for (long i = 1; i < E.rank; ++i) chern_E.push_back(tower.zero(0));
  tower.add_bundle(static_cast<int>(E.rank), chern_E);
  if (summands.empty()) return tower;
  // c(V) = prod (1 + d_i H_S + a_i F) on S.
  const auto hs = tower.hyperplane(1);
  const auto fib = tower.fiber_class(1);
  std::vector<ChowTower::Element> elementary(summands.size() + 1, tower.zero(1));
  elementary[0] = tower.one(1);
  for (const auto& [d, a] : summands) {
    const auto root = tower.add(tower.scale(hs, Rational(d)), tower.scale(fib, a));
    for (std::size_t k = summands.size(); k >= 1; --k) {
      elementary[k] = tower.add(elementary[k], tower.mul(elementary[k - 1], root));
    }
  }
  elementary.erase(elementary.begin());
  tower.add_bundle(static_cast<int>(summands.size()), elementary);
  return tower;
}

}  // namespace

Rational tower_intersection(const BundleOnCurve& E, const std::vector<std::pair<long, Rational>>& summands,
                            const Rational& x_H, const Rational& x_HS, const Rational& x_F) {
  validate_bundle(E);
  if (E.rank != 2) throw Error(ErrorCode::WrongRank, "scroll tower needs rank-2 E");
  if (summands.empty()) throw Error(ErrorCode::InvalidInvariants, "need at least one summand");
  for (const auto& [d, a] : summands) {
    if (d < 0) throw Error(ErrorCode::InvalidInvariants, "d_i must be nonnegative");
    if (a + Rational(d) * E.mu_minus < 0) throw Error(ErrorCode::AssumptionViolated, "a_i + d_i mu_-(E) < 0");
  }
  ChowTower tower = scroll_tower(E, summands);
  const int top = tower.top_level();
  auto L = tower.add(tower.add(tower.scale(tower.hyperplane(top), x_H), tower.scale(tower.hyperplane(1), x_HS)),
                     tower.scale(tower.fiber_class(top), x_F));
  return tower.integrate(tower.power(L, static_cast<unsigned>(tower.dimension(top))));
}

Rational tower_intersection_single(const BundleOnCurve& E, const Rational& x_H, const Rational& x_F) {
  validate_bundle(E);
  ChowTower tower = scroll_tower(E, {});
  auto L = tower.add(tower.scale(tower.hyperplane(1), x_H), tower.scale(tower.fiber_class(1), x_F));
  return tower.integrate(tower.power(L, static_cast<unsigned>(tower.dimension(1))));
}

std::optional<long> wps_generic_finite_multiple(const WeightVector& a, const Integer& e, long n, long max_q) {
  constexpr long kMaxDegree = 1000000;
  constexpr long kMaxVisits = 200000;
  const std::size_t len = a.size();
  for (long q = 1; q <= max_q; ++q) {
    const Integer D_big = e * q;
    if (D_big > kMaxDegree) break;
    const long D = D_big.get_si();
    std::vector<long> w(len, 0);
    long appearing = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] > D) continue;
      w[i] = a[i].get_si();
      if (graded_dim(a, Integer(D - w[i])) > 0) ++appearing;
    }
    if (appearing - 1 < n) continue;

    // Incremental row echelon form of differences from the first monomial.
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<long> first;
    std::vector<long> current(len, 0);
    bool have_first = false;
    long visits = 0;
    bool done = false;
    auto insert = [&](const std::vector<long>& mono) {
      if (!have_first) {
        first = mono;
        have_first = true;
        return;
      }
      std::vector<Rational> v(len);
      for (std::size_t i = 0; i < len; ++i) v[i] = mono[i] - first[i];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (v[pivots[b]] != 0) {
          Rational factor = v[pivots[b]] / basis[b][pivots[b]];
          for (std::size_t i = 0; i < len; ++i) v[i] -= factor * basis[b][i];
        }
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (v[i] != 0) {
          basis.push_back(v);
          pivots.push_back(i);
          break;
        }
      }
      if (static_cast<long>(basis.size()) >= n) done = true;
    };
    std::function<void(std::size_t, long)> walk = [&](std::size_t idx, long remaining) {
      if (done || ++visits > kMaxVisits) return;
      if (idx + 1 == len) {
        if (w[idx] == 0) {
          if (remaining == 0) {
            current[idx] = 0;
            insert(current);
          }
        } else if (remaining % w[idx] == 0) {
          current[idx] = remaining / w[idx];
          insert(current);
        }
        return;
      }
      if (w[idx] == 0) {
        current[idx] = 0;
        walk(idx + 1, remaining);
        return;
      }
      for (long x = remaining / w[idx]; x >= 0 && !done; --x) {
        current[idx] = x;
        walk(idx + 1, remaining - x * w[idx]);
      }
    };
    walk(0, D);
    if (done) return q;
  }
  return std::nullopt;
}

FamilyRecord wps_family(const WpsHypersurfaceFamily& fam, WpsOptions options) {
  const WeightVector& a = fam.a;
  if (a.size() < 3) throw Error(ErrorCode::InvalidWeights, "hypersurface family needs at least 3 weights (n >= 1)");
  if (fam.d < 1 || fam.e < 1 || fam.h < 1 || fam.l < 0) {
    throw Error(ErrorCode::ParamRange, "need d, e, h > 0 and l >= 0");
  }
  const bool well_formed = is_well_formed(a);
  if (options.require_well_formed && !well_formed) throw Error(ErrorCode::NotWellFormed, "weights are not well-formed");
  const Integer cartier = cartier_index(a);
  if (fam.d % cartier != 0) {
    throw Error(ErrorCode::AssumptionViolated, "lcm(a) = " + cartier.get_str() + " does not divide d = " + fam.d.get_str());
  }
  const Integer S_e = graded_dim(a, fam.e);
  const Integer S_ed = graded_dim(a, fam.e - fam.d);
  const Integer h0 = S_e - S_ed;
  if (h0 <= 0) throw Error(ErrorCode::AssumptionViolated, "dim S_e - dim S_{e-d} must be positive");

  const long n = a.dim() - 1;
  const unsigned long nn = static_cast<unsigned long>(n);
  const Rational prod(a.weight_product());
  FamilyRecord rec;
  rec.kind = "wps";
  rec.wps = fam;
  rec.inv.n = n;
  rec.inv.top_self = Rational(pow(fam.e, nn + 1) * fam.l + Integer(n + 1) * pow(fam.e, nn) * fam.h * fam.d) / prod;
  rec.inv.push_deg = Rational(fam.h * h0 + fam.l * S_ed);
  rec.inv.h0 = h0;
  rec.inv.fiber_top = Rational(pow(fam.e, nn) * fam.d) / prod;
  rec.provenance = {{"top_self", "(e^{n+1} l + (n+1) e^n h d) / prod a_i"},
                    {"push_deg", "h (S_e - S_{e-d}) + l S_{e-d}"},
                    {"h0", "S_e - S_{e-d}"},
                    {"fiber_top", "e^n d / prod a_i"}};

  auto& f = rec.inv.flags;
  f.L_nef = true;
  f.push_nef = true;
  const Integer cartier_q = cartier / gcd(cartier, fam.e);
  f.LF_cartier_gg_at_q = cartier_q;
  auto finite_q = wps_generic_finite_multiple(a, fam.e, n);
  f.gen_finite_at_q = finite_q ? Integer(*finite_q) : cartier_q;
  const Integer excess = fam.d - a.weight_sum();
  f.kodaira_nonneg = n >= 2 && excess >= 0;
  if (n == 1) f.curve_special = graded_dim(a, excess - fam.e) > 0;

  rec.attributes["kodaira"] = excess < 0 ? "fano" : (excess == 0 ? "calabi_yau" : "canonically_polarized");
  rec.attributes["relative_canonical"] = (fam.e == excess && fam.h == fam.l) ? "true" : "false";
  rec.attributes["cartier_index"] = cartier.get_str();
  rec.attributes["well_formed"] = well_formed ? "true" : "false";
  rec.attributes["f_positive"] = "always";
  rec.notes.push_back("general hypersurface assumed quasi-smooth");
  if (!finite_q) rec.notes.push_back("gen_finite_at_q falls back to the Cartier multiple");
  if (!well_formed) rec.notes.push_back("weights not well-formed; accepted on request");
  return rec;
}

Rational wps_special_slope(const WpsHypersurfaceFamily& fam) {
  if (fam.e != 1 || fam.d <= 1) throw Error(ErrorCode::AssumptionViolated, "special slope formula needs e = 1 < d");
  const long ones = fam.a.ones();
  if (ones < 1) throw Error(ErrorCode::AssumptionViolated, "special slope formula needs a weight equal to 1");
  const long n = fam.a.dim() - 1;
  const Rational value = (Rational(n + 1) * Rational(fam.d) + Rational(fam.l) / Rational(fam.h)) /
                         (Rational(ones) * Rational(fam.a.weight_product()));
  FamilyRecord rec = wps_family(fam, WpsOptions{false});
  if (slope(rec.inv) != value) {
    throw Error(ErrorCode::AssumptionViolated, "special slope " + to_string(value) + " disagrees with " +
                                                   to_string(slope(rec.inv)));
  }
  return value;
}

std::vector<Integer> sylvester_sequence(long count) {
  std::vector<Integer> s;
  Integer product = 1;
  for (long k = 0; k < count; ++k) {
    Integer next = k == 0 ? Integer(2) : Integer(product + 1);
    product *= next;
    s.push_back(next);
  }
  return s;
}

SylvesterResult sylvester_family(long n) {
  if (n < 1) throw Error(ErrorCode::ParamRange, "Sylvester family needs n >= 1");
  SylvesterResult out;
  out.sequence = sylvester_sequence(n + 1);
  const auto& s = out.sequence;
  std::vector<Integer> weights{1, 1};
  for (long i = 0; i < n; ++i) {
    Integer b = 1;
    for (long j = 0; j < n; ++j) {
      if (j != i) b *= s[j];
    }
    weights.push_back(3 * b);
  }
  const Integer d = 3 * (s[n] - 1);
  out.fam = WpsHypersurfaceFamily{WeightVector(weights), d, 1, 1, 1};
  if (1 + out.fam.a.weight_sum() != d) {
    throw Error(ErrorCode::AssumptionViolated, "identity 1 + |a| = d fails at n = " + std::to_string(n));
  }
  const Integer sm1 = s[n] - 1;
  out.slope = frac(Integer(3 * (n + 1) * sm1 + 1),
                   Integer(2 * pow(Integer(3), static_cast<unsigned long>(n)) * pow(sm1, static_cast<unsigned long>(n - 1))));
  if (n >= 2 && out.slope >= 1) throw Error(ErrorCode::AssumptionViolated, "slope not below 1");
  return out;
}

IvBisResult example_iv_bis(const Integer& alpha, const Integer& beta, const Integer& k) {
  if (alpha < 2 || beta < 2 || k < 1) throw Error(ErrorCode::ParamRange, "need alpha, beta >= 2 and k >= 1");
  IvBisResult out;
  const Rational K(k);
  out.slope = K / (Rational(alpha * beta) * (K + 1)) + 3 * K / (K + 1);
  out.threshold = 4 * (K - 1) / (K + 1);
  out.below_threshold = out.slope < out.threshold;
  out.pairwise_coprime = gcd(alpha, beta) == 1 && gcd(alpha, k) == 1 && gcd(beta, k) == 1;
  out.fam = WpsHypersurfaceFamily{WeightVector({1, 1, alpha * k, beta * k}), alpha * beta * k, k, 1, 1};
  return out;
}

}  // namespace slope_lab
