#pragma once

#include "slope_lab/rational.hpp"
#include "slope_lab/slope_theorems.hpp"
#include "slope_lab/wps_ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slope_lab {

/// A vector bundle E on a curve, seen only through rank, degree and mu_-(E).
struct BundleOnCurve {
  long rank = 1;
  Rational degree;
  Rational mu_minus;

  bool nef() const { return mu_minus >= 0; }
};

/// Throws InvalidInvariants unless rank >= 1 and mu_- <= deg/rank.
void validate_bundle(const BundleOnCurve& E);

/// Sym^k E: rank C(r+k-1, k), degree rank' * k * deg / r.
std::pair<Integer, Rational> sym_power_degree(const BundleOnCurve& E, long k);

/// P_S(sum O_S(d_i) (x) h^*O(A_i)) over S = P(E), with deg A_i = a_i.
struct ScrollFamily {
  BundleOnCurve E;
  std::vector<long> d;
  std::vector<Rational> a;
};

/// Hypersurfaces X in |dH_1 + lH_2| of P(a) x P^1, polarized by eH_1 + hH_2.
struct WpsHypersurfaceFamily {
  WeightVector a = WeightVector::from_longs({1, 1, 1});
  Integer d;
  Integer e;
  Integer h;
  Integer l;
};

struct WpsOptions {
  bool require_well_formed = true;
};

/// Invariants plus the construction data needed to rebuild or double-cover them.
struct FamilyRecord {
  std::string kind;
  FamilyInvariants inv;
  std::map<std::string, std::string> provenance;
  std::map<std::string, std::string> attributes;
  std::vector<std::string> notes;

  std::optional<BundleOnCurve> bundle;
  std::optional<Rational> degA;
  std::optional<ScrollFamily> scroll;
  std::optional<WpsHypersurfaceFamily> wps;
  std::string base_kind;
};

FamilyRecord family_pn(const BundleOnCurve& E);
FamilyRecord family_veronese(const BundleOnCurve& E);
FamilyRecord family_quadric(const BundleOnCurve& E, const Rational& degA);
/// E = O^{n+2-r} + O(dd)^r on the projective line with deg A = -2 dd.
FamilyRecord family_quadric_low_rank(long n, long r, const Integer& dd);
FamilyRecord family_scroll(const ScrollFamily& s);

/// Pn, Veronese and quadric covers use m; scroll covers use alpha and beta.
struct BranchParams {
  std::optional<Integer> m;
  std::optional<Integer> alpha;
  std::optional<Integer> beta;
};

FamilyRecord family_double_cover(const FamilyRecord& base, const BranchParams& branch);

/// (x_H H + x_HS H_S + x_F F)^{n+1} on the scroll total space, via the generic tower.
Rational tower_intersection(const BundleOnCurve& E, const std::vector<std::pair<long, Rational>>& summands,
                            const Rational& x_H, const Rational& x_HS, const Rational& x_F);

/// (x_H H + x_F F)^{r} on P(E) over a curve.
Rational tower_intersection_single(const BundleOnCurve& E, const Rational& x_H, const Rational& x_F);

/// Slope limit as a_1 grows, read off as the ratio of a_1-increments of top and push.
Rational scroll_a1_limit_slope(const ScrollFamily& s);

FamilyRecord wps_family(const WpsHypersurfaceFamily& fam, WpsOptions options = {});

/// Slope for e = 1 < d; cross-checked against wps_family.
Rational wps_special_slope(const WpsHypersurfaceFamily& fam);

/// Least q <= max_q such that degree q*e monomials span an affine lattice of
/// rank >= n; nullopt if none.
std::optional<long> wps_generic_finite_multiple(const WeightVector& a, const Integer& e, long n, long max_q = 64);

std::vector<Integer> sylvester_sequence(long count);

struct SylvesterResult {
  std::vector<Integer> sequence;  // s_0 .. s_n
  WpsHypersurfaceFamily fam;
  Rational slope;
};

SylvesterResult sylvester_family(long n);

struct IvBisResult {
  Rational slope;
  Rational threshold;
  bool below_threshold = false;
  bool pairwise_coprime = false;
  WpsHypersurfaceFamily fam;
};

IvBisResult example_iv_bis(const Integer& alpha, const Integer& beta, const Integer& k);

}  // namespace slope_lab
