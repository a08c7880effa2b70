#include "slope_lab/errors.hpp"
#include "slope_lab/families.hpp"
#include "slope_lab/hn_engine.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
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
  return ErrorCode::ParseError;
}

Rational q(long num, long den = 1) { return frac(Integer(num), Integer(den)); }

BundleOnCurve bundle(long rank, Rational degree, Rational mu_minus) { return {rank, degree, mu_minus}; }

WpsHypersurfaceFamily wps(std::vector<long> a, long d, long e, long h = 1, long l = 1) {
  return WpsHypersurfaceFamily{WeightVector::from_longs(a), d, e, h, l};
}

/// Degree of Sym^k of a split bundle: sum over exponent vectors of sum e_i b_i.
Integer split_sym_degree(const std::vector<long>& b, long k) {
  Integer total = 0;
  std::vector<long> e(b.size(), 0);
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long left) {
    if (i + 1 == b.size()) {
      e[i] = left;
      for (std::size_t j = 0; j < b.size(); ++j) total += e[j] * b[j];
      return;
    }
    for (long x = 0; x <= left; ++x) {
      e[i] = x;
      walk(i + 1, left - x);
    }
  };
  walk(0, k);
  return total;
}

ScrollFamily random_scroll(std::mt19937& rng) {
  const long n = 1 + static_cast<long>(rng() % 4);
  ScrollFamily s;
  const long deg = static_cast<long>(rng() % 7);
  s.E = bundle(2, deg, q(static_cast<long>(rng() % (deg + 1)), 2));
  if (s.E.mu_minus > s.E.degree / 2) s.E.mu_minus = s.E.degree / 2;
  std::vector<long> d;
  for (long i = 0; i < n; ++i) d.push_back(static_cast<long>(rng() % 5));
  std::sort(d.rbegin(), d.rend());
  s.d = d;
  for (long i = 0; i < n; ++i) {
    const Rational floor = -Rational(d[i]) * s.E.mu_minus;
    s.a.push_back(floor + q(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3)));
  }
  return s;
}

}  // namespace

TEST_CASE("symmetric powers") {
  const auto [rank, degree] = sym_power_degree(bundle(3, 5, 1), 2);
  CHECK(rank == 6);
  CHECK(degree == 20);
  const auto [r1, d1] = sym_power_degree(bundle(4, q(7, 3), 0), 1);
  CHECK(r1 == 4);
  CHECK(d1 == q(7, 3));
  std::mt19937 rng(1);
  for (int t = 0; t < 60; ++t) {
    const long r = 1 + static_cast<long>(rng() % 4);
    const long k = 1 + static_cast<long>(rng() % 5);
    std::vector<long> b;
    for (long i = 0; i < r; ++i) b.push_back(static_cast<long>(rng() % 11) - 4);
    const long deg = std::accumulate(b.begin(), b.end(), 0L);
    const long mu_minus = *std::min_element(b.begin(), b.end());
    CHECK(sym_power_degree(bundle(r, deg, mu_minus), k).second == Rational(split_sym_degree(b, k)));
  }
}

TEST_CASE("bundle validation") {
  CHECK(code_of([] { validate_bundle(bundle(2, 1, 1)); }) == ErrorCode::InvalidInvariants);
  CHECK(code_of([] { validate_bundle(bundle(0, 1, 0)); }) == ErrorCode::InvalidInvariants);
  CHECK(bundle(2, 3, 0).nef());
  CHECK_FALSE(bundle(2, 3, -1).nef());
}

TEST_CASE("families of projective spaces") {
  for (long r = 2; r <= 6; ++r) {
    const auto E = bundle(r, q(2 * r + 1, 3), 0);
    const auto rec = family_pn(E);
    CHECK(rec.inv.n == r - 1);
    CHECK(slope(rec.inv) == 1);
    CHECK(bs_invariant(rec.inv) == 1);
    CHECK(rec.inv.top_self == tower_intersection_single(E, 1, 0));
    const auto twice = family_double_cover(rec, {Integer(r), {}, {}});
    CHECK(slope(twice.inv) == 2);
    CHECK(bs_invariant(twice.inv) == 2);
    CHECK(twice.inv.push_deg == rec.inv.push_deg);
    CHECK(twice.inv.h0 == rec.inv.h0);
    CHECK_FALSE(twice.inv.flags.birational);
    CHECK(twice.inv.flags.kodaira_nonneg == (r - 1 >= 2));
  }
  const auto line = family_pn(bundle(2, 1, 0));
  CHECK(line.inv.top_self == 1);
  CHECK(line.inv.push_deg == 1);
  CHECK(family_double_cover(line, {Integer(3), {}, {}}).inv.flags.curve_special);
  CHECK_FALSE(family_double_cover(line, {Integer(2), {}, {}}).inv.flags.curve_special);
  CHECK(code_of([] { family_pn(bundle(2, 1, -1)); }) == ErrorCode::NotNef);
  CHECK(code_of([] { family_pn(bundle(2, 0, 0)); }) == ErrorCode::NonpositiveDegree);
  CHECK(code_of([&] { family_double_cover(line, {Integer(1), {}, {}}); }) == ErrorCode::BranchTooSmall);
  CHECK(code_of([&] { family_double_cover(line, {}); }) == ErrorCode::BranchTooSmall);
}

TEST_CASE("families of Veronese surfaces") {
  const auto rec = family_veronese(bundle(3, 1, 0));
  CHECK(rec.inv.top_self == 8);
  CHECK(rec.inv.push_deg == 4);
  CHECK(slope(rec.inv) == 2);
  CHECK(bs_invariant(rec.inv) == 2);
  for (long deg = 1; deg <= 6; ++deg) {
    const auto E = bundle(3, deg, 0);
    CHECK(tower_intersection_single(E, 2, 0) == family_veronese(E).inv.top_self);
  }
  const auto twice = family_double_cover(rec, {Integer(3), {}, {}});
  CHECK(slope(twice.inv) == 4);
  CHECK(twice.inv.flags.kodaira_nonneg);
  CHECK(code_of([&] { family_double_cover(rec, {Integer(2), {}, {}}); }) == ErrorCode::BranchTooSmall);
  CHECK(code_of([] { family_veronese(bundle(2, 1, 0)); }) == ErrorCode::WrongRank);
  CHECK(code_of([] { family_veronese(bundle(3, 1, -1)); }) == ErrorCode::NotNef);
}

TEST_CASE("families of quadrics") {
  for (long n = 1; n <= 4; ++n) {
    for (long deg = 1; deg <= 5; ++deg) {
      const auto E = bundle(n + 2, deg, 0);
      for (const Rational& degA : {q(-1), q(0), q(3, 2)}) {
        const auto rec = family_quadric(E, degA);
        CHECK(slope(rec.inv) == 2 + degA / E.degree);
        CHECK(bs_invariant(rec.inv) == 2 - q(2, n + 2));
        // H^{n+1} (2H + A F) on P(E).
        const Rational top = 2 * tower_intersection_single(E, 1, 0) +
                             degA * (tower_intersection_single(E, 1, 1) - tower_intersection_single(E, 1, 0)) /
                                 Rational(n + 2);
        CHECK(rec.inv.top_self == top);
      }
      const Rational boundary = -2 * E.degree / Rational(E.rank);
      CHECK(check_f_positive(family_quadric(E, boundary).inv).slack == 0);
      CHECK_FALSE(check_f_positive(family_quadric(E, boundary - q(1, 7)).inv).holds);
    }
  }
  const auto curve = family_quadric(bundle(3, 3, 1), 0);
  CHECK(family_double_cover(curve, {Integer(2), {}, {}}).inv.flags.curve_special);
  const auto threefold = family_quadric(bundle(5, 5, 1), 0);
  CHECK(family_double_cover(threefold, {Integer(3), {}, {}}).inv.flags.kodaira_nonneg);
  CHECK_FALSE(family_double_cover(threefold, {Integer(2), {}, {}}).inv.flags.kodaira_nonneg);
}

TEST_CASE("quadrics of small slope") {
  for (long n = 1; n <= 5; ++n) {
    for (long r = 3; r <= n + 2; ++r) {
      const auto rec = family_quadric_low_rank(n, r, 2);
      CHECK(slope(rec.inv) == 2 - q(2, r));
      CHECK(check_f_positive(rec.inv).holds == (r == n + 2));
      if (r == n + 2) CHECK(check_f_positive(rec.inv).slack == 0);
      CHECK(rec.bundle->mu_minus == (r == n + 2 ? 2 : 0));
    }
  }
  CHECK(slope(family_quadric_low_rank(2, 3, 1).inv) == q(4, 3));
  CHECK(miyaoka_nef_check(family_quadric_low_rank(3, 3, 1).bundle->mu_minus, 1, 0));
  CHECK(code_of([] { family_quadric_low_rank(2, 5, 1); }) == ErrorCode::RankRange);
  CHECK(code_of([] { family_quadric_low_rank(2, 2, 1); }) == ErrorCode::RankRange);
}

TEST_CASE("scroll top self-intersection matches the tower on random data") {
  std::mt19937 rng(123);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const ScrollFamily s = random_scroll(rng);
    std::vector<std::pair<long, Rational>> summands;
    for (std::size_t i = 0; i < s.d.size(); ++i) summands.emplace_back(s.d[i], s.a[i]);
    const auto rec = family_scroll(s);
    CHECK(tower_intersection(s.E, summands, 1, 0, 0) == rec.inv.top_self);
    CHECK(tower_intersection(s.E, summands, 0, 0, 1) == 0);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("scroll special cases") {
  for (long d = 1; d <= 4; ++d) {
    for (long n = 1; n <= 4; ++n) {
      ScrollFamily s{bundle(2, 3, 1), std::vector<long>(static_cast<std::size_t>(n), d), {}};
      for (long i = 0; i < n; ++i) s.a.push_back(q(i, 2) - d);
      const auto rec = family_scroll(s);
      CHECK(slope(rec.inv) == q((n + 1) * d, d + 1));
      CHECK(check_f_positive(rec.inv).slack == 0);
    }
  }
  for (long d = 2; d <= 6; ++d) {
    ScrollFamily s{bundle(2, 2, 1), {d, 0, 0}, {q(3), q(0), q(0)}};
    CHECK(slope(family_scroll(s).inv) == q(2 * d, d + 1));
  }
  ScrollFamily s{bundle(2, 2, 0), {4, 2, 1}, {q(1), q(0), q(2)}};
  CHECK(scroll_a1_limit_slope(s) == q(4 + 7, 4 + 1));
  // The slope approaches the limit as a_1 grows.
  Rational previous_gap = abs(slope(family_scroll(s).inv) - scroll_a1_limit_slope(s));
  for (long a1 = 10; a1 <= 10000; a1 *= 10) {
    s.a[0] = a1;
    const Rational gap = abs(slope(family_scroll(s).inv) - scroll_a1_limit_slope(s));
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("scroll errors and double covers") {
  ScrollFamily bad{bundle(2, 4, 1), {2}, {q(-3)}};
  CHECK(code_of([&] { family_scroll(bad); }) == ErrorCode::AssumptionViolated);
  CHECK(code_of([&] { tower_intersection(bad.E, {{2, q(-3)}}, 1, 0, 0); }) == ErrorCode::AssumptionViolated);
  ScrollFamily unsorted{bundle(2, 4, 1), {1, 2}, {q(0), q(0)}};
  CHECK(code_of([&] { family_scroll(unsorted); }) == ErrorCode::InvalidInvariants);
  ScrollFamily s{bundle(2, 2, 1), {3, 1}, {q(1), q(0)}};
  const auto rec = family_scroll(s);
  const auto twice = family_double_cover(rec, {{}, Integer(2), Integer(1)});
  CHECK(slope(twice.inv) == 2 * slope(rec.inv));
  CHECK(twice.inv.flags.kodaira_nonneg);
  const auto threefold = family_scroll(ScrollFamily{bundle(2, 2, 1), {3, 1, 1}, {q(1), q(0), q(0)}});
  CHECK_FALSE(family_double_cover(threefold, {{}, Integer(2), Integer(1)}).inv.flags.kodaira_nonneg);
  CHECK(family_double_cover(threefold, {{}, Integer(3), Integer(1)}).inv.flags.kodaira_nonneg);
  CHECK(code_of([&] { family_double_cover(rec, {{}, Integer(1), Integer(5)}); }) == ErrorCode::BranchTooSmall);
  CHECK(code_of([&] { family_double_cover(rec, {{}, Integer(2), Integer(-2)}); }) == ErrorCode::BranchTooSmall);
  ScrollFamily flat{bundle(2, 0, 0), {1}, {q(0)}};
  CHECK(family_scroll(flat).inv.push_deg == 0);
  CHECK_FALSE(family_scroll(flat).notes.empty());
}

TEST_CASE("hypersurfaces in weighted projective space: pinned examples") {
  const auto xiao = wps_family(wps({1, 1, 8, 12}, 24, 2));
  CHECK(slope(xiao.inv) == q(37, 36));
  CHECK(xiao.inv.h0 == 3);
  CHECK(xiao.inv.fiber_top == 1);
  CHECK(xiao.attributes.at("relative_canonical") == "true");
  CHECK(xiao.attributes.at("kodaira") == "canonically_polarized");
  CHECK(*xiao.inv.flags.gen_finite_at_q == 4);
  CHECK(*xiao.inv.flags.LF_cartier_gg_at_q == 12);
  CHECK(xiao.inv.flags.kodaira_nonneg);

  for (long n = 2; n <= 5; ++n) {
    std::vector<long> a(static_cast<std::size_t>(n), 1);
    a.push_back(2);
    a.push_back(n + 3);
    const auto rec = wps_family(wps(a, 2 * (n + 3), 1));
    CHECK(slope(rec.inv) == q(1, 2 * n * (n + 3)) + q(n + 1, n));
  }
  CHECK(code_of([] { wps_family(wps({1, 2, 4}, 8, 1)); }) == ErrorCode::NotWellFormed);
  CHECK(slope(wps_family(wps({1, 2, 4}, 8, 1), WpsOptions{false}).inv) == q(1, 8) + 2);

  for (long n = 1; n <= 3; ++n) {
    for (long alpha = 2; alpha <= 4; ++alpha) {
      for (long m = 1; m <= 3; ++m) {
        std::vector<long> a{1, 1};
        for (long i = 0; i < n; ++i) a.push_back(alpha);
        const auto fam = wps(a, m * alpha, 1);
        const Rational expected =
            Rational((n + 1) * m * alpha + 1) / Rational(2 * pow(Integer(alpha), static_cast<unsigned long>(n)));
        CHECK(slope(wps_family(fam).inv) == expected);
        CHECK(wps_special_slope(fam) == expected);
      }
    }
  }
  CHECK(code_of([] { wps_special_slope(wps({1, 1, 8, 12}, 24, 2)); }) == ErrorCode::AssumptionViolated);
  CHECK(code_of([] { wps_special_slope(wps({2, 3, 5}, 30, 1)); }) == ErrorCode::AssumptionViolated);
}

TEST_CASE("hypersurface assumptions") {
  CHECK(code_of([] { wps_family(wps({1, 1, 8, 12}, 20, 2)); }) == ErrorCode::AssumptionViolated);
  // S_e = S_{e-d} leaves no sections on the fiber.
  CHECK(code_of([] { wps_family(wps({2, 3, 5}, 30, 1)); }) == ErrorCode::AssumptionViolated);
  CHECK(code_of([] { wps_family(wps({1, 1, 1}, 0, 1)); }) == ErrorCode::ParamRange);
  CHECK(code_of([] { wps_family(wps({1, 1}, 2, 1)); }) == ErrorCode::InvalidWeights);
}

TEST_CASE("kodaira trichotomy and curve specialness") {
  CHECK(wps_family(wps({1, 1, 1, 1}, 3, 1)).attributes.at("kodaira") == "fano");
  CHECK(wps_family(wps({1, 1, 1, 1}, 4, 1)).attributes.at("kodaira") == "calabi_yau");
  CHECK(wps_family(wps({1, 1, 1, 1}, 4, 1)).inv.flags.kodaira_nonneg);
  CHECK_FALSE(wps_family(wps({1, 1, 1, 1}, 3, 1)).inv.flags.kodaira_nonneg);
  // Plane curves of degree d: K = (d-3)H, and H is special iff d >= 4.
  CHECK(wps_family(wps({1, 1, 1}, 4, 1)).inv.flags.curve_special);
  CHECK_FALSE(wps_family(wps({1, 1, 1}, 3, 1)).inv.flags.curve_special);
  CHECK(wps_family(wps({1, 1, 1}, 5, 1, 2, 2)).attributes.at("relative_canonical") == "false");
  CHECK(wps_family(wps({1, 1, 1}, 5, 2, 2, 2)).attributes.at("relative_canonical") == "true");
}

TEST_CASE("generic finiteness multiple") {
  CHECK(wps_generic_finite_multiple(WeightVector::from_longs({1, 1, 8, 12}), 2, 2) == 4);
  CHECK(wps_generic_finite_multiple(WeightVector::from_longs({1, 1, 1, 1}), 1, 2) == 1);
  CHECK(wps_generic_finite_multiple(WeightVector::from_longs({1, 1, 3}), 1, 1) == 1);
  CHECK(wps_generic_finite_multiple(WeightVector::from_longs({1, 1, 9, 6}), 1, 2) == 6);
  CHECK_FALSE(wps_generic_finite_multiple(WeightVector::from_longs({1, 1, 100, 300}), 1, 2, 64).has_value());
}

TEST_CASE("random hypersurface families are f-positive and meet the Barja bound") {
  std::mt19937 rng(555);
  int built = 0;
  for (int t = 0; t < 600 && built < 300; ++t) {
    std::vector<long> a{1, 1};
    const long extra = 1 + static_cast<long>(rng() % 3);
    for (long i = 0; i < extra; ++i) a.push_back(1 + static_cast<long>(rng() % 6));
    const auto weights = WeightVector::from_longs(a);
    const Integer d = cartier_index(weights) * (1 + static_cast<long>(rng() % 3));
    const long e = 1 + static_cast<long>(rng() % 5);
    if (Integer(e) >= d) continue;
    WpsHypersurfaceFamily fam{weights, d, e, 1 + static_cast<long>(rng() % 3), static_cast<long>(rng() % 4)};
    const auto rec = wps_family(fam);
    ++built;
    const auto f = check_f_positive(rec.inv);
    CHECK(f.holds);
    CHECK(check_slope_inequality(TheoremId::BARJA_1, rec.inv).holds);
  }
  CHECK(built == 300);
}

TEST_CASE("Sylvester families") {
  const auto seq = sylvester_sequence(5);
  CHECK(seq == std::vector<Integer>{2, 3, 7, 43, 1807});
  for (long n = 1; n <= 8; ++n) {
    const auto res = sylvester_family(n);
    CHECK(1 + res.fam.a.weight_sum() == res.fam.d);
    if (n >= 2) CHECK(res.slope < 1);
  }
  const auto two = sylvester_family(2);
  CHECK(two.fam.a == WeightVector::from_longs({1, 1, 9, 6}));
  CHECK(two.fam.d == 18);
  CHECK(two.slope == q(55, 108));
  CHECK(slope(wps_family(two.fam).inv) == q(55, 108));
  CHECK(wps_special_slope(two.fam) == q(55, 108));
  const auto one = sylvester_family(1);
  CHECK(one.fam.a == WeightVector::from_longs({1, 1, 3}));
  CHECK(one.fam.d == 6);
  CHECK(one.slope == q(13, 6));
  for (long n = 1; n <= 6; ++n) {
    const auto res = sylvester_family(n);
    CHECK(slope(wps_family(res.fam).inv) == res.slope);
  }
  // s_7 no longer fits in 64 bits.
  CHECK_FALSE(sylvester_sequence(9).back().fits_slong_p());
}

TEST_CASE("second Xiao-type example") {
  const auto r = example_iv_bis(2, 3, 5);
  CHECK(r.slope == q(95, 36));
  CHECK(r.threshold == q(96, 36));
  CHECK(r.below_threshold);
  CHECK(r.pairwise_coprime);
  CHECK(slope(wps_family(r.fam).inv) == r.slope);
  CHECK_FALSE(example_iv_bis(2, 4, 5).pairwise_coprime);
  CHECK_FALSE(example_iv_bis(2, 3, 2).below_threshold);
  for (long alpha = 2; alpha <= 5; ++alpha) {
    for (long beta = 2; beta <= 5; ++beta) {
      for (long k = 1; k <= 7; ++k) {
        const auto res = example_iv_bis(alpha, beta, k);
        if (!is_well_formed(res.fam.a)) continue;
        CHECK(slope(wps_family(res.fam).inv) == res.slope);
      }
    }
  }
  CHECK(code_of([] { example_iv_bis(1, 3, 5); }) == ErrorCode::ParamRange);
  CHECK(code_of([] { example_iv_bis(2, 3, 0); }) == ErrorCode::ParamRange);
}
