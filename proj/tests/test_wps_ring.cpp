#include "slope_lab/errors.hpp"
#include "slope_lab/wps_ring.hpp"

#include <doctest.h>

#include <random>

using namespace slope_lab;

namespace {

WeightVector W(std::vector<long> a) { return WeightVector::from_longs(a); }

/// Coefficients of prod 1/(1 - t^{a_i}) up to t^m by truncated series products.
std::vector<Integer> hilbert_series(const std::vector<long>& a, long m) {
  std::vector<Integer> series(static_cast<std::size_t>(m) + 1, 0);
  series[0] = 1;
  for (long w : a) {
    std::vector<Integer> next(series.size(), 0);
    for (long i = 0; i <= m; ++i) {
      for (long k = 0; i - k * w >= 0; ++k) next[i] += series[i - k * w];
    }
    series = next;
  }
  return series;
}

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

}  // namespace

TEST_CASE("weight vector validation") {
  CHECK(code_of([] { W({1}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { W({1, 0, 2}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { W({1, -3}); }) == ErrorCode::InvalidWeights);
  const auto a = W({1, 1, 8, 12});
  CHECK(a.dim() == 3);
  CHECK(a.weight_sum() == 22);
  CHECK(a.weight_product() == 96);
  CHECK(a.ones() == 2);
}

TEST_CASE("pinned graded dimensions") {
  CHECK(graded_dim(W({1, 1, 8, 12}), 2) == 3);
  CHECK(graded_dim(W({1, 1, 8, 12}), 8) == 10);
  CHECK(graded_dim(W({1, 1, 1}), 3) == 10);
  CHECK(graded_dim(W({2, 3}), 1) == 0);
  CHECK(graded_dim(W({2, 3}), 0) == 1);
  CHECK(graded_dim(W({1, 2}), -1) == 0);
  CHECK(graded_dim(W({1, 1, 8, 12}), -5) == 0);
}

TEST_CASE("graded_dim agrees with the enumeration oracle") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> len_d(2, 6), w_d(1, 20), m_d(0, 200);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> a(static_cast<std::size_t>(len_d(rng)));
    for (auto& w : a) w = w_d(rng);
    const long m = m_d(rng);
    INFO("trial " << trial << " m=" << m);
    CHECK(graded_dim(W(a), m) == graded_dim_oracle(W(a), m));
  }
}

TEST_CASE("graded_dim matches the Hilbert series of the polynomial ring") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> len_d(2, 5), w_d(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> a(static_cast<std::size_t>(len_d(rng)));
    for (auto& w : a) w = w_d(rng);
    const auto series = hilbert_series(a, 60);
    for (long m = 0; m <= 60; ++m) CHECK(graded_dim(W(a), m) == series[m]);
  }
}

TEST_CASE("graded_dim for standard weights is a binomial coefficient") {
  for (long n = 1; n <= 5; ++n) {
    std::vector<long> ones(static_cast<std::size_t>(n + 1), 1);
    for (long m = 0; m <= 30; ++m) CHECK(graded_dim(W(ones), m) == binomial(Integer(m + n), n));
  }
}

TEST_CASE("graded_dim is monotone once a weight equals one") {
  const auto a = W({1, 3, 5, 7});
  for (long m = 0; m < 100; ++m) CHECK(graded_dim(a, m + 1) >= graded_dim(a, m));
}

TEST_CASE("degree limits") {
  CHECK(code_of([] { graded_dim(W({1, 1}), Integer(kGradedDimMaxDegree) + 1); }) == ErrorCode::DegreeTooLarge);
  CHECK(code_of([] { graded_dim_oracle(W({1, 1}), kDefaultOracleCap + 1); }) == ErrorCode::CapExceeded);
  CHECK(graded_dim_oracle(W({1, 1}), 50, 100) == 51);
}

TEST_CASE("well-formedness") {
  CHECK(is_well_formed(W({1, 1, 8, 12})));
  CHECK(is_well_formed(W({1, 1, 1})));
  CHECK_FALSE(is_well_formed(W({1, 2, 4})));
  CHECK_FALSE(is_well_formed(W({1, 2, 2})));
  CHECK(is_well_formed(W({2, 3, 5})));
  CHECK(is_well_formed(W({1, 6, 10, 15})));
  CHECK_FALSE(is_well_formed(W({2, 2, 3})));
}

TEST_CASE("cartier index, top self-intersection, canonical class") {
  CHECK(cartier_index(W({1, 1, 8, 12})) == 24);
  CHECK(cartier_index(W({2, 3, 5})) == 30);
  CHECK(taut_top_self_intersection(W({1, 1, 8, 12})) == Rational(1, 96));
  CHECK(taut_top_self_intersection(W({1, 1, 1})) == 1);
  CHECK(to_string(taut_top_self_intersection(W({2, 4, 6}))) == "1/48");
  CHECK(canonical_coefficient(W({1, 1, 8, 12})) == -22);
}

TEST_CASE("cohomology of O(m)") {
  const auto a = W({1, 1, 2});
  CHECK(wps_cohomology_dim(a, 2, 0) == 4);
  CHECK(wps_cohomology_dim(a, 2, 1) == 0);
  CHECK(wps_cohomology_dim(a, -4, 2) == 1);
  CHECK(wps_cohomology_dim(a, -6, 2) == graded_dim(a, 2));
  CHECK(code_of([&] { wps_cohomology_dim(a, 0, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { wps_cohomology_dim(a, 0, -1); }) == ErrorCode::IndexOutOfRange);
  // Serre duality on P(a): h^{n+1}(O(m)) = h^0(O(-m-|a|)).
  for (long m = -20; m <= 5; ++m) CHECK(wps_cohomology_dim(a, m, 2) == graded_dim(a, -m - 4));
}

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("1.5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("3/-4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_integer(""); }) == ErrorCode::ParseError);
  CHECK(to_string(frac(Integer(10), Integer(-4))) == "-5/2");
  CHECK(code_of([] { to_long(pow(Integer(10), 30)); }) == ErrorCode::Overflow);
}
