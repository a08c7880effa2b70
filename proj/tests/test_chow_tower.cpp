#include "slope_lab/chow_tower.hpp"
#include "slope_lab/errors.hpp"

#include <doctest.h>

#include <random>

using namespace slope_lab;

namespace {

using El = ChowTower::Element;

/// P^{r-1} over a point, as P of the trivial rank-r bundle.
ChowTower projective_space(int r) {
  ChowTower t = ChowTower::over_point();
  std::vector<El> chern;
  for (int i = 0; i < r; ++i) chern.push_back(t.zero(0));
  t.add_bundle(r, chern);
  return t;
}

bool same(const El& a, const El& b) { return a.level == b.level && a.coeffs == b.coeffs; }

El random_element(const ChowTower& t, int level, std::mt19937& rng) {
  El e = t.zero(level);
  for (auto& c : e.coeffs) c = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  for (auto& c : e.coeffs) c.canonicalize();
  return e;
}

}  // namespace

TEST_CASE("projective spaces over a point") {
  for (int r = 1; r <= 6; ++r) {
    const ChowTower t = projective_space(r);
    CHECK(t.dimension(1) == r - 1);
    CHECK(t.integrate(t.power(t.hyperplane(1), static_cast<unsigned>(r - 1))) == 1);
    // Degree-(r-1) part of (2H)^{r-1}.
    CHECK(t.integrate(t.power(t.scale(t.hyperplane(1), 2), static_cast<unsigned>(r - 1))) ==
          Rational(pow(Integer(2), static_cast<unsigned long>(r - 1))));
  }
}

TEST_CASE("Hirzebruch surfaces") {
  for (int a = 0; a <= 5; ++a) {
    ChowTower t = projective_space(2);
    const El h1 = t.hyperplane(1);
    t.add_bundle(2, {t.scale(h1, a), t.zero(1)});
    const El H = t.hyperplane(2);
    const El f = t.pullback(h1, 2);
    CHECK(t.integrate(t.mul(H, H)) == a);
    CHECK(t.integrate(t.mul(H, f)) == 1);
    CHECK(t.integrate(t.mul(f, f)) == 0);
  }
}

TEST_CASE("projective bundle over the plane: Segre classes") {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      ChowTower t = projective_space(3);
      const El h = t.hyperplane(1);
      t.add_bundle(2, {t.scale(h, a), t.scale(t.mul(h, h), b)});
      CHECK(t.dimension(2) == 3);
      const El H = t.hyperplane(2);
      CHECK(t.integrate(t.power(H, 3)) == a * a - b);
      CHECK(t.integrate(t.mul(t.mul(H, H), t.pullback(h, 2))) == a);
      CHECK(t.integrate(t.mul(H, t.pullback(t.mul(h, h), 2))) == 1);
    }
  }
}

TEST_CASE("projective bundles over a curve") {
  for (int r = 1; r <= 5; ++r) {
    for (int deg = -4; deg <= 6; ++deg) {
      ChowTower t = ChowTower::over_curve();
      std::vector<El> chern{t.scale(t.fiber_class(0), deg)};
      for (int i = 1; i < r; ++i) chern.push_back(t.zero(0));
      t.add_bundle(r, chern);
      const El H = t.hyperplane(1);
      const El F = t.fiber_class(1);
      CHECK(t.integrate(t.power(H, static_cast<unsigned>(r))) == deg);
      CHECK(t.integrate(t.mul(t.power(H, static_cast<unsigned>(r - 1)), F)) == 1);
      CHECK(t.integrate(t.mul(F, F)) == 0);
      // (H + xF)^r = deg + r x.
      for (int x = -2; x <= 2; ++x) {
        CHECK(t.integrate(t.power(t.add(H, t.scale(F, x)), static_cast<unsigned>(r))) == deg + r * x);
      }
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(3);
  ChowTower t = ChowTower::over_curve();
  t.add_bundle(2, {t.scale(t.fiber_class(0), 3), t.zero(0)});
  const El hs = t.hyperplane(1);
  const El fib = t.fiber_class(1);
  t.add_bundle(3, {t.add(t.scale(hs, 2), fib), t.scale(t.mul(hs, fib), 5), t.zero(1)});
  for (int trial = 0; trial < 30; ++trial) {
    const El a = random_element(t, 2, rng), b = random_element(t, 2, rng), c = random_element(t, 2, rng);
    CHECK(same(t.mul(a, b), t.mul(b, a)));
    CHECK(same(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c))));
    CHECK(same(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c))));
    CHECK(same(t.mul(a, t.one(2)), a));
    CHECK(same(t.power(a, 3), t.mul(a, t.mul(a, a))));
  }
}

TEST_CASE("tower errors") {
  ChowTower t = ChowTower::over_point();
  CHECK_THROWS_AS(t.fiber_class(0), Error);
  CHECK_THROWS_AS(t.hyperplane(1), Error);
  CHECK_THROWS_AS(t.add_bundle(2, {t.zero(0)}), Error);
}
