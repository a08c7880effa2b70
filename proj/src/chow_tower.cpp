#include "slope_lab/chow_tower.hpp"

#include "slope_lab/errors.hpp"

namespace slope_lab {

ChowTower ChowTower::over_point() { return ChowTower(false); }
ChowTower ChowTower::over_curve() { return ChowTower(true); }

std::size_t ChowTower::size(int level) const {
  std::size_t s = curve_ ? 2 : 1;
  for (int k = 0; k < level; ++k) s *= static_cast<std::size_t>(ranks_[k]);
  return s;
}

int ChowTower::dimension(int level) const {
  int d = curve_ ? 1 : 0;
  for (int k = 0; k < level; ++k) d += ranks_[k] - 1;
  return d;
}

void ChowTower::add_bundle(int rank, std::vector<Element> chern) {
  if (rank < 1) throw Error(ErrorCode::ParamRange, "bundle rank must be positive");
  if (static_cast<int>(chern.size()) != rank) throw Error(ErrorCode::ParamRange, "need c_1..c_r");
  std::vector<std::vector<Rational>> raw;
  for (auto& c : chern) {
    if (c.level != top_level()) throw Error(ErrorCode::ParamRange, "Chern classes must live on the top level");
    raw.push_back(std::move(c.coeffs));
  }
  ranks_.push_back(rank);
  chern_.push_back(std::move(raw));
}

ChowTower::Element ChowTower::zero(int level) const { return {level, std::vector<Rational>(size(level), 0)}; }

ChowTower::Element ChowTower::constant(int level, const Rational& value) const {
  Element e = zero(level);
  e.coeffs[0] = value;
  return e;
}

ChowTower::Element ChowTower::one(int level) const { return constant(level, 1); }

ChowTower::Element ChowTower::fiber_class(int level) const {
  if (!curve_) throw Error(ErrorCode::ParamRange, "no fiber class over a point");
  Element base{0, {0, 1}};
  return pullback(base, level);
}

ChowTower::Element ChowTower::hyperplane(int level) const {
  if (level < 1 || level > top_level()) throw Error(ErrorCode::ParamRange, "hyperplane level out of range");
  // For a line bundle P(V) is the base itself and H = c_1(V).
  if (ranks_[level - 1] == 1) return pullback(Element{level - 1, chern_[level - 1][0]}, level);
  Element e = zero(level);
  // Block j holds the coefficient of H^j, each block being a level-1 element.
  e.coeffs[size(level - 1)] = 1;
  return e;
}

ChowTower::Element ChowTower::pullback(const Element& e, int to_level) const {
  if (to_level < e.level) throw Error(ErrorCode::ParamRange, "cannot push classes down");
  Element out = e;
  while (out.level < to_level) {
    std::vector<Rational> lifted(size(out.level + 1), 0);
    std::copy(out.coeffs.begin(), out.coeffs.end(), lifted.begin());
    out.coeffs = std::move(lifted);
    ++out.level;
  }
  return out;
}

ChowTower::Element ChowTower::add(const Element& a, const Element& b) const {
  const int level = std::max(a.level, b.level);
  Element x = pullback(a, level);
  Element y = pullback(b, level);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) x.coeffs[i] += y.coeffs[i];
  return x;
}

ChowTower::Element ChowTower::scale(const Element& a, const Rational& s) const {
  Element x = a;
  for (auto& c : x.coeffs) c *= s;
  return x;
}

std::vector<Rational> ChowTower::mul_raw(int level, const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) const {
  if (level == 0) {
    if (!curve_) return {a[0] * b[0]};
    return {a[0] * b[0], a[0] * b[1] + a[1] * b[0]};
  }
  const int r = ranks_[level - 1];
  const std::size_t block = size(level - 1);
  auto slice = [&](const std::vector<Rational>& v, int j) {
    return std::vector<Rational>(v.begin() + static_cast<long>(j * block),
                                 v.begin() + static_cast<long>((j + 1) * block));
  };
  std::vector<std::vector<Rational>> prod(static_cast<std::size_t>(2 * r - 1), std::vector<Rational>(block, 0));
  for (int i = 0; i < r; ++i) {
    auto ai = slice(a, i);
    bool zero_block = true;
    for (const auto& c : ai) zero_block = zero_block && c == 0;
    if (zero_block) continue;
    for (int j = 0; j < r; ++j) {
      auto term = mul_raw(level - 1, ai, slice(b, j));
      for (std::size_t t = 0; t < block; ++t) prod[i + j][t] += term[t];
    }
  }
  // H^r = sum_{i>=1} (-1)^{i-1} c_i H^{r-i}, from sum_{i=0}^r (-1)^i c_i H^{r-i} = 0.
  const auto& c = chern_[level - 1];
  for (int deg = 2 * r - 2; deg >= r; --deg) {
    const auto x = prod[deg];
    prod[deg].assign(block, 0);
    for (int i = 1; i <= r; ++i) {
      auto term = mul_raw(level - 1, x, c[i - 1]);
      const int sign = (i % 2 == 1) ? 1 : -1;
      for (std::size_t t = 0; t < block; ++t) prod[deg - i][t] += sign * term[t];
    }
  }
  std::vector<Rational> out;
  out.reserve(size(level));
  for (int j = 0; j < r; ++j) out.insert(out.end(), prod[j].begin(), prod[j].end());
  return out;
}

ChowTower::Element ChowTower::mul(const Element& a, const Element& b) const {
  const int level = std::max(a.level, b.level);
  Element x = pullback(a, level);
  Element y = pullback(b, level);
  return {level, mul_raw(level, x.coeffs, y.coeffs)};
}

ChowTower::Element ChowTower::power(const Element& a, unsigned exponent) const {
  Element result = one(a.level);
  for (unsigned i = 0; i < exponent; ++i) result = mul(result, a);
  return result;
}

Rational ChowTower::integrate(const Element& e) const {
  std::vector<Rational> coeffs = e.coeffs;
  for (int level = e.level; level > 0; --level) {
    const int r = ranks_[level - 1];
    const std::size_t block = size(level - 1);
    // pi_* H^{r-1} = 1 and pi_* H^j = 0 for j < r-1 once reduced.
    coeffs = std::vector<Rational>(coeffs.begin() + static_cast<long>((r - 1) * block), coeffs.end());
  }
  return curve_ ? coeffs[1] : coeffs[0];
}

}  // namespace slope_lab
