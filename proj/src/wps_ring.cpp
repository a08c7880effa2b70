#include "slope_lab/wps_ring.hpp"

#include "slope_lab/errors.hpp"

#include <functional>

namespace slope_lab {

WeightVector::WeightVector(std::vector<Integer> weights) : weights_(std::move(weights)), sum_(0), product_(1) {
  if (weights_.size() < 2) throw Error(ErrorCode::InvalidWeights, "need at least two weights");
  for (const auto& w : weights_) {
    if (w < 1) throw Error(ErrorCode::InvalidWeights, "weights must be positive, got " + w.get_str());
    sum_ += w;
    product_ *= w;
  }
}

WeightVector WeightVector::from_longs(const std::vector<long>& weights) {
  std::vector<Integer> big;
  big.reserve(weights.size());
  for (long w : weights) big.emplace_back(w);
  return WeightVector(std::move(big));
}

long WeightVector::ones() const {
  long count = 0;
  for (const auto& w : weights_) count += (w == 1);
  return count;
}

bool is_well_formed(const WeightVector& a) {
  const auto& w = a.weights();
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    Integer g = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j != skip) g = gcd(g, w[j]);
    }
    if (g != 1) return false;
  }
  return true;
}

Integer graded_dim(const WeightVector& a, const Integer& m) {
  if (m < 0) return 0;
  if (m > kGradedDimMaxDegree) {
    throw Error(ErrorCode::DegreeTooLarge, "graded_dim degree " + m.get_str() + " above " +
                                               std::to_string(kGradedDimMaxDegree));
  }
  const long top = m.get_si();
  std::vector<Integer> count(static_cast<std::size_t>(top) + 1, 0);
  count[0] = 1;
  for (const auto& weight : a.weights()) {
    if (weight > top) continue;
    const long w = weight.get_si();
    for (long k = w; k <= top; ++k) count[k] += count[k - w];
  }
  return count[top];
}

Integer graded_dim_oracle(const WeightVector& a, long m, long cap) {
  if (m > cap) {
    throw Error(ErrorCode::CapExceeded, "oracle degree " + std::to_string(m) + " above cap " + std::to_string(cap));
  }
  if (m < 0) return 0;
  std::vector<long> w;
  for (const auto& x : a.weights()) w.push_back(x > m ? m + 1 : x.get_si());
  // Enumerate exponents of every weight but the first; the first exponent is
  // then forced, and exists iff the remainder is divisible by w[0].
  Integer total = 0;
  std::function<void(std::size_t, long)> walk = [&](std::size_t idx, long remaining) {
    if (idx == w.size()) {
      if (remaining % w[0] == 0) total += 1;
      return;
    }
    for (long used = 0; used <= remaining; used += w[idx]) walk(idx + 1, remaining - used);
  };
  walk(1, m);
  return total;
}

Integer cartier_index(const WeightVector& a) {
  Integer l = 1;
  for (const auto& w : a.weights()) l = lcm(l, w);
  return l;
}

Rational taut_top_self_intersection(const WeightVector& a) { return Rational(Integer(1), a.weight_product()); }

Integer canonical_coefficient(const WeightVector& a) { return -a.weight_sum(); }

Integer wps_cohomology_dim(const WeightVector& a, const Integer& m, long i) {
  if (i < 0 || i > a.dim()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "cohomology index " + std::to_string(i) + " outside [0, " + std::to_string(a.dim()) + "]");
  }
  if (i == 0) return graded_dim(a, m);
  if (i < a.dim()) return 0;
  return graded_dim(a, -m - a.weight_sum());
}

}  // namespace slope_lab
