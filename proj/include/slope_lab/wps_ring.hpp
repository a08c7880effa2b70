#pragma once

#include "slope_lab/rational.hpp"

#include <vector>

namespace slope_lab {

/// Weights (a_0, ..., a_{n+1}) of a weighted projective space P(a).
class WeightVector {
 public:
  /// Throws Error(InvalidWeights) unless there are >= 2 weights, all >= 1.
  explicit WeightVector(std::vector<Integer> weights);
  static WeightVector from_longs(const std::vector<long>& weights);

  const std::vector<Integer>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Integer& operator[](std::size_t i) const { return weights_[i]; }

  /// n+1 = length - 1, the dimension of P(a).
  long dim() const { return static_cast<long>(weights_.size()) - 1; }
  const Integer& weight_sum() const { return sum_; }
  const Integer& weight_product() const { return product_; }

  /// Count of weights equal to one.
  long ones() const;

  bool operator==(const WeightVector& other) const { return weights_ == other.weights_; }

 private:
  std::vector<Integer> weights_;
  Integer sum_;
  Integer product_;
};

inline constexpr long kDefaultOracleCap = 10000;
/// graded_dim refuses degrees above this (the counting array is dense).
inline constexpr long kGradedDimMaxDegree = 20000000;

bool is_well_formed(const WeightVector& a);

/// dim S(a)_m via a one-dimensional knapsack counting array.
Integer graded_dim(const WeightVector& a, const Integer& m);

/// Independent nested enumeration of exponent tuples, for testing graded_dim.
Integer graded_dim_oracle(const WeightVector& a, long m, long cap = kDefaultOracleCap);

Integer cartier_index(const WeightVector& a);
Rational taut_top_self_intersection(const WeightVector& a);
Integer canonical_coefficient(const WeightVector& a);

/// h^i(P(a), O(m)).
Integer wps_cohomology_dim(const WeightVector& a, const Integer& m, long i);

}  // namespace slope_lab
