#pragma once

#include "slope_lab/rational.hpp"

#include <vector>

namespace slope_lab {

/// Numerical Chow ring of an iterated projective bundle over a point or a curve.
/// Level 0 is the base; level k+1 is P(V_k) (quotients) over level k, where V_k
/// has rank r_k and Chern classes given at level k.
class ChowTower {
 public:
  struct Element {
    int level = 0;
    std::vector<Rational> coeffs;
  };

  static ChowTower over_point();
  /// Base ring Q[F]/(F^2) with the class of a point F integrating to 1.
  static ChowTower over_curve();

  int top_level() const { return static_cast<int>(ranks_.size()); }
  /// Dimension of the variety at the given level.
  int dimension(int level) const;

  /// Adds P(V) over the current top level; chern = (c_1, ..., c_r) at the top level.
  void add_bundle(int rank, std::vector<Element> chern);

  Element zero(int level) const;
  Element one(int level) const;
  Element constant(int level, const Rational& value) const;
  /// The point class of the base curve, pulled back to the given level.
  Element fiber_class(int level) const;
  /// Tautological class of P(V_{level-1}) at the given level (>= 1).
  Element hyperplane(int level) const;
  Element pullback(const Element& e, int to_level) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& s) const;
  Element mul(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned exponent) const;

  /// Degree of the top-dimensional part.
  Rational integrate(const Element& e) const;

 private:
  explicit ChowTower(bool curve) : curve_(curve) {}
  std::size_t size(int level) const;
  std::vector<Rational> mul_raw(int level, const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  bool curve_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::vector<Rational>>> chern_;
};

}  // namespace slope_lab
