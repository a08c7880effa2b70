#pragma once

#include "slope_lab/rational.hpp"

namespace slope_lab {

/// d - 1 = A (N - 1) + eps with 0 <= eps < N - 1.
struct CastelnuovoData {
  Integer d;
  Integer N;
  Integer A;
  Integer eps;
};

CastelnuovoData castelnuovo_data(const Integer& d, const Integer& N);
Integer castelnuovo_genus_bound(const Integer& d, const Integer& N);

Integer min_degree_birational_subcanonical(const Integer& h0, const Integer& p);
Integer harris_bound(const Integer& n, const Integer& p, const Integer& h0);

Integer noether_I_bound(const Integer& k, const Integer& h0);
Integer noether_Ibis_bound(const Integer& k, const Integer& h0);
Integer noether_II_bound(const Integer& h0_M, bool kodaira_nonneg_and_dim_ge2);

/// L^n - L^{n-1} M is >= 2, = 0, or exactly 1 (the uncovered case).
enum class NoetherGap { ge2, eq0, one };

Integer noether_III_bound(const Integer& h0_M, const Integer& h0_L, const Integer& n, NoetherGap gap);

Integer castelnuovo2_bound(const Integer& n, const Integer& p, const Integer& k, const Integer& h0_M);
Integer castelnuovo3_bound(const Integer& n, const Integer& p, const Integer& h0_M);

Integer clifford_bound(const Integer& h0);

}  // namespace slope_lab
