#include "slope_lab/bound_lib.hpp"

#include "slope_lab/errors.hpp"

#include <algorithm>

namespace slope_lab {

namespace {

void require_sections(const Integer& h0, const Integer& minimum, const char* what) {
  if (h0 < minimum) {
    throw Error(ErrorCode::TooFewSections,
                std::string(what) + " needs h0 >= " + minimum.get_str() + ", got " + h0.get_str());
  }
}

void require_nonnegative(const Integer& v, const char* what) {
  if (v < 0) throw Error(ErrorCode::ParamRange, std::string(what) + " must be nonnegative, got " + v.get_str());
}

}  // namespace

CastelnuovoData castelnuovo_data(const Integer& d, const Integer& N) {
  if (N < 2) throw Error(ErrorCode::AmbientTooSmall, "ambient dimension N must be >= 2, got " + N.get_str());
  if (d < 1) throw Error(ErrorCode::ParamRange, "degree must be positive, got " + d.get_str());
  CastelnuovoData data{d, N, 0, 0};
  Integer span = N - 1;
  mpz_fdiv_qr(data.A.get_mpz_t(), data.eps.get_mpz_t(), Integer(d - 1).get_mpz_t(), span.get_mpz_t());
  return data;
}

Integer castelnuovo_genus_bound(const Integer& d, const Integer& N) {
  auto data = castelnuovo_data(d, N);
  return binomial(data.A, 2) * (N - 1) + data.A * data.eps;
}

Integer min_degree_birational_subcanonical(const Integer& h0, const Integer& p) {
  require_sections(h0, 2, "min_degree_birational_subcanonical");
  require_nonnegative(p, "p");
  return (p + 1) * (h0 - 2) + 2;
}

Integer harris_bound(const Integer& n, const Integer& p, const Integer& h0) {
  if (n < 1) throw Error(ErrorCode::ParamRange, "n must be positive");
  require_nonnegative(p, "p");
  require_sections(h0, n + 1, "harris_bound");
  return (n + p) * (h0 - 1 - n) + 2;
}

Integer noether_I_bound(const Integer& k, const Integer& h0) {
  require_nonnegative(k, "k");
  require_sections(h0, k + 1, "noether_I_bound");
  return std::max<Integer>(2 * h0 - 2 * k, 2);
}

Integer noether_Ibis_bound(const Integer& k, const Integer& h0) {
  require_nonnegative(k, "k");
  require_sections(h0, k + 1, "noether_Ibis_bound");
  return h0 - k;
}

Integer noether_II_bound(const Integer& h0_M, bool kodaira_nonneg_and_dim_ge2) {
  require_sections(h0_M, 1, "noether_II_bound");
  return kodaira_nonneg_and_dim_ge2 ? Integer(2 * h0_M - 2) : Integer(h0_M - 1);
}

Integer noether_III_bound(const Integer& h0_M, const Integer& h0_L, const Integer& n, NoetherGap gap) {
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "noether_III needs n >= 2, got " + n.get_str());
  switch (gap) {
    case NoetherGap::ge2: return 2 * h0_M - 2;
    case NoetherGap::eq0: return 2 * h0_L - 2 * n;
    case NoetherGap::one: break;
  }
  throw Error(ErrorCode::GapOne, "the case L^n - L^{n-1} M = 1 is not covered");
}

Integer castelnuovo2_bound(const Integer& n, const Integer& p, const Integer& k, const Integer& h0_M) {
  if (k < 0 || k >= n) throw Error(ErrorCode::InvalidCodim, "need 0 <= k < n, got k=" + k.get_str() + " n=" + n.get_str());
  require_nonnegative(p, "p");
  return (n + p - k + 2) * (h0_M - k);
}

Integer castelnuovo3_bound(const Integer& n, const Integer& p, const Integer& h0_M) {
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "castelnuovo3 needs n >= 2, got " + n.get_str());
  require_nonnegative(p, "p");
  return (n + p) * (h0_M - 2) + 2;
}

Integer clifford_bound(const Integer& h0) {
  require_sections(h0, 1, "clifford_bound");
  return 2 * h0 - 2;
}

}  // namespace slope_lab
