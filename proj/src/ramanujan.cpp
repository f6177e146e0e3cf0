#include "halphen/ramanujan.hpp"

namespace halphen {

MapConstants map_constants() {
  const cplx a1 = 2.0 * pi_i / 12.0;
  return {a1, 12.0 * a1 * a1, 8.0 * a1 * a1 * a1};
}

Triple<PiGradedQSeries> ramanujan_series_residual(int order) {
  const PiGradedQSeries e2 = eisenstein_series(2, order);
  const PiGradedQSeries e4 = eisenstein_series(4, order);
  const PiGradedQSeries e6 = eisenstein_series(6, order);
  return {theta_q(e2) - Rational(1, 12) * (e2 * e2 - e4),
          theta_q(e4) - Rational(1, 3) * (e2 * e4 - e6),
          theta_q(e6) - Rational(1, 2) * (e2 * e6 - e4 * e4)};
}

EisensteinState dh_to_eisenstein(const DHState& t) {
  const auto [a1, a2, a3] = map_constants();
  const cplx s1 = t[0] + t[1] + t[2];
  const cplx s2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
  const cplx s3 = t[0] * t[1] * t[2];
  // x^2:  -4 s1 = -12 u,            u = a1 E2
  // x^1:   4 s2 = 12 u^2 - a2 E4
  // x^0:  -4 s3 = -4 u^3 + a2 E4 u - a3 E6
  const cplx u = s1 / 3.0;
  const cplx e2 = u / a1;
  const cplx e4 = (12.0 * u * u - 4.0 * s2) / a2;
  const cplx e6 = (-4.0 * u * u * u + a2 * e4 * u + 4.0 * s3) / a3;
  return {e2, e4, e6};
}

Triple<cplx> conjugacy_residual(const DHState& t) {
  // E_k = e_k / (pi i)^{k/2}, so row k of the Jacobian is the normalized row
  // scaled by the same factor.
  const auto jac = dh_to_eisenstein_normalized_jacobian(t);
  const Triple<cplx> scale{1.0 / pi_i, 1.0 / (pi_i * pi_i), 1.0 / (pi_i * pi_i * pi_i)};
  const DHState f = dh_vector_field(t);
  const Triple<cplx> r = ramanujan_vector_field(dh_to_eisenstein(t));
  Triple<cplx> out;
  for (int k = 0; k < 3; ++k) {
    const cplx jf = jac[k][0] * f[0] + jac[k][1] * f[1] + jac[k][2] * f[2];
    out[k] = scale[k] * jf - 2.0 * pi_i * r[k];
  }
  return out;
}

}  // namespace halphen
