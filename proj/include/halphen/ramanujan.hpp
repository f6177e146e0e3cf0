#ifndef HALPHEN_RAMANUJAN_HPP
#define HALPHEN_RAMANUJAN_HPP

// Ramanujan's relations
//   q dE2/dq = (E2^2 - E4)/12,  q dE4/dq = (E2 E4 - E6)/3,  q dE6/dq = (E2 E6 - E4^2)/2
// and the polynomial map C^3 -> C^3 obtained by matching coefficients of
//   4 (x - t1)(x - t2)(x - t3) = 4 (x - a1 E2)^3 - a2 E4 (x - a1 E2) - a3 E6,
// which carries the Darboux-Halphen field onto 2 pi i times the Ramanujan field.

#include "halphen/dh_core.hpp"
#include "halphen/qseries.hpp"
#include "halphen/types.hpp"

namespace halphen {

using EisensteinState = Triple<cplx>;  // (E2, E4, E6)

struct MapConstants {
  cplx a1;
  cplx a2;
  cplx a3;
};

/// a1 = 2 pi i / 12, a2 = 12 a1^2, a3 = 8 a1^3.
MapConstants map_constants();

template <class T>
Triple<T> ramanujan_vector_field(const Triple<T>& e) {
  return {(e[0] * e[0] - e[1]) / T(12), (e[0] * e[1] - e[2]) / T(3),
          (e[0] * e[2] - e[1] * e[1]) / T(2)};
}

/// theta_q E_k minus the right-hand sides, as exact q-series through `order`.
Triple<PiGradedQSeries> ramanujan_series_residual(int order);

/// Triangular solve of the coefficient matching: E2 from x^2, E4 from x^1,
/// E6 from x^0.
EisensteinState dh_to_eisenstein(const DHState& t);

// The exact route. With e2 = (pi i) E2, e4 = (pi i)^2 E4, e6 = (pi i)^3 E6 the
// map becomes integral in the elementary symmetric functions s1, s2, s3:
//   e2 = 2 s1,  e4 = 4 s1^2 - 12 s2,  e6 = 8 s1^3 - 36 s1 s2 + 108 s3,
// and the conjugacy d e/d tau = 2 pi i R(E) turns into
//   e2' = (e2^2 - e4)/6,  e4' = 2 (e2 e4 - e6)/3,  e6' = e2 e6 - e4^2.

template <class T>
Triple<T> dh_to_eisenstein_normalized(const Triple<T>& t) {
  const T s1 = t[0] + t[1] + t[2];
  const T s2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
  const T s3 = t[0] * t[1] * t[2];
  return {T(2) * s1, T(4) * s1 * s1 - T(12) * s2,
          T(8) * s1 * s1 * s1 - T(36) * s1 * s2 + T(108) * s3};
}

/// Row r, column i: d e_{2(r+1)} / d t_i.
template <class T>
std::array<Triple<T>, 3> dh_to_eisenstein_normalized_jacobian(const Triple<T>& t) {
  const T s1 = t[0] + t[1] + t[2];
  const T s2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
  std::array<Triple<T>, 3> jac;
  for (int i = 0; i < 3; ++i) {
    const T ds2 = s1 - t[i];
    const T ds3 = t[(i + 1) % 3] * t[(i + 2) % 3];
    jac[0][i] = T(2);
    jac[1][i] = T(8) * s1 - T(12) * ds2;
    jac[2][i] = T(24) * s1 * s1 - T(36) * (s2 + s1 * ds2) + T(108) * ds3;
  }
  return jac;
}

template <class T>
Triple<T> conjugacy_residual_normalized(const Triple<T>& t) {
  const auto jac = dh_to_eisenstein_normalized_jacobian(t);
  const auto f = dh_vector_field(t);
  const auto e = dh_to_eisenstein_normalized(t);
  const Triple<T> rhs{(e[0] * e[0] - e[1]) / T(6), T(2) * (e[0] * e[1] - e[2]) / T(3),
                      e[0] * e[2] - e[1] * e[1]};
  Triple<T> out;
  for (int r = 0; r < 3; ++r) {
    out[r] = jac[r][0] * f[0] + jac[r][1] * f[1] + jac[r][2] * f[2] - rhs[r];
  }
  return out;
}

/// J(t) f_DH(t) - 2 pi i R(E(t)), J the analytic Jacobian of dh_to_eisenstein.
Triple<cplx> conjugacy_residual(const DHState& t);

}  // namespace halphen

#endif  // HALPHEN_RAMANUJAN_HPP
