#ifndef HALPHEN_DH_CORE_HPP
#define HALPHEN_DH_CORE_HPP

// The Darboux-Halphen system
//   t1' = t1 (t2 + t3) - t2 t3   (and cyclic),   ' = d/dtau,
// its integration along segments of the upper half-plane and Halphen's
// closed-form solution t_i = 2 (log theta_{i+1})'.

#include <ostream>
#include <utility>
#include <vector>

#include "halphen/ode.hpp"
#include "halphen/qseries.hpp"
#include "halphen/types.hpp"

namespace halphen {

template <class T>
Triple<T> dh_vector_field(const Triple<T>& t) {
  return {t[0] * (t[1] + t[2]) - t[1] * t[2], t[1] * (t[0] + t[2]) - t[0] * t[2],
          t[2] * (t[0] + t[1]) - t[0] * t[1]};
}

template <class T>
struct DarbouxResidual {
  T first;         // t3 (t1' + t2') - t2 (t1' + t3')
  T second;        // t2 (t1' + t3') - t1 (t2' + t3')
  T common_value;  // t3 (t1' + t2'), equal to 2 t1 t2 t3 on the DH field
};

/// Orthogonality condition for the confocal family x^2/t1 + y^2/t2 + z^2/t3 = 1,
/// evaluated on the DH specialization: the three products t3(t1'+t2'),
/// t2(t1'+t3'), t1(t2'+t3') must agree.
template <class T>
DarbouxResidual<T> darboux_condition_residual(const Triple<T>& t) {
  const Triple<T> d = dh_vector_field(t);
  const T p3 = t[2] * (d[0] + d[1]);
  const T p2 = t[1] * (d[0] + d[2]);
  const T p1 = t[0] * (d[1] + d[2]);
  return {p3 - p2, p2 - p1, p3};
}

struct DHPoint {
  cplx tau;
  DHState state;
  double err_est;
};

/// Integrated DH solution along the segment tau(s) = tau0 + s (tau1 - tau0),
/// s in [0, 1].
class DHTrajectory {
 public:
  DHTrajectory(cplx tau0, cplx tau1, ode::Solution<cplx, 3> sol);

  const std::vector<DHPoint>& points() const noexcept { return points_; }
  cplx tau_begin() const noexcept { return tau0_; }
  cplx tau_end() const noexcept { return tau1_; }
  const DHState& final_state() const { return points_.back().state; }

  /// Dense output at path parameter s in [0, 1].
  DHState state_at(double s) const { return sol_.at(s); }
  cplx tau_at(double s) const { return tau0_ + s * (tau1_ - tau0_); }

  /// CSV: tau_re,tau_im,t1_re,t1_im,t2_re,t2_im,t3_re,t3_im,err_est
  void write_csv(std::ostream& os) const;

 private:
  cplx tau0_;
  cplx tau1_;
  ode::Solution<cplx, 3> sol_;
  std::vector<DHPoint> points_;
};

/// Adaptive integration of the DH system from tau0 to tau1 along the straight
/// segment, with tol used as both absolute and relative tolerance. Throws
/// ode::IntegrationError on blow-up.
DHTrajectory dh_integrate(const DHState& initial, TauPoint tau0, TauPoint tau1, double tol);

/// Halphen's solution at tau, from termwise-differentiated theta sums.
DHState dh_theta_solution(TauPoint tau);

/// T_i = t_i / (pi i) as exact w-series: T_i = (1/2) w d/dw log theta_{i+1}.
/// Each series carries pi_power 0; multiply by (pi i) to recover t_i.
Triple<PiGradedQSeries> dh_theta_solution_series(int order);

/// Normalized DH identity residuals (1/4) w T_i' - [T_i (T_j + T_k) - T_j T_k].
/// With d/dtau = 2 pi i q d/dq = (pi i / 4) w d/dw and t = (pi i) T both sides
/// carry (pi i)^2, which cancels.
Triple<PiGradedQSeries> dh_series_residual(const Triple<PiGradedQSeries>& T);

}  // namespace halphen

#endif  // HALPHEN_DH_CORE_HPP
