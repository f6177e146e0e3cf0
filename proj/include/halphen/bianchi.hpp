#ifndef HALPHEN_BIANCHI_HPP
#define HALPHEN_BIANCHI_HPP

// Self-dual Bianchi IX metrics
//   ds^2 = c0^2 dr^2 + c1^2 (s^1)^2 + c2^2 (s^2)^2 + c3^2 (s^3)^2,  c0 = c1 c2 c3,
// reduced to first-order systems: the classical Omega form of Darboux-Halphen,
// the coupled (Omega, A) system of Tod and Hitchin with its theta solutions,
// and the conformal factors that make the metric Einstein.

#include <array>
#include <optional>
#include <ostream>

#include "halphen/ode.hpp"
#include "halphen/types.hpp"

namespace halphen::bianchi {

/// Diagonal Bianchi IX coefficients, all strictly positive.
class MetricCoeffs {
 public:
  explicit MetricCoeffs(const Triple<double>& c);
  const Triple<double>& c() const noexcept { return c_; }
  double c0() const noexcept { return c_[0] * c_[1] * c_[2]; }

 private:
  Triple<double> c_;
};

/// Selects the upper (self_dual) or lower (anti_self_dual) sign of
/// R_{0i} = +/- R_{jk}. In the reduced equations the self-dual choice takes the
/// minus of every -/+, which is the branch that reproduces the DH field.
enum class SelfDualitySign { self_dual = 1, anti_self_dual = -1 };

constexpr double sign_value(SelfDualitySign s) { return s == SelfDualitySign::self_dual ? 1.0 : -1.0; }

/// The constants lambda_i appearing in the curvature condition are forced to
/// be either all zero (self-dual connection, Euler-top system; not pursued) or
/// all equal to +/-2 after a sign change of the c_i.
enum class LambdaCase { connection_self_dual, curvature_self_dual };

struct LambdaConstants {
  LambdaCase kind;
  Triple<double> lambda;
};

std::array<LambdaConstants, 2> lambda_cases(SelfDualitySign sign);

/// lambda_i - sign * lambda_j lambda_k / 2 for cyclic (i, j, k).
Triple<double> lambda_relation_residual(const Triple<double>& lambda, SelfDualitySign sign);

/// w^i_0 = (dc_i/dr) / c0  (coefficient of s^i),
/// w^i_j = -eps_ijk (c_i^2 + c_j^2 - c_k^2) / (c_i c_j)  (coefficient of s^k).
struct ConnectionOneForm {
  Triple<double> w_i0;
  std::array<Triple<double>, 3> w_ij;  // w_ij[i][j], zero diagonal
};

ConnectionOneForm connection_one_form(const MetricCoeffs& c, const Triple<double>& dc_dr);

/// LHS - RHS of d/dr ln c_i^2 = -/+ 2 (c_j^2 + c_k^2 - c_i^2 - 2 c_j c_k).
Triple<double> sd_reduced_residual(const MetricCoeffs& c, const Triple<double>& dc_dr,
                                   SelfDualitySign sign);

template <class T>
struct OmegaAState {
  Triple<T> omega;
  std::optional<Triple<T>> a;
};

/// Omega_i = 2 c_j c_k.
OmegaAState<double> omega_from_c(const MetricCoeffs& c);
/// c_i^2 = Omega_j Omega_k / (2 Omega_i); every ratio must be positive.
MetricCoeffs c_from_omega(const Triple<double>& omega);

/// dOmega_k/dr = -/+ (Omega_i Omega_j - Omega_k Omega_i - Omega_k Omega_j).
template <class T>
Triple<T> classical_dh_omega_field(const Triple<T>& w, SelfDualitySign sign) {
  const T s = sign == SelfDualitySign::self_dual ? T(1) : T(-1);
  Triple<T> out;
  for (int k = 0; k < 3; ++k) {
    const T& wi = w[(k + 1) % 3];
    const T& wj = w[(k + 2) % 3];
    out[k] = -s * (wi * wj - w[k] * wi - w[k] * wj);
  }
  return out;
}

template <class T>
struct CoupledDerivative {
  Triple<T> omega_dot;
  Triple<T> a_dot;
};

/// dOmega_i/dt = -Omega_j Omega_k + Omega_i (A_j + A_k),
/// dA_i/dt = -A_j A_k + A_i (A_j + A_k).
template <class T>
CoupledDerivative<T> coupled_field(const OmegaAState<T>& s) {
  if (!s.a) {
    throw std::invalid_argument("coupled_field needs the A variables");
  }
  const Triple<T>& w = s.omega;
  const Triple<T>& a = *s.a;
  CoupledDerivative<T> out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    out.omega_dot[i] = -w[j] * w[k] + w[i] * (a[j] + a[k]);
    out.a_dot[i] = -a[j] * a[k] + a[i] * (a[j] + a[k]);
  }
  return out;
}

/// A_i(t) = 2 d/dt ln theta_{i+1}(i t), t > 0.
Triple<double> theta_A_solution(double t);

/// Right-hand side of the Omega system with the theta solution substituted for A:
/// dOmega_1/dt = -Omega_2 Omega_3 + 2 Omega_1 d/dt ln(theta_3 theta_4), cyclic.
Triple<double> omega_theta_field(double t, const Triple<double>& omega);

using OmegaTrajectory = ode::Solution<double, 3>;

OmegaTrajectory omega_theta_flow(const Triple<double>& omega0, double t0, double t1, double tol);

/// Omega_i = 1/(t + q0) + 2 d/dt ln theta_{i+1}(i t).
Triple<double> flat_family(double t, double q0);
/// F = C (t + q0)^2 Omega_1 Omega_2 Omega_3.
double flat_conformal_factor(double t, double q0, double scale);

struct TodHitchinParams {
  cplx p;
  cplx q;
  double lambda;  // cosmological constant
};

enum class RealityClass {
  negative_lambda,  // p real, Re q = 1/2
  positive_lambda,  // q real, Re p = 1/2
  unclassified,
};

RealityClass reality_class(const TodHitchinParams& params, double tol = 1e-12);

/// theta[p, q](0, i t) and its characteristic derivative d/dq.
cplx tod_hitchin_theta(cplx p, cplx q, double t);
cplx tod_hitchin_theta_dq(cplx p, cplx q, double t);

/// Omega_1 = -(i/2) theta_3 theta_4 d/dq theta[p, q + 1/2] / (e^{pi i p} theta[p, q]).
cplx tod_hitchin_omega1(const TodHitchinParams& params, double t);

/// Candidate closed form shared by Omega_2 and Omega_3. The two cannot both be
/// right, so this value fills both slots unverified; `resolved` stays false and
/// nothing in the library relies on it.
struct CandidateOmega23 {
  cplx omega2;
  cplx omega3;
  static constexpr bool resolved = false;
};

CandidateOmega23 tod_hitchin_candidate_omega23(const TodHitchinParams& params, double t);

/// theta_2^4 Omega_1^2 - theta_3^4 Omega_2^2 + theta_4^4 Omega_3^2
///   - (pi^2/4) theta_2^4 theta_3^4 theta_4^4,  thetas at i t.
cplx constraint_residual(const Triple<cplx>& omega, double t);

/// F = 2/(pi Lambda) Omega_1 Omega_2 Omega_3 / (d/dq ln theta[p, q])^2.
cplx lambda_conformal_factor(const Triple<cplx>& omega, const TodHitchinParams& params, double t);

}  // namespace halphen::bianchi

#endif  // HALPHEN_BIANCHI_HPP
