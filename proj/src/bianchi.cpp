#include "halphen/bianchi.hpp"

#include <cmath>
#include <string>

#include "halphen/theta.hpp"

namespace halphen::bianchi {

MetricCoeffs::MetricCoeffs(const Triple<double>& c) : c_(c) {
  for (double v : c) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("Bianchi IX coefficients must be positive and finite");
    }
  }
}

std::array<LambdaConstants, 2> lambda_cases(SelfDualitySign sign) {
  const double l = 2.0 * sign_value(sign);
  return {LambdaConstants{LambdaCase::connection_self_dual, {0.0, 0.0, 0.0}},
          LambdaConstants{LambdaCase::curvature_self_dual, {l, l, l}}};
}

Triple<double> lambda_relation_residual(const Triple<double>& lambda, SelfDualitySign sign) {
  Triple<double> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = lambda[i] - sign_value(sign) * 0.5 * lambda[(i + 1) % 3] * lambda[(i + 2) % 3];
  }
  return out;
}

ConnectionOneForm connection_one_form(const MetricCoeffs& mc, const Triple<double>& dc_dr) {
  const auto& c = mc.c();
  ConnectionOneForm out{};
  for (int i = 0; i < 3; ++i) {
    out.w_i0[i] = dc_dr[i] / mc.c0();
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        continue;
      }
      const int k = 3 - i - j;
      // +1 when (i, j, k) is a cyclic permutation of (0, 1, 2).
      const double eps = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
      out.w_ij[i][j] = -eps * (c[i] * c[i] + c[j] * c[j] - c[k] * c[k]) / (c[i] * c[j]);
    }
  }
  return out;
}

Triple<double> sd_reduced_residual(const MetricCoeffs& mc, const Triple<double>& dc_dr,
                                   SelfDualitySign sign) {
  const auto& c = mc.c();
  Triple<double> out;
  for (int i = 0; i < 3; ++i) {
    const double cj = c[(i + 1) % 3];
    const double ck = c[(i + 2) % 3];
    const double lhs = 2.0 * dc_dr[i] / c[i];
    const double rhs = -2.0 * sign_value(sign) * (cj * cj + ck * ck - c[i] * c[i] - 2.0 * cj * ck);
    out[i] = lhs - rhs;
  }
  return out;
}

OmegaAState<double> omega_from_c(const MetricCoeffs& mc) {
  const auto& c = mc.c();
  return {{2.0 * c[1] * c[2], 2.0 * c[2] * c[0], 2.0 * c[0] * c[1]}, std::nullopt};
}

MetricCoeffs c_from_omega(const Triple<double>& w) {
  Triple<double> c;
  for (int i = 0; i < 3; ++i) {
    const double sq = w[(i + 1) % 3] * w[(i + 2) % 3] / (2.0 * w[i]);
    if (!(sq > 0.0)) {
      throw DomainError("Omega_j Omega_k / Omega_i must be positive for a real metric");
    }
    c[i] = std::sqrt(sq);
  }
  return MetricCoeffs(c);
}

Triple<double> theta_A_solution(double t) {
  if (!(t > 0.0)) {
    throw DomainError("theta_A_solution needs t > 0");
  }
  const TauPoint tau(cplx(0.0, t));
  Triple<double> out;
  for (int i = 0; i < 3; ++i) {
    const ThetaJet j = theta_jet(i + 2, tau);
    // d/dt theta(i t) = i theta'(i t); theta(i t) is real.
    out[i] = (2.0 * cplx(0.0, 1.0) * j.d1 / j.value).real();
  }
  return out;
}

Triple<double> omega_theta_field(double t, const Triple<double>& w) {
  const Triple<double> a = theta_A_solution(t);
  Triple<double> out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    out[i] = -w[j] * w[k] + w[i] * (a[j] + a[k]);
  }
  return out;
}

OmegaTrajectory omega_theta_flow(const Triple<double>& omega0, double t0, double t1, double tol) {
  if (!(t0 > 0.0) || !(t1 > 0.0)) {
    throw DomainError("omega_theta_flow needs t0, t1 > 0");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("omega_theta_flow: tol must be positive");
  }
  ode::Options opt;
  opt.rtol = tol;
  opt.atol = tol;
  return ode::integrate<double, 3>(
      [](double t, const Triple<double>& w) { return omega_theta_field(t, w); }, t0, t1, omega0,
      opt);
}

Triple<double> flat_family(double t, double q0) {
  if (!(t > 0.0)) {
    throw DomainError("flat_family needs t > 0");
  }
  if (t + q0 == 0.0) {
    throw DomainError("flat_family has a pole at t = -q0");
  }
  const Triple<double> a = theta_A_solution(t);
  const double u = 1.0 / (t + q0);
  return {u + a[0], u + a[1], u + a[2]};
}

double flat_conformal_factor(double t, double q0, double scale) {
  const Triple<double> w = flat_family(t, q0);
  return scale * (t + q0) * (t + q0) * w[0] * w[1] * w[2];
}

RealityClass reality_class(const TodHitchinParams& prm, double tol) {
  const bool p_real = std::abs(prm.p.imag()) <= tol;
  const bool q_real = std::abs(prm.q.imag()) <= tol;
  if (p_real && std::abs(prm.q.real() - 0.5) <= tol) {
    return RealityClass::negative_lambda;
  }
  if (q_real && std::abs(prm.p.real() - 0.5) <= tol) {
    return RealityClass::positive_lambda;
  }
  return RealityClass::unclassified;
}

cplx tod_hitchin_theta(cplx p, cplx q, double t) {
  return theta_char_eval({p, q, 0.0, cplx(0.0, t)});
}

cplx tod_hitchin_theta_dq(cplx p, cplx q, double t) {
  return theta_char_dz({p, q, 0.0, cplx(0.0, t)});
}

namespace {

cplx checked_denominator(const TodHitchinParams& prm, double t) {
  const cplx den = std::exp(pi_i * prm.p) * tod_hitchin_theta(prm.p, prm.q, t);
  if (std::abs(den) < 1e-300) {
    throw DomainError("theta[p, q](0, i t) vanishes");
  }
  return den;
}

cplx classical_theta(int which, double t) {
  return theta_jet(which, TauPoint(cplx(0.0, t))).value;
}

}  // namespace

cplx tod_hitchin_omega1(const TodHitchinParams& prm, double t) {
  if (!(t > 0.0)) {
    throw DomainError("Tod-Hitchin family needs t > 0");
  }
  const cplx den = checked_denominator(prm, t);
  const cplx num = tod_hitchin_theta_dq(prm.p, prm.q + 0.5, t);
  return -0.5 * cplx(0.0, 1.0) * classical_theta(3, t) * classical_theta(4, t) * num / den;
}

CandidateOmega23 tod_hitchin_candidate_omega23(const TodHitchinParams& prm, double t) {
  if (!(t > 0.0)) {
    throw DomainError("Tod-Hitchin family needs t > 0");
  }
  const cplx den = checked_denominator(prm, t);
  const cplx num = tod_hitchin_theta_dq(prm.p + 0.5, prm.q + 0.5, t);
  const cplx v = 0.5 * cplx(0.0, 1.0) * classical_theta(2, t) * classical_theta(4, t) * num / den;
  return {v, v};
}

cplx constraint_residual(const Triple<cplx>& w, double t) {
  if (!(t > 0.0)) {
    throw DomainError("constraint_residual needs t > 0");
  }
  const cplx th2 = std::pow(classical_theta(2, t), 4);
  const cplx th3 = std::pow(classical_theta(3, t), 4);
  const cplx th4 = std::pow(classical_theta(4, t), 4);
  const cplx lhs = th2 * w[0] * w[0] - th3 * w[1] * w[1] + th4 * w[2] * w[2];
  return lhs - pi * pi / 4.0 * th2 * th3 * th4;
}

cplx lambda_conformal_factor(const Triple<cplx>& w, const TodHitchinParams& prm, double t) {
  if (prm.lambda == 0.0) {
    throw DomainError("lambda_conformal_factor needs a nonzero cosmological constant");
  }
  const cplx th = tod_hitchin_theta(prm.p, prm.q, t);
  if (std::abs(th) < 1e-300) {
    throw DomainError("theta[p, q](0, i t) vanishes");
  }
  const cplx dlog = tod_hitchin_theta_dq(prm.p, prm.q, t) / th;
  return 2.0 / (pi * prm.lambda) * w[0] * w[1] * w[2] / (dlog * dlog);
}

}  // namespace halphen::bianchi
