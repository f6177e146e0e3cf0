#include "halphen/dh_core.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include "halphen/theta.hpp"

namespace halphen {

DHTrajectory::DHTrajectory(cplx tau0, cplx tau1, ode::Solution<cplx, 3> sol)
    : tau0_(tau0), tau1_(tau1), sol_(std::move(sol)) {
  points_.reserve(sol_.nodes().size());
  for (const auto& node : sol_.nodes()) {
    points_.push_back({tau_at(node.s), node.y, node.err_est});
  }
}

void DHTrajectory::write_csv(std::ostream& os) const {
  os << "tau_re,tau_im,t1_re,t1_im,t2_re,t2_im,t3_re,t3_im,err_est\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& p : points_) {
    os << p.tau.real() << ',' << p.tau.imag();
    for (const auto& t : p.state) {
      os << ',' << t.real() << ',' << t.imag();
    }
    os << ',' << p.err_est << '\n';
  }
}

DHTrajectory dh_integrate(const DHState& initial, TauPoint tau0, TauPoint tau1, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("dh_integrate: tol must be positive");
  }
  const cplx direction = tau1.value() - tau0.value();
  auto rhs = [direction](double, const DHState& t) {
    DHState d = dh_vector_field(t);
    for (auto& v : d) {
      v *= direction;
    }
    return d;
  };
  ode::Options opt;
  opt.rtol = tol;
  opt.atol = tol;
  auto sol = ode::integrate<cplx, 3>(rhs, 0.0, 1.0, initial, opt);
  return DHTrajectory(tau0.value(), tau1.value(), std::move(sol));
}

DHState dh_theta_solution(TauPoint tau) {
  DHState out;
  for (int i = 0; i < 3; ++i) {
    const ThetaJet j = theta_jet(i + 2, tau);
    if (std::abs(j.value) < 1e-300) {
      throw DomainError("theta vanishes at tau; logarithmic derivative undefined");
    }
    out[i] = 2.0 * j.d1 / j.value;
  }
  return out;
}

Triple<PiGradedQSeries> dh_theta_solution_series(int order) {
  // theta_2 starts at w^1, so its unit part is known one order short; pad the
  // input so every T_i is known through `order`.
  const Rational half(1, 2);
  return {half * log_derivative(theta_series(2, order + 1)).truncated(order),
          half * log_derivative(theta_series(3, order)),
          half * log_derivative(theta_series(4, order))};
}

Triple<PiGradedQSeries> dh_series_residual(const Triple<PiGradedQSeries>& T) {
  const Rational quarter(1, 4);
  Triple<PiGradedQSeries> out{T[0], T[1], T[2]};
  for (int i = 0; i < 3; ++i) {
    const auto& ti = T[i];
    const auto& tj = T[(i + 1) % 3];
    const auto& tk = T[(i + 2) % 3];
    out[i] = quarter * w_dw(ti) - (ti * (tj + tk) - tj * tk);
  }
  return out;
}

}  // namespace halphen
