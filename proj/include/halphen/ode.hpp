#ifndef HALPHEN_ODE_HPP
#define HALPHEN_ODE_HPP

// Embedded Runge-Kutta 5(4) integrator (Dormand-Prince coefficients) with PI
// step-size control and the standard 4th-order continuous extension. Works on
// fixed-size arrays of double or std::complex<double>; the independent
// variable is a real path parameter, so complex-time problems are integrated
// along a straight segment by the caller.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halphen::ode {

class IntegrationError : public std::runtime_error {
 public:
  enum class Kind { step_underflow, non_finite, too_many_steps };

  IntegrationError(Kind kind, double at, const std::string& what)
      : std::runtime_error(what), kind_(kind), at_(at) {}

  Kind kind() const noexcept { return kind_; }
  /// Path parameter at which the integrator gave up.
  double at() const noexcept { return at_; }

 private:
  Kind kind_;
  double at_;
};

struct Options {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0: pick automatically
  double min_step = 1e-14;    // relative to |s1 - s0|
  std::size_t max_steps = 200'000;
};

template <class Scalar, std::size_t N>
using State = std::array<Scalar, N>;

template <class Scalar, std::size_t N>
struct Node {
  double s;
  State<Scalar, N> y;
  double err_est;  // max-abs local error estimate of the step that produced y
};

/// Accepted nodes plus per-step interpolation data.
template <class Scalar, std::size_t N>
class Solution {
 public:
  using Y = State<Scalar, N>;

  const std::vector<Node<Scalar, N>>& nodes() const noexcept { return nodes_; }
  double s_begin() const { return nodes_.front().s; }
  double s_end() const { return nodes_.back().s; }
  const Y& final_state() const { return nodes_.back().y; }

  /// Continuous extension, valid for s between s_begin and s_end.
  Y at(double s) const {
    const bool forward = s_end() >= s_begin();
    const double lo = forward ? s_begin() : s_end();
    const double hi = forward ? s_end() : s_begin();
    if (s < lo || s > hi) {
      throw std::out_of_range("dense output requested outside the integrated interval");
    }
    if (nodes_.size() == 1) {
      return nodes_.front().y;
    }
    // Find step k with s in [s_k, s_{k+1}].
    std::size_t k = 0;
    {
      std::size_t lo_i = 0;
      std::size_t hi_i = nodes_.size() - 1;
      while (hi_i - lo_i > 1) {
        const std::size_t mid = (lo_i + hi_i) / 2;
        const bool before = forward ? (nodes_[mid].s <= s) : (nodes_[mid].s >= s);
        (before ? lo_i : hi_i) = mid;
      }
      k = lo_i;
    }
    const double h = nodes_[k + 1].s - nodes_[k].s;
    const double th = (s - nodes_[k].s) / h;
    const double th1 = 1.0 - th;
    const auto& r = dense_[k];
    Y out{};
    for (std::size_t i = 0; i < N; ++i) {
      out[i] = r[0][i] + th * (r[1][i] + th1 * (r[2][i] + th * (r[3][i] + th1 * r[4][i])));
    }
    return out;
  }

 private:
  template <class S, std::size_t M, class F>
  friend Solution<S, M> integrate(F&&, double, double, const State<S, M>&, const Options&);

  std::vector<Node<Scalar, N>> nodes_;
  std::vector<std::array<Y, 5>> dense_;
};

namespace detail {

template <class Scalar, std::size_t N>
bool all_finite(const State<Scalar, N>& y) {
  return std::all_of(y.begin(), y.end(), [](const Scalar& v) {
    return std::isfinite(std::abs(v));
  });
}

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
inline constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace detail

/// Integrate y' = f(s, y) from s0 to s1 (either direction). A step is accepted
/// when max_i |err_i| / (atol + rtol max(|y_i|, |y_new_i|)) <= 1.
template <class Scalar, std::size_t N, class F>
Solution<Scalar, N> integrate(F&& f, double s0, double s1, const State<Scalar, N>& y0,
                              const Options& opt) {
  using Y = State<Scalar, N>;
  using namespace detail;

  if (!(opt.rtol > 0.0) || !(opt.atol >= 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  if (!all_finite<Scalar, N>(y0)) {
    throw IntegrationError(IntegrationError::Kind::non_finite, s0, "non-finite initial state");
  }

  Solution<Scalar, N> sol;
  sol.nodes_.push_back({s0, y0, 0.0});
  const double span = s1 - s0;
  if (span == 0.0) {
    return sol;
  }
  const double dir = span > 0.0 ? 1.0 : -1.0;
  const double h_min = opt.min_step * std::abs(span);

  auto axpy = [](const Y& y, double h, std::initializer_list<std::pair<double, const Y*>> terms) {
    Y out = y;
    for (const auto& [c, k] : terms) {
      for (std::size_t i = 0; i < N; ++i) {
        out[i] += (h * c) * (*k)[i];
      }
    }
    return out;
  };

  double s = s0;
  Y y = y0;
  Y k1 = f(s, y);

  double h = opt.initial_step;
  if (h <= 0.0) {
    // Hairer's starting-step heuristic, simplified.
    double d0 = 0.0;
    double d1n = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt.atol + opt.rtol * std::abs(y[i]);
      d0 = std::max(d0, std::abs(y[i]) / sc);
      d1n = std::max(d1n, std::abs(k1[i]) / sc);
    }
    h = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 * std::abs(span) : 0.01 * d0 / d1n;
    h = std::min(h, std::abs(span));
  }
  h *= dir;

  constexpr double safety = 0.9;
  constexpr double fac_min = 0.2;
  constexpr double fac_max = 10.0;
  constexpr double beta = 0.04;
  constexpr double alpha = 0.2 - 0.75 * beta;
  double err_old = 1e-4;
  bool rejected_last = false;

  for (std::size_t step = 0;; ++step) {
    if (step >= opt.max_steps) {
      throw IntegrationError(IntegrationError::Kind::too_many_steps, s,
                             "integrator exceeded the maximum number of steps at s = " +
                                 std::to_string(s));
    }
    if ((s + h - s1) * dir > 0.0) {
      h = s1 - s;
    }
    const Y k2 = f(s + c2 * h, axpy(y, h, {{a21, &k1}}));
    const Y k3 = f(s + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const Y k4 = f(s + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const Y k5 = f(s + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const Y k6 =
        f(s + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const Y y_new =
        axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const Y k7 = f(s + h, y_new);

    double err_abs = 0.0;
    double err = 0.0;
    bool finite = all_finite<Scalar, N>(y_new) && all_finite<Scalar, N>(k7);
    for (std::size_t i = 0; finite && i < N; ++i) {
      const Scalar e =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err_abs = std::max(err_abs, std::abs(e));
      err = std::max(err, std::abs(e) / sc);
    }
    if (!finite || !std::isfinite(err)) {
      // Treat like a rejected step; a genuine blow-up ends in step underflow.
      err = std::numeric_limits<double>::infinity();
    }

    if (err <= 1.0) {
      std::array<Y, 5> dense{};
      for (std::size_t i = 0; i < N; ++i) {
        const Scalar ydiff = y_new[i] - y[i];
        const Scalar bspl = h * k1[i] - ydiff;
        dense[0][i] = y[i];
        dense[1][i] = ydiff;
        dense[2][i] = bspl;
        dense[3][i] = ydiff - h * k7[i] - bspl;
        dense[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                           d7 * k7[i]);
      }
      sol.dense_.push_back(dense);
      s = (std::abs(s1 - (s + h)) <= 1e-15 * std::abs(span)) ? s1 : s + h;
      y = y_new;
      k1 = k7;
      sol.nodes_.push_back({s, y, err_abs});
      if (s == s1) {
        return sol;
      }
      double fac = safety * std::pow(std::max(err, 1e-10), -alpha) * std::pow(err_old, beta);
      fac = std::clamp(fac, fac_min, fac_max);
      if (rejected_last) {
        fac = std::min(fac, 1.0);
      }
      err_old = std::max(err, 1e-4);
      h *= fac;
      rejected_last = false;
    } else {
      const double fac =
          std::isfinite(err) ? std::max(fac_min, safety * std::pow(err, -alpha)) : fac_min;
      h *= fac;
      rejected_last = true;
    }
    if (std::abs(h) < h_min) {
      if (!all_finite<Scalar, N>(y)) {
        throw IntegrationError(IntegrationError::Kind::non_finite, s,
                               "state became non-finite at s = " + std::to_string(s));
      }
      throw IntegrationError(IntegrationError::Kind::step_underflow, s,
                             "step size underflow at s = " + std::to_string(s) +
                                 " (solution blow-up?)");
    }
  }
}

}  // namespace halphen::ode

#endif  // HALPHEN_ODE_HPP
