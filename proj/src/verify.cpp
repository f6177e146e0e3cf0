#include "halphen/verify.hpp"

#include <algorithm>
#include <cmath>

#include "halphen/bianchi.hpp"
#include "halphen/dh_core.hpp"
#include "halphen/gauss_manin.hpp"
#include "halphen/ramanujan.hpp"
#include "halphen/sweep.hpp"

namespace halphen::verify {

RationalSampler::RationalSampler(std::uint64_t seed, int num_bound, int den_bound)
    : rng_(seed), num_(-num_bound, num_bound), den_(1, den_bound) {}

Rational RationalSampler::next() {
  const int n = num_(rng_);
  const int d = den_(rng_);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Triple<Rational> RationalSampler::triple() {
  Rational a = next();
  Rational b = next();
  Rational c = next();
  return {a, b, c};
}

Triple<Rational> RationalSampler::distinct_triple() {
  for (;;) {
    Triple<Rational> t = triple();
    if (pairwise_distinct(t)) {
      return t;
    }
  }
}

std::size_t ExactSweep::failures() const {
  return static_cast<std::size_t>(std::count_if(
      outcomes.begin(), outcomes.end(), [](const SampleOutcome& o) { return !o.exact_zero; }));
}

double ExactSweep::worst() const {
  double w = 0.0;
  for (const auto& o : outcomes) {
    w = std::max(w, o.max_abs);
  }
  return w;
}

namespace {

template <std::size_t N>
SampleOutcome outcome_of(const std::array<Rational, N>& r) {
  SampleOutcome o;
  o.exact_zero = true;
  for (const auto& v : r) {
    if (v != 0) {
      o.exact_zero = false;
    }
    o.max_abs = std::max(o.max_abs, std::abs(v.get_d()));
  }
  return o;
}

template <class Kernel>
ExactSweep run_sweep(std::vector<Triple<Rational>> samples, Backend b, Kernel kernel) {
  ExactSweep out;
  auto f = [&samples, &kernel](std::size_t i) { return kernel(samples[i]); };
  out.outcomes = b == Backend::parallel ? parallel_sweep(samples.size(), f)
                                        : serial_sweep(samples.size(), f);
  out.samples = std::move(samples);
  return out;
}

std::vector<Triple<Rational>> draw(std::size_t n, std::uint64_t seed, bool distinct) {
  RationalSampler s(seed);
  std::vector<Triple<Rational>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(distinct ? s.distinct_triple() : s.triple());
  }
  return out;
}

}  // namespace

ExactSweep gauss_manin_sweep(std::size_t n, std::uint64_t seed, Backend b) {
  return run_sweep(draw(n, seed, true), b, [](const Triple<Rational>& t) {
    const Mat2<Rational> r = verify_R_property(t);
    return outcome_of(std::array<Rational, 4>{r[0][0], r[0][1], r[1][0], r[1][1]});
  });
}

ExactSweep conjugacy_sweep(std::size_t n, std::uint64_t seed, Backend b) {
  return run_sweep(draw(n, seed, false), b, [](const Triple<Rational>& t) {
    return outcome_of(conjugacy_residual_normalized(t));
  });
}

ExactSweep darboux_sweep(std::size_t n, std::uint64_t seed, Backend b) {
  return run_sweep(draw(n, seed, false), b, [](const Triple<Rational>& t) {
    const auto r = darboux_condition_residual(t);
    const Rational expected = 2 * t[0] * t[1] * t[2];
    return outcome_of(std::array<Rational, 3>{r.first, r.second, r.common_value - expected});
  });
}

ExactSweep coupled_reduction_sweep(std::size_t n, std::uint64_t seed, Backend b) {
  return run_sweep(draw(n, seed, false), b, [](const Triple<Rational>& w) {
    const bianchi::OmegaAState<Rational> s{w, w};
    const auto coupled = bianchi::coupled_field(s);
    const auto classical = bianchi::classical_dh_omega_field(w, bianchi::SelfDualitySign::self_dual);
    Triple<Rational> r;
    for (int i = 0; i < 3; ++i) {
      r[i] = coupled.omega_dot[i] - classical[i];
    }
    return outcome_of(r);
  });
}

double dh_theta_ode_residual(TauPoint tau, double h) {
  const cplx z = tau.value();
  const DHState plus = dh_theta_solution(TauPoint(z + h));
  const DHState minus = dh_theta_solution(TauPoint(z - h));
  const DHState f = dh_vector_field(dh_theta_solution(tau));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs((plus[i] - minus[i]) / (2.0 * h) - f[i]));
  }
  return worst;
}

double darbouxA_residual(double t, double h) {
  const auto plus = bianchi::theta_A_solution(t + h);
  const auto minus = bianchi::theta_A_solution(t - h);
  const auto a = bianchi::theta_A_solution(t);
  const bianchi::OmegaAState<double> s{a, a};
  const auto f = bianchi::coupled_field(s).a_dot;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs((plus[i] - minus[i]) / (2.0 * h) - f[i]));
  }
  return worst;
}

double omegasolution_residual(double t, double q0, double h) {
  const auto p2 = bianchi::flat_family(t + 2.0 * h, q0);
  const auto p1 = bianchi::flat_family(t + h, q0);
  const auto m1 = bianchi::flat_family(t - h, q0);
  const auto m2 = bianchi::flat_family(t - 2.0 * h, q0);
  const auto f = bianchi::omega_theta_field(t, bianchi::flat_family(t, q0));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
    worst = std::max(worst, std::abs(d - f[i]));
  }
  return worst;
}

}  // namespace halphen::verify
