#ifndef HALPHEN_VERIFY_HPP
#define HALPHEN_VERIFY_HPP

// Randomized exact sweeps and derivative-based residual checks shared by the
// command-line tool, the acceptance runner and the tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "halphen/types.hpp"

namespace halphen::verify {

/// Deterministic rationals n/d with |n| <= num_bound and 1 <= d <= den_bound.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int num_bound = 60, int den_bound = 17);
  Rational next();
  Triple<Rational> triple();
  /// Redraws until all three entries differ.
  Triple<Rational> distinct_triple();

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> num_;
  std::uniform_int_distribution<int> den_;
};

enum class Backend { serial, parallel };

struct SampleOutcome {
  bool exact_zero = false;
  double max_abs = 0.0;  // of the residual, converted to double
};

struct ExactSweep {
  std::vector<Triple<Rational>> samples;
  std::vector<SampleOutcome> outcomes;

  std::size_t failures() const;
  bool all_zero() const { return failures() == 0; }
  double worst() const;
};

/// Contraction of the Gauss-Manin matrix with the DH field minus [[0,-1],[0,0]]
/// at pairwise-distinct random triples.
ExactSweep gauss_manin_sweep(std::size_t n, std::uint64_t seed, Backend b = Backend::parallel);
/// Normalized conjugacy residual of the DH -> Eisenstein map.
ExactSweep conjugacy_sweep(std::size_t n, std::uint64_t seed, Backend b = Backend::parallel);
/// Darboux orthogonality residuals, plus common_value - 2 t1 t2 t3.
ExactSweep darboux_sweep(std::size_t n, std::uint64_t seed, Backend b = Backend::parallel);
/// coupled_field with A = Omega minus the classical self-dual Omega field.
ExactSweep coupled_reduction_sweep(std::size_t n, std::uint64_t seed,
                                   Backend b = Backend::parallel);

/// max_i |(t_i(tau + h) - t_i(tau - h)) / 2h - f_i(t(tau))| for Halphen's solution.
double dh_theta_ode_residual(TauPoint tau, double h = 1e-5);

/// Same, for A = theta_A_solution against dA_i/dt = -A_j A_k + A_i (A_j + A_k).
double darbouxA_residual(double t, double h = 1e-5);

/// flat_family(t, q0) against the Omega system with the theta A substituted,
/// using a five-point derivative stencil.
double omegasolution_residual(double t, double q0, double h = 1e-3);

}  // namespace halphen::verify

#endif  // HALPHEN_VERIFY_HPP
