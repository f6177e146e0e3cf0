#ifndef HALPHEN_QSERIES_HPP
#define HALPHEN_QSERIES_HPP

// Exact truncated q-series with rational coefficients and a (pi i)-power
// grading. Theta series live in w = q^(1/8), the smallest root of q that makes
// every theta exponent integral; Eisenstein series live in q and are lifted to
// w (q = w^8) whenever the two are combined.

#include <utility>
#include <vector>

#include <json.hpp>

#include "halphen/types.hpp"

namespace halphen {

enum class Variable {
  w,  // exponent n means q^(n/8)
  q,  // exponent n means q^n
};

/// (pi i)^pi_power * sum_{n=0}^{trunc_order} c_n x^n, x in {w, q}.
/// Coefficients above trunc_order are unknown, not zero.
class PiGradedQSeries {
 public:
  PiGradedQSeries(Variable var, int trunc_order, int pi_power = 0);

  static PiGradedQSeries constant(const Rational& c, Variable var, int trunc_order);

  Variable variable() const noexcept { return var_; }
  int trunc_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int pi_power() const noexcept { return pi_power_; }

  /// Coefficient of x^n; throws std::out_of_range outside [0, trunc_order].
  const Rational& coeff(int n) const;
  void set_coeff(int n, const Rational& c);
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }

  /// Nonzero terms, exponents ascending.
  std::vector<std::pair<int, Rational>> terms() const;
  bool is_zero() const;

  /// Same series re-expressed in w (no-op for w series). A q-series known
  /// through q^N is known through w^(8N+7): the intermediate powers are
  /// genuinely zero.
  PiGradedQSeries in_w() const;
  PiGradedQSeries truncated(int order) const;
  PiGradedQSeries with_pi_power(int k) const;

 private:
  Variable var_;
  int pi_power_;
  std::vector<Rational> coeffs_;
};

/// Equal iff the gradings match and every coefficient up to the common
/// truncation order matches (after lifting both to a common variable).
bool operator==(const PiGradedQSeries& a, const PiGradedQSeries& b);

PiGradedQSeries operator+(const PiGradedQSeries& a, const PiGradedQSeries& b);
PiGradedQSeries operator-(const PiGradedQSeries& a, const PiGradedQSeries& b);
PiGradedQSeries operator-(const PiGradedQSeries& a);
PiGradedQSeries operator*(const Rational& s, const PiGradedQSeries& a);
PiGradedQSeries operator*(const PiGradedQSeries& a, const PiGradedQSeries& b);

/// Truncated product. mul_serial is the reference loop; mul_parallel splits the
/// output coefficients across OpenMP threads. Both give identical results.
PiGradedQSeries mul_serial(const PiGradedQSeries& a, const PiGradedQSeries& b);
PiGradedQSeries mul_parallel(const PiGradedQSeries& a, const PiGradedQSeries& b);

/// q d/dq. On a w-series this is (1/8) w d/dw.
PiGradedQSeries theta_q(const PiGradedQSeries& a);
/// w d/dw on a w-series (8 q d/dq on a q-series).
PiGradedQSeries w_dw(const PiGradedQSeries& a);

/// Multiplicative inverse of a series with nonzero constant term.
PiGradedQSeries inverse(const PiGradedQSeries& a);

struct LogUnit {
  int leading_exponent;   // m
  Rational leading_coeff; // c
  PiGradedQSeries log;    // log(s / (c x^m)), zero constant term, pi_power 0
};

/// Factor s = c x^m (1 + ...) and return the formal log of the unit part.
/// The unit is known through trunc_order - m, and so is its log.
LogUnit log_unit(const PiGradedQSeries& s);

/// x d/dx log s = m + x d/dx log(unit), in the series' own variable.
PiGradedQSeries log_derivative(const PiGradedQSeries& s);

/// Theta constants in w: theta_2 (which = 2), theta_3, theta_4.
PiGradedQSeries theta_series(int which, int order);

/// E_2, E_4, E_6 in q: 1 + b_k sum sigma_{k-1}(n) q^n with b = -24, 240, -504.
PiGradedQSeries eisenstein_series(int k, int order);

/// Sum of d^power over the divisors d of n.
Rational divisor_sigma(int power, int n);

/// (pi i)^pi_power * sum c_n x(tau)^n.
cplx eval_series(const PiGradedQSeries& s, TauPoint tau);

/// Estimate of the truncation tail at tau: |c_last| x^(N+1) / (1 - x^g) with
/// x = |w| or |q|, c_last the last nonzero coefficient and g the gap between the
/// last two nonzero exponents. This dominates the tail whenever the omitted
/// coefficients do not exceed |c_last| and their exponent gaps do not shrink,
/// which is the case for the theta series. For Eisenstein series it is only a
/// heuristic.
double tail_bound(const PiGradedQSeries& s, TauPoint tau);

void to_json(nlohmann::json& j, const PiGradedQSeries& s);
PiGradedQSeries series_from_json(const nlohmann::json& j);

}  // namespace halphen

#endif  // HALPHEN_QSERIES_HPP
