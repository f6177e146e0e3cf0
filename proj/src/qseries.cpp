#include "halphen/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace halphen {

namespace {

// Below this order the OpenMP fork costs more than the convolution.
constexpr int kParallelMulThreshold = 48;

void require_nonnegative_order(int order) {
  if (order < 0) {
    throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
  }
}

// Lift both operands to a common variable.
std::pair<PiGradedQSeries, PiGradedQSeries> unify(const PiGradedQSeries& a,
                                                  const PiGradedQSeries& b) {
  if (a.variable() == b.variable()) {
    return {a, b};
  }
  return {a.in_w(), b.in_w()};
}

}  // namespace

PiGradedQSeries::PiGradedQSeries(Variable var, int trunc_order, int pi_power)
    : var_(var), pi_power_(pi_power) {
  require_nonnegative_order(trunc_order);
  coeffs_.assign(static_cast<std::size_t>(trunc_order) + 1, Rational(0));
}

PiGradedQSeries PiGradedQSeries::constant(const Rational& c, Variable var, int trunc_order) {
  PiGradedQSeries s(var, trunc_order);
  s.coeffs_[0] = c;
  return s;
}

const Rational& PiGradedQSeries::coeff(int n) const {
  if (n < 0 || n > trunc_order()) {
    throw std::out_of_range("exponent " + std::to_string(n) + " outside [0, " +
                            std::to_string(trunc_order()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void PiGradedQSeries::set_coeff(int n, const Rational& c) {
  if (n < 0 || n > trunc_order()) {
    throw std::out_of_range("exponent " + std::to_string(n) + " outside [0, " +
                            std::to_string(trunc_order()) + "]");
  }
  coeffs_[static_cast<std::size_t>(n)] = c;
}

std::vector<std::pair<int, Rational>> PiGradedQSeries::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (sgn(coeffs_[n]) != 0) {
      out.emplace_back(static_cast<int>(n), coeffs_[n]);
    }
  }
  return out;
}

bool PiGradedQSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

PiGradedQSeries PiGradedQSeries::in_w() const {
  if (var_ == Variable::w) {
    return *this;
  }
  PiGradedQSeries out(Variable::w, 8 * trunc_order() + 7, pi_power_);
  for (int n = 0; n <= trunc_order(); ++n) {
    out.coeffs_[static_cast<std::size_t>(8 * n)] = coeffs_[static_cast<std::size_t>(n)];
  }
  return out;
}

PiGradedQSeries PiGradedQSeries::truncated(int order) const {
  require_nonnegative_order(order);
  if (order > trunc_order()) {
    throw std::invalid_argument("cannot extend a series beyond its truncation order");
  }
  PiGradedQSeries out(var_, order, pi_power_);
  std::copy_n(coeffs_.begin(), order + 1, out.coeffs_.begin());
  return out;
}

PiGradedQSeries PiGradedQSeries::with_pi_power(int k) const {
  PiGradedQSeries out = *this;
  out.pi_power_ = k;
  return out;
}

bool operator==(const PiGradedQSeries& a0, const PiGradedQSeries& b0) {
  if (a0.pi_power() != b0.pi_power()) {
    return false;
  }
  auto [a, b] = unify(a0, b0);
  const int n = std::min(a.trunc_order(), b.trunc_order());
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) != b.coeff(i)) {
      return false;
    }
  }
  return true;
}

PiGradedQSeries operator+(const PiGradedQSeries& a0, const PiGradedQSeries& b0) {
  if (a0.pi_power() != b0.pi_power()) {
    throw std::invalid_argument("cannot add series of (pi i)-grading " +
                                std::to_string(a0.pi_power()) + " and " +
                                std::to_string(b0.pi_power()));
  }
  auto [a, b] = unify(a0, b0);
  const int n = std::min(a.trunc_order(), b.trunc_order());
  PiGradedQSeries out(a.variable(), n, a.pi_power());
  for (int i = 0; i <= n; ++i) {
    out.set_coeff(i, a.coeff(i) + b.coeff(i));
  }
  return out;
}

PiGradedQSeries operator-(const PiGradedQSeries& a) {
  return Rational(-1) * a;
}

PiGradedQSeries operator-(const PiGradedQSeries& a, const PiGradedQSeries& b) {
  return a + (-b);
}

PiGradedQSeries operator*(const Rational& s, const PiGradedQSeries& a) {
  PiGradedQSeries out(a.variable(), a.trunc_order(), a.pi_power());
  for (int i = 0; i <= a.trunc_order(); ++i) {
    if (sgn(a.coeff(i)) != 0) {
      out.set_coeff(i, s * a.coeff(i));
    }
  }
  return out;
}

PiGradedQSeries mul_serial(const PiGradedQSeries& a0, const PiGradedQSeries& b0) {
  auto [a, b] = unify(a0, b0);
  const int n = std::min(a.trunc_order(), b.trunc_order());
  PiGradedQSeries out(a.variable(), n, a.pi_power() + b.pi_power());
  const auto& ac = a.dense();
  const auto& bc = b.dense();
  for (int i = 0; i <= n; ++i) {
    if (sgn(ac[i]) == 0) {
      continue;
    }
    for (int j = 0; i + j <= n; ++j) {
      if (sgn(bc[j]) != 0) {
        out.set_coeff(i + j, out.coeff(i + j) + ac[i] * bc[j]);
      }
    }
  }
  return out;
}

PiGradedQSeries mul_parallel(const PiGradedQSeries& a0, const PiGradedQSeries& b0) {
  auto [a, b] = unify(a0, b0);
  const int n = std::min(a.trunc_order(), b.trunc_order());
  const auto& ac = a.dense();
  const auto& bc = b.dense();
  std::vector<Rational> acc(static_cast<std::size_t>(n) + 1);
  std::vector<int> nz;
  for (int i = 0; i <= n; ++i) {
    if (sgn(ac[i]) != 0) {
      nz.push_back(i);
    }
  }

  // Each output coefficient is an independent dot product; the cost of index k
  // grows with k, hence the dynamic schedule.
#pragma omp parallel for schedule(dynamic, 4) if (n >= kParallelMulThreshold)
  for (int k = 0; k <= n; ++k) {
    Rational sum(0);
    Rational prod;
    for (const int i : nz) {
      if (i > k) {
        break;
      }
      if (sgn(bc[k - i]) != 0) {
        mpq_mul(prod.get_mpq_t(), ac[i].get_mpq_t(), bc[k - i].get_mpq_t());
        sum += prod;
      }
    }
    acc[static_cast<std::size_t>(k)] = std::move(sum);
  }

  PiGradedQSeries out(a.variable(), n, a.pi_power() + b.pi_power());
  for (int k = 0; k <= n; ++k) {
    out.set_coeff(k, acc[static_cast<std::size_t>(k)]);
  }
  return out;
}

PiGradedQSeries operator*(const PiGradedQSeries& a, const PiGradedQSeries& b) {
  return mul_parallel(a, b);
}

PiGradedQSeries w_dw(const PiGradedQSeries& a) {
  const Rational scale = a.variable() == Variable::w ? Rational(1) : Rational(8);
  PiGradedQSeries out(a.variable(), a.trunc_order(), a.pi_power());
  for (int n = 1; n <= a.trunc_order(); ++n) {
    if (sgn(a.coeff(n)) != 0) {
      out.set_coeff(n, scale * n * a.coeff(n));
    }
  }
  return out;
}

PiGradedQSeries theta_q(const PiGradedQSeries& a) {
  const Rational scale = a.variable() == Variable::q ? Rational(1) : Rational(1, 8);
  PiGradedQSeries out(a.variable(), a.trunc_order(), a.pi_power());
  for (int n = 1; n <= a.trunc_order(); ++n) {
    if (sgn(a.coeff(n)) != 0) {
      out.set_coeff(n, scale * n * a.coeff(n));
    }
  }
  return out;
}

PiGradedQSeries inverse(const PiGradedQSeries& a) {
  if (sgn(a.coeff(0)) == 0) {
    throw std::domain_error("series inverse needs a nonzero constant term");
  }
  const int n = a.trunc_order();
  PiGradedQSeries out(a.variable(), n, -a.pi_power());
  const Rational inv0 = 1 / a.coeff(0);
  out.set_coeff(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational sum(0);
    for (int i = 1; i <= k; ++i) {
      if (sgn(a.coeff(i)) != 0) {
        sum += a.coeff(i) * out.coeff(k - i);
      }
    }
    out.set_coeff(k, -inv0 * sum);
  }
  return out;
}

LogUnit log_unit(const PiGradedQSeries& s) {
  int m = -1;
  for (int n = 0; n <= s.trunc_order(); ++n) {
    if (sgn(s.coeff(n)) != 0) {
      m = n;
      break;
    }
  }
  if (m < 0) {
    throw std::domain_error("log of a series with no nonzero coefficient");
  }
  const Rational c = s.coeff(m);
  const int order = s.trunc_order() - m;
  PiGradedQSeries unit(s.variable(), order);
  for (int n = 0; n <= order; ++n) {
    unit.set_coeff(n, s.coeff(n + m) / c);
  }
  // D log u = D u / u with D = x d/dx, then undo D termwise.
  const PiGradedQSeries dlog = w_dw(unit) * inverse(unit);
  const Rational scale = s.variable() == Variable::w ? Rational(1) : Rational(8);
  PiGradedQSeries log(s.variable(), order);
  for (int n = 1; n <= order; ++n) {
    log.set_coeff(n, dlog.coeff(n) / (scale * n));
  }
  return LogUnit{m, c, std::move(log)};
}

PiGradedQSeries log_derivative(const PiGradedQSeries& s) {
  LogUnit lu = log_unit(s);
  PiGradedQSeries out = w_dw(lu.log);
  if (s.variable() == Variable::q) {
    out = Rational(1, 8) * out;  // back to q d/dq
  }
  out.set_coeff(0, Rational(lu.leading_exponent));
  return out;
}

PiGradedQSeries theta_series(int which, int order) {
  if (which < 2 || which > 4) {
    throw std::invalid_argument("theta_series: which must be 2, 3 or 4");
  }
  require_nonnegative_order(order);
  PiGradedQSeries s(Variable::w, order);
  if (which == 2) {
    // q^{(n+1/2)^2/2} = w^{(2n+1)^2}; n and -n-1 give the same exponent.
    for (long k = 1; k * k <= order; k += 2) {
      s.set_coeff(static_cast<int>(k * k), Rational(2));
    }
    return s;
  }
  // q^{n^2/2} = w^{4n^2}
  s.set_coeff(0, Rational(1));
  for (long n = 1; 4 * n * n <= order; ++n) {
    const int sign = (which == 4 && n % 2 == 1) ? -1 : 1;
    s.set_coeff(static_cast<int>(4 * n * n), Rational(2 * sign));
  }
  return s;
}

Rational divisor_sigma(int power, int n) {
  if (n <= 0) {
    throw std::invalid_argument("divisor_sigma needs n >= 1");
  }
  mpz_class sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class dp;
      mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                    static_cast<unsigned long>(power));
      sum += dp;
    }
  }
  return Rational(sum);
}

PiGradedQSeries eisenstein_series(int k, int order) {
  int b = 0;
  switch (k) {
    case 2: b = -24; break;
    case 4: b = 240; break;
    case 6: b = -504; break;
    default: throw std::invalid_argument("eisenstein_series: k must be 2, 4 or 6");
  }
  require_nonnegative_order(order);
  PiGradedQSeries s(Variable::q, order);
  s.set_coeff(0, Rational(1));
  for (int n = 1; n <= order; ++n) {
    s.set_coeff(n, b * divisor_sigma(k - 1, n));
  }
  return s;
}

namespace {

cplx nome_variable(Variable var, cplx tau) {
  const double frac = var == Variable::w ? 0.125 : 1.0;
  return std::exp(cplx(0.0, 2.0 * pi * frac) * tau);
}

}  // namespace

cplx eval_series(const PiGradedQSeries& s, TauPoint tau) {
  const cplx x = nome_variable(s.variable(), tau.value());
  cplx sum = 0.0;
  cplx xn = 1.0;
  for (int n = 0; n <= s.trunc_order(); ++n) {
    if (sgn(s.coeff(n)) != 0) {
      sum += s.coeff(n).get_d() * xn;
    }
    xn *= x;
  }
  return std::pow(pi_i, s.pi_power()) * sum;
}

double tail_bound(const PiGradedQSeries& s, TauPoint tau) {
  const double x = std::abs(nome_variable(s.variable(), tau.value()));
  const auto terms = s.terms();
  if (terms.empty()) {
    return 0.0;
  }
  const double c_last = std::abs(terms.back().second.get_d());
  const int gap = terms.size() >= 2
                      ? terms.back().first - terms[terms.size() - 2].first
                      : std::max(terms.back().first, 1);
  const double head = c_last * std::pow(x, s.trunc_order() + 1);
  return std::pow(std::abs(pi_i), s.pi_power()) * head / (1.0 - std::pow(x, gap));
}

void to_json(nlohmann::json& j, const PiGradedQSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [n, c] : s.terms()) {
    terms.push_back({n, c.get_num().get_str() + "/" + c.get_den().get_str()});
  }
  j = nlohmann::json{{"pi_power", s.pi_power()},
                     {"trunc_order", s.trunc_order()},
                     {"variable", s.variable() == Variable::w ? "w" : "q"},
                     {"terms", std::move(terms)}};
}

PiGradedQSeries series_from_json(const nlohmann::json& j) {
  const std::string var = j.value("variable", std::string("w"));
  if (var != "w" && var != "q") {
    throw std::invalid_argument("series variable must be \"w\" or \"q\"");
  }
  PiGradedQSeries s(var == "w" ? Variable::w : Variable::q, j.at("trunc_order").get<int>(),
                    j.at("pi_power").get<int>());
  int last = -1;
  for (const auto& term : j.at("terms")) {
    const int n = term.at(0).get<int>();
    if (n <= last) {
      throw std::invalid_argument("series terms must have strictly ascending exponents");
    }
    last = n;
    Rational c(term.at(1).get<std::string>());
    if (sgn(c.get_den()) == 0) {
      throw std::invalid_argument("zero denominator in series coefficient");
    }
    c.canonicalize();
    s.set_coeff(n, c);
  }
  return s;
}

}  // namespace halphen
