#include "halphen/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace halphen {

namespace {

constexpr long kMaxThetaTerms = 2'000'000;

struct ThetaSums {
  cplx value{0.0};
  cplx dz{0.0};
  cplx dsigma{0.0};
  cplx dsigma2{0.0};
};

// Sum over the window of m where the Gaussian envelope is within e^-48 of its
// peak (plus slack for the polynomial weights). With x = m + r = a + ib and
// u = z + s, log|term| = -pi Im(sigma) (a - a*)^2 + const, a* = -(b Re sigma + Im u) / Im sigma.
ThetaSums theta_sums(const ThetaCharacteristics& ch) {
  const double si = ch.sigma.imag();
  if (!(si > 0.0)) {
    throw DomainError("theta with characteristics needs Im(sigma) > 0");
  }
  const cplx u = ch.z + ch.s;
  const double b = ch.r.imag();
  const double a_star = -(b * ch.sigma.real() + u.imag()) / si;
  const double half_width = std::sqrt(48.0 / (pi * si)) + 3.0;
  const double m_lo = std::floor(a_star - ch.r.real() - half_width);
  const double m_hi = std::ceil(a_star - ch.r.real() + half_width);
  if (m_hi - m_lo > static_cast<double>(kMaxThetaTerms)) {
    throw DomainError("theta summation window too large; Im(sigma) is too small");
  }

  ThetaSums out;
  for (double m = m_lo; m <= m_hi; m += 1.0) {
    const cplx x = m + ch.r;
    const cplx term = std::exp(pi_i * x * x * ch.sigma + 2.0 * pi_i * x * u);
    const cplx w_sigma = pi_i * x * x;
    out.value += term;
    out.dz += 2.0 * pi_i * x * term;
    out.dsigma += w_sigma * term;
    out.dsigma2 += w_sigma * w_sigma * term;
  }
  return out;
}

ThetaCharacteristics classical_characteristics(int which, cplx tau) {
  switch (which) {
    case 2: return {0.5, 0.0, 0.0, tau};
    case 3: return {0.0, 0.0, 0.0, tau};
    case 4: return {0.0, 0.5, 0.0, tau};
    default: throw std::invalid_argument("theta_jet: which must be 2, 3 or 4");
  }
}

double divisor_sigma_d(int power, int n) {
  double sum = 0.0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      sum += std::pow(static_cast<double>(d), power);
      const int e = n / d;
      if (e != d) {
        sum += std::pow(static_cast<double>(e), power);
      }
    }
  }
  return sum;
}

}  // namespace

cplx theta_char_eval(const ThetaCharacteristics& ch) {
  return theta_sums(ch).value;
}

cplx theta_char_dz(const ThetaCharacteristics& ch) {
  return theta_sums(ch).dz;
}

ThetaJet theta_char_sigma_jet(const ThetaCharacteristics& ch) {
  const ThetaSums s = theta_sums(ch);
  return {s.value, s.dsigma, s.dsigma2};
}

ThetaJet theta_jet(int which, TauPoint tau) {
  return theta_char_sigma_jet(classical_characteristics(which, tau.value()));
}

std::array<cplx, 4> eisenstein_theta_jet(int k, TauPoint tau) {
  double b = 0.0;
  switch (k) {
    case 2: b = -24.0; break;
    case 4: b = 240.0; break;
    case 6: b = -504.0; break;
    default: throw std::invalid_argument("eisenstein_theta_jet: k must be 2, 4 or 6");
  }
  const cplx q = std::exp(2.0 * pi_i * tau.value());
  const double aq = std::abs(q);
  std::array<cplx, 4> out{1.0, 0.0, 0.0, 0.0};
  cplx qn = 1.0;
  for (int n = 1;; ++n) {
    qn *= q;
    const double dn = n;
    // sigma_{k-1}(n) n^3 |q|^n bounds every summand of the jet.
    const double envelope = std::pow(dn, k + 3) * std::pow(aq, n);
    if (n > 2 && envelope < 1e-20) {
      break;
    }
    if (n > 1'000'000) {
      throw DomainError("Eisenstein series does not converge fast enough; Im(tau) too small");
    }
    const cplx term = b * divisor_sigma_d(k - 1, n) * qn;
    out[0] += term;
    out[1] += dn * term;
    out[2] += dn * dn * term;
    out[3] += dn * dn * dn * term;
  }
  return out;
}

Triple<cplx> eisenstein_eval(TauPoint tau) {
  return {eisenstein_theta_jet(2, tau)[0], eisenstein_theta_jet(4, tau)[0],
          eisenstein_theta_jet(6, tau)[0]};
}

}  // namespace halphen
