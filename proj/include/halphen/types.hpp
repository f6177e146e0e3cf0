#ifndef HALPHEN_TYPES_HPP
#define HALPHEN_TYPES_HPP

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace halphen {

using cplx = std::complex<double>;
using Rational = mpq_class;

/// Three components indexed 0..2, used for (t1,t2,t3), (E2,E4,E6), (Omega1..3), ...
template <class T>
using Triple = std::array<T, 3>;

using DHState = Triple<cplx>;
using DHStateQ = Triple<Rational>;

inline constexpr double pi = std::numbers::pi;
inline const cplx pi_i{0.0, pi};

/// Thrown when a point lies outside an operation's domain (Im tau <= 0,
/// coinciding t_i, vanishing theta, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Modular parameter tau in the upper half-plane.
class TauPoint {
 public:
  explicit TauPoint(cplx value) : value_(value) {
    if (!(value.imag() > 0.0)) {
      throw DomainError("tau must lie in the upper half-plane, got Im(tau) = " +
                        std::to_string(value.imag()));
    }
  }
  cplx value() const noexcept { return value_; }

 private:
  cplx value_;
};

}  // namespace halphen

#endif  // HALPHEN_TYPES_HPP
