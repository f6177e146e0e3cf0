#ifndef HALPHEN_THETA_HPP
#define HALPHEN_THETA_HPP

// Floating-point theta functions and Eisenstein series by direct summation.
// These are the numeric counterparts of the exact series in qseries.hpp and
// are deliberately computed along a different route (Gaussian lattice sums
// instead of rational coefficient lists) so each side can check the other.

#include "halphen/types.hpp"

namespace halphen {

/// theta[r,s](z, sigma) = sum_m exp(pi i (m+r)^2 sigma + 2 pi i (m+r)(z+s)).
struct ThetaCharacteristics {
  cplx r;
  cplx s;
  cplx z;
  cplx sigma;
};

cplx theta_char_eval(const ThetaCharacteristics& ch);

/// d/dz. Because z and s only enter through z+s this is also d/ds, the
/// characteristic derivative used by the Tod-Hitchin formulas.
cplx theta_char_dz(const ThetaCharacteristics& ch);

/// Value and first two sigma-derivatives.
struct ThetaJet {
  cplx value;
  cplx d1;
  cplx d2;
};

ThetaJet theta_char_sigma_jet(const ThetaCharacteristics& ch);

/// Classical theta constants theta_2, theta_3, theta_4 at tau with their
/// tau-derivatives.
ThetaJet theta_jet(int which, TauPoint tau);

/// Eisenstein series E_k (k = 2, 4, 6) and its q d/dq iterates:
/// out[j] = (q d/dq)^j E_k(tau) for j = 0..3.
Triple<cplx> eisenstein_eval(TauPoint tau);
std::array<cplx, 4> eisenstein_theta_jet(int k, TauPoint tau);

}  // namespace halphen

#endif  // HALPHEN_THETA_HPP
