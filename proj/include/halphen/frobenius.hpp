#ifndef HALPHEN_FROBENIUS_HPP
#define HALPHEN_FROBENIUS_HPP

// Three-dimensional Frobenius manifolds with potential
//   F = (t1)^2 t3 / 2 + t1 (t2)^2 / 2 + f(t2, t3),
// their WDVV/associativity equations, the Chazy reduction for
// f = -x^4 gamma(y) / 16 and the cubic whose roots are the DH solution.

#include <array>

#include "halphen/qseries.hpp"
#include "halphen/types.hpp"

namespace halphen::frobenius {

/// Third partials of f(x, y) at a point.
struct PotentialJet {
  cplx f_xxx;
  cplx f_xxy;
  cplx f_xyy;
  cplx f_yyy;
};

/// gamma and its first three tau-derivatives at a point.
struct GammaJet {
  cplx g;
  cplx d1;
  cplx d2;
  cplx d3;
};

using Vec3 = std::array<cplx, 3>;
using Tensor3 = std::array<std::array<Vec3, 3>, 3>;
using Matrix3 = std::array<Vec3, 3>;

/// table[a][b] holds the coordinates of e_a . e_b in the basis (e1, e2, e3).
struct MultiplicationTable {
  std::array<std::array<Vec3, 3>, 3> table;
  const Vec3& product(int a, int b) const { return table[a][b]; }
};

MultiplicationTable structure_constants(const PotentialJet& jet);

/// f_xxy^2 - f_yyy - f_xxx f_xyy.
cplx associativity_residual(const PotentialJet& jet);

/// c_{abc} = d^3 F / dt^a dt^b dt^c for the potential above (x = t2, y = t3).
Tensor3 third_partials(const PotentialJet& jet);

/// eta_{bc} = c_{1bc}: the antidiagonal metric of the example.
Matrix3 example_metric();

/// max over (a, b, c, d) of |c_{abl} eta^{lm} c_{mcd} - c_{dbl} eta^{lm} c_{mca}|.
/// Throws DomainError when eta is singular.
double wdvv_residual_3d(const Tensor3& c, const Matrix3& eta);

/// gamma''' - 6 gamma gamma'' + 9 gamma'^2.
cplx chazy_residual(const GammaJet& g);

/// Jet of gamma = (pi i / 3) E2 at tau, from termwise-differentiated sums.
GammaJet e2_gamma_jet(TauPoint tau);

/// Third partials of f = -x^4 gamma(y) / 16 at (x, y). For this potential
/// associativity_residual = (x^4 / 16) chazy_residual.
PotentialJet chazy_potential_jet(cplx x, const GammaJet& g);

/// Substituting gamma = (pi i / 3) g and d/dtau = 2 pi i D (D = q d/dq), every
/// term of the Chazy equation carries (pi i / 3)(2 pi i)^2 (pi i); dividing it
/// out leaves the rational identity 2 D^3 g - 2 g D^2 g + 3 (D g)^2 = 0.
/// Returns the left-hand side for g = E2.
PiGradedQSeries chazy_e2_exact(int order);

/// y^3 - (3/2) gamma y^2 + (3/2) gamma' y - (1/4) gamma'' = 0, leading first.
struct Cubic {
  std::array<cplx, 4> coeffs;
};

Cubic dh_cubic(const GammaJet& g);

/// All three complex roots (with multiplicity) of a cubic with nonzero
/// leading coefficient.
std::array<cplx, 3> cubic_roots(const Cubic& c);

/// min over pairings of max |a_i - b_pi(i)|.
double root_set_distance(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b);

/// Distance between the roots of dh_cubic(e2_gamma_jet(tau)) and
/// dh_theta_solution(tau).
double dh_cubic_roots_check(TauPoint tau);

}  // namespace halphen::frobenius

#endif  // HALPHEN_FROBENIUS_HPP
