#include "halphen/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "halphen/dh_core.hpp"
#include "halphen/theta.hpp"

namespace halphen::frobenius {

MultiplicationTable structure_constants(const PotentialJet& j) {
  MultiplicationTable m{};
  const Vec3 e1{1.0, 0.0, 0.0};
  const Vec3 e2{0.0, 1.0, 0.0};
  const Vec3 e3{0.0, 0.0, 1.0};
  const Vec3 e22{j.f_xxy, j.f_xxx, 1.0};
  const Vec3 e23{j.f_xyy, j.f_xxy, 0.0};
  const Vec3 e33{j.f_yyy, j.f_xyy, 0.0};
  m.table[0] = {e1, e2, e3};
  m.table[1] = {e2, e22, e23};
  m.table[2] = {e3, e23, e33};
  return m;
}

cplx associativity_residual(const PotentialJet& j) {
  return j.f_xxy * j.f_xxy - j.f_yyy - j.f_xxx * j.f_xyy;
}

Tensor3 third_partials(const PotentialJet& j) {
  Tensor3 c{};
  auto set = [&c](int a, int b, int d, cplx v) {
    const std::array<int, 3> idx{a, b, d};
    std::array<int, 3> p = idx;
    std::sort(p.begin(), p.end());
    do {
      c[p[0]][p[1]][p[2]] = v;
    } while (std::next_permutation(p.begin(), p.end()));
  };
  set(0, 0, 2, 1.0);  // from (t1)^2 t3 / 2
  set(0, 1, 1, 1.0);  // from t1 (t2)^2 / 2
  set(1, 1, 1, j.f_xxx);
  set(1, 1, 2, j.f_xxy);
  set(1, 2, 2, j.f_xyy);
  set(2, 2, 2, j.f_yyy);
  return c;
}

Matrix3 example_metric() {
  Matrix3 eta{};
  eta[0][2] = 1.0;
  eta[2][0] = 1.0;
  eta[1][1] = 1.0;
  return eta;
}

namespace {

Matrix3 inverse3(const Matrix3& m) {
  const cplx det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  double scale = 0.0;
  for (const auto& row : m) {
    for (const auto& v : row) {
      scale = std::max(scale, std::abs(v));
    }
  }
  if (std::abs(det) <= 1e-14 * scale * scale * scale) {
    throw DomainError("eta is singular");
  }
  Matrix3 inv{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // cofactor of (c, r)
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      inv[r][c] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return inv;
}

}  // namespace

double wdvv_residual_3d(const Tensor3& c, const Matrix3& eta) {
  const Matrix3 inv = inverse3(eta);
  // raised[a][b][m] = c_{abl} eta^{lm}
  Tensor3 raised{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int m = 0; m < 3; ++m) {
        cplx s = 0.0;
        for (int l = 0; l < 3; ++l) {
          s += c[a][b][l] * inv[l][m];
        }
        raised[a][b][m] = s;
      }
    }
  }
  double worst = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int g = 0; g < 3; ++g) {
        for (int d = 0; d < 3; ++d) {
          cplx lhs = 0.0;
          cplx rhs = 0.0;
          for (int m = 0; m < 3; ++m) {
            lhs += raised[a][b][m] * c[m][g][d];
            rhs += raised[d][b][m] * c[m][g][a];
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
  }
  return worst;
}

cplx chazy_residual(const GammaJet& g) {
  return g.d3 - 6.0 * g.g * g.d2 + 9.0 * g.d1 * g.d1;
}

GammaJet e2_gamma_jet(TauPoint tau) {
  const auto e = eisenstein_theta_jet(2, tau);
  const cplx pre = pi_i / 3.0;
  const cplx d = 2.0 * pi_i;  // d/dtau = 2 pi i q d/dq
  return {pre * e[0], pre * d * e[1], pre * d * d * e[2], pre * d * d * d * e[3]};
}

PotentialJet chazy_potential_jet(cplx x, const GammaJet& g) {
  const cplx x2 = x * x;
  return {-1.5 * x * g.g, -0.75 * x2 * g.d1, -0.25 * x2 * x * g.d2, -x2 * x2 * g.d3 / 16.0};
}

PiGradedQSeries chazy_e2_exact(int order) {
  const PiGradedQSeries g = eisenstein_series(2, order);
  const PiGradedQSeries d1 = theta_q(g);
  const PiGradedQSeries d2 = theta_q(d1);
  const PiGradedQSeries d3 = theta_q(d2);
  return Rational(2) * d3 - Rational(2) * (g * d2) + Rational(3) * (d1 * d1);
}

Cubic dh_cubic(const GammaJet& g) {
  return {{1.0, -1.5 * g.g, 1.5 * g.d1, -0.25 * g.d2}};
}

std::array<cplx, 3> cubic_roots(const Cubic& cub) {
  const auto& k = cub.coeffs;
  if (k[0] == 0.0) {
    throw std::invalid_argument("cubic_roots: leading coefficient is zero");
  }
  const cplx b = k[1] / k[0];
  const cplx c = k[2] / k[0];
  const cplx d = k[3] / k[0];
  // y = z - b/3 gives z^3 + p z + r = 0.
  const cplx p = c - b * b / 3.0;
  const cplx r = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const cplx disc = std::sqrt(r * r / 4.0 + p * p * p / 27.0);
  cplx u3 = -r / 2.0 + disc;
  if (std::abs(u3) < std::abs(-r / 2.0 - disc)) {
    u3 = -r / 2.0 - disc;
  }
  const cplx u = std::pow(u3, 1.0 / 3.0);
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<cplx, 3> roots;
  cplx uk = u;
  for (int i = 0; i < 3; ++i) {
    const cplx v = (std::abs(uk) == 0.0) ? cplx(0.0) : -p / (3.0 * uk);
    roots[i] = uk + v - b / 3.0;
    uk *= omega;
  }
  // Newton polish on the monic cubic.
  for (auto& y : roots) {
    for (int it = 0; it < 3; ++it) {
      const cplx f = ((y + b) * y + c) * y + d;
      const cplx df = (3.0 * y + 2.0 * b) * y + c;
      if (std::abs(df) < 1e-12 * (1.0 + std::abs(y) * std::abs(y))) {
        break;
      }
      y -= f / df;
    }
  }
  return roots;
}

double root_set_distance(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  std::array<int, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double dh_cubic_roots_check(TauPoint tau) {
  const auto roots = cubic_roots(dh_cubic(e2_gamma_jet(tau)));
  return root_set_distance(roots, dh_theta_solution(tau));
}

}  // namespace halphen::frobenius
