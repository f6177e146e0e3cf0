#include <doctest.h>

#include <cmath>

#include "halphen/ramanujan.hpp"
#include "halphen/theta.hpp"
#include "halphen/verify.hpp"

using namespace halphen;

TEST_CASE("vector field examples") {
  const auto r = ramanujan_vector_field(Triple<Rational>{1, 1, 1});
  CHECK(r[0] == 0);
  CHECK(r[1] == 0);
  CHECK(r[2] == 0);
  const auto s = ramanujan_vector_field(Triple<Rational>{2, 1, 0});
  CHECK(s[0] == Rational(1, 4));
  CHECK(s[1] == Rational(2, 3));
  CHECK(s[2] == Rational(-1, 2));
}

TEST_CASE("Ramanujan relations hold exactly") {
  for (int order : {0, 1, 30}) {
    const auto r = ramanujan_series_residual(order);
    for (const auto& s : r) {
      CHECK(s.is_zero());
      CHECK(s.trunc_order() == order);
    }
  }
}

TEST_CASE("map constants") {
  const MapConstants m = map_constants();
  CHECK(std::abs(m.a1 - 2.0 * pi_i / 12.0) < 1e-15);
  CHECK(std::abs(m.a2 - 12.0 * m.a1 * m.a1) < 1e-14);
  CHECK(std::abs(m.a3 - 8.0 * m.a1 * m.a1 * m.a1) < 1e-14);
}

TEST_CASE("map examples") {
  // mpmath fixture: (1, 2, 3) -> (-12 i / pi, -12 / pi^2, 0).
  const auto e = dh_to_eisenstein({1.0, 2.0, 3.0});
  CHECK(std::abs(e[0] - cplx(0.0, -3.8197186342054880585)) < 1e-14);
  CHECK(std::abs(e[1] - (-1.2158542037080532573)) < 1e-14);
  CHECK(std::abs(e[2]) < 1e-14);
  const auto z = dh_to_eisenstein({0.0, 0.0, 0.0});
  for (const auto& v : z) {
    CHECK(std::abs(v) == 0.0);
  }
}

TEST_CASE("map is symmetric in t") {
  const DHState t{cplx(0.3, 1.0), cplx(-1.2, 0.4), cplx(2.0, -0.7)};
  const auto e = dh_to_eisenstein(t);
  const auto f = dh_to_eisenstein({t[2], t[0], t[1]});
  const auto g = dh_to_eisenstein({t[1], t[0], t[2]});
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(e[i] - f[i]) < 1e-12);
    CHECK(std::abs(e[i] - g[i]) < 1e-12);
  }
}

TEST_CASE("the normalized map is the (pi i)-graded map") {
  const DHState t{cplx(0.3, 1.0), cplx(-1.2, 0.4), cplx(2.0, -0.7)};
  const auto e = dh_to_eisenstein(t);
  const auto n = dh_to_eisenstein_normalized(t);
  for (int k = 0; k < 3; ++k) {
    const cplx scaled = std::pow(pi_i, k + 1) * e[k];
    CHECK(std::abs(scaled - n[k]) < 1e-12 * std::max(1.0, std::abs(n[k])));
  }
}

TEST_CASE("polynomial identity behind the map") {
  // 4 (x - t1)(x - t2)(x - t3) = 4 (x - a1 E2)^3 - a2 E4 (x - a1 E2) - a3 E6.
  const DHState t{cplx(0.5, 0.2), cplx(-0.7, 1.1), cplx(1.3, 0.0)};
  const auto e = dh_to_eisenstein(t);
  const MapConstants m = map_constants();
  for (cplx x : {cplx(0.0), cplx(1.0, 1.0), cplx(-2.0, 0.5)}) {
    const cplx lhs = 4.0 * (x - t[0]) * (x - t[1]) * (x - t[2]);
    const cplx y = x - m.a1 * e[0];
    const cplx rhs = 4.0 * y * y * y - m.a2 * e[1] * y - m.a3 * e[2];
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("exact conjugacy at random rational states") {
  verify::RationalSampler s(2024);
  for (int k = 0; k < 50; ++k) {
    const auto r = conjugacy_residual_normalized(s.triple());
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
    CHECK(r[2] == 0);
  }
}

TEST_CASE("normalized Jacobian against finite differences") {
  const DHState t{cplx(0.4, -0.3), cplx(1.1, 0.2), cplx(-0.6, 0.9)};
  const auto jac = dh_to_eisenstein_normalized_jacobian(t);
  const double h = 1e-6;
  for (int i = 0; i < 3; ++i) {
    DHState p = t;
    DHState m = t;
    p[i] += h;
    m[i] -= h;
    const auto ep = dh_to_eisenstein_normalized(p);
    const auto em = dh_to_eisenstein_normalized(m);
    for (int r = 0; r < 3; ++r) {
      CHECK(std::abs((ep[r] - em[r]) / (2.0 * h) - jac[r][i]) < 1e-6);
    }
  }
}

TEST_CASE("numeric conjugacy along the theta solution") {
  const auto r = conjugacy_residual(dh_theta_solution(TauPoint(cplx(0.0, 1.3))));
  for (const auto& v : r) {
    CHECK(std::abs(v) < 1e-9);
  }
}

TEST_CASE("map of the theta solution is (E2, E4, E6)") {
  for (cplx tau : {cplx(0.0, 1.0), cplx(0.0, 1.5), cplx(0.2, 1.1)}) {
    const TauPoint tp(tau);
    const auto e = dh_to_eisenstein(dh_theta_solution(tp));
    const auto ref = eisenstein_eval(tp);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(e[k] - ref[k]) < 1e-9 * std::max(1.0, std::abs(ref[k])));
    }
  }
}
