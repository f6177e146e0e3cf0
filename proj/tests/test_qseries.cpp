#include <doctest.h>

#include <cmath>
#include <random>

#include "halphen/qseries.hpp"

using namespace halphen;

namespace {

PiGradedQSeries random_series(std::mt19937_64& rng, Variable v, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  PiGradedQSeries s(v, order);
  for (int n = 0; n <= order; ++n) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    s.set_coeff(n, r);
  }
  return s;
}

}  // namespace

TEST_CASE("theta series leading coefficients") {
  const auto t2 = theta_series(2, 40);
  CHECK(t2.coeff(1) == 2);
  CHECK(t2.coeff(9) == 2);
  CHECK(t2.coeff(25) == 2);
  CHECK(t2.coeff(2) == 0);
  const auto t3 = theta_series(3, 40);
  CHECK(t3.coeff(0) == 1);
  CHECK(t3.coeff(4) == 2);
  CHECK(t3.coeff(16) == 2);
  CHECK(t3.coeff(36) == 2);
  const auto t4 = theta_series(4, 40);
  CHECK(t4.coeff(4) == -2);
  CHECK(t4.coeff(16) == 2);
  CHECK(t4.coeff(36) == -2);
  CHECK(t4.variable() == Variable::w);
}

TEST_CASE("Eisenstein coefficients against divisor sums") {
  const auto e2 = eisenstein_series(2, 3);
  CHECK(e2.coeff(0) == 1);
  CHECK(e2.coeff(1) == -24);
  CHECK(e2.coeff(2) == -72);
  CHECK(e2.coeff(3) == -96);
  const auto e4 = eisenstein_series(4, 3);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  CHECK(e4.coeff(3) == 6720);
  const auto e6 = eisenstein_series(6, 2);
  CHECK(e6.coeff(1) == -504);
  CHECK(e6.coeff(2) == -16632);
  CHECK(divisor_sigma(1, 12) == 28);
  CHECK(divisor_sigma(3, 6) == 1 + 8 + 27 + 216);
  CHECK_THROWS_AS(eisenstein_series(8, 3), std::invalid_argument);
}

TEST_CASE("E4 and E6 as differential polynomials in E2") {
  // E4 = E2^2 - 12 D E2, E6 = E2^3 - 18 E2 D E2 + 36 D^2 E2 with D = q d/dq.
  const int n = 40;
  const auto e2 = eisenstein_series(2, n);
  const auto d = theta_q(e2);
  CHECK(e2 * e2 - Rational(12) * d == eisenstein_series(4, n));
  CHECK(e2 * e2 * e2 - Rational(18) * (e2 * d) + Rational(36) * theta_q(d) ==
        eisenstein_series(6, n));
}

TEST_CASE("theta_q of E2") {
  const auto d = theta_q(eisenstein_series(2, 5));
  CHECK(d.coeff(0) == 0);
  CHECK(d.coeff(1) == -24);
  CHECK(d.coeff(2) == -144);
}

TEST_CASE("multiplication is commutative, associative, distributive") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_series(rng, Variable::q, 25);
    const auto b = random_series(rng, Variable::q, 25);
    const auto c = random_series(rng, Variable::q, 25);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(5);
  for (int order : {3, 60, 200}) {
    const auto a = random_series(rng, Variable::w, order);
    const auto b = random_series(rng, Variable::w, order);
    CHECK(mul_serial(a, b).dense() == mul_parallel(a, b).dense());
  }
}

TEST_CASE("mixed variables lift q to w") {
  const auto e2 = eisenstein_series(2, 3);
  const auto w = e2.in_w();
  CHECK(w.variable() == Variable::w);
  CHECK(w.trunc_order() == 31);
  CHECK(w.coeff(8) == -24);
  CHECK(w.coeff(9) == 0);
  const auto sum = e2 + theta_series(3, 20);
  CHECK(sum.variable() == Variable::w);
  CHECK(sum.trunc_order() == 20);
  CHECK(sum.coeff(4) == 2);
  CHECK(sum.coeff(8) == -24);
}

TEST_CASE("grading mismatch is rejected") {
  const auto a = eisenstein_series(2, 5);
  const auto b = a.with_pi_power(1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK((a * b).pi_power() == 1);
  CHECK_FALSE(a == b);
}

TEST_CASE("coefficient access out of range") {
  const auto a = eisenstein_series(2, 5);
  CHECK_THROWS_AS(a.coeff(6), std::out_of_range);
  CHECK_THROWS_AS(a.coeff(-1), std::out_of_range);
}

TEST_CASE("inverse") {
  const auto e4 = eisenstein_series(4, 30);
  const auto one = PiGradedQSeries::constant(1, Variable::q, 30);
  CHECK(e4 * inverse(e4) == one);
  CHECK_THROWS(inverse(theta_series(2, 10)));
}

TEST_CASE("log of a unit") {
  // 2w + 2w^9 = 2w (1 + w^8), log(1 + w^8) = w^8 - w^16/2 + w^24/3 - ...
  PiGradedQSeries s(Variable::w, 30);
  s.set_coeff(1, 2);
  s.set_coeff(9, 2);
  const LogUnit lu = log_unit(s);
  CHECK(lu.leading_exponent == 1);
  CHECK(lu.leading_coeff == 2);
  CHECK(lu.log.trunc_order() == 29);
  CHECK(lu.log.coeff(8) == 1);
  CHECK(lu.log.coeff(16) == Rational(-1, 2));
  CHECK(lu.log.coeff(24) == Rational(1, 3));
  CHECK(lu.log.coeff(9) == 0);
}

TEST_CASE("log derivative") {
  // q d/dq log(theta_3) computed two ways.
  const auto t3 = theta_series(3, 80);
  CHECK(log_derivative(t3) * t3 == w_dw(t3));
  CHECK_THROWS(log_derivative(PiGradedQSeries(Variable::w, 10)));
}

TEST_CASE("Jacobi quartic identity") {
  const int n = 200;
  const auto t2 = theta_series(2, n);
  const auto t3 = theta_series(3, n);
  const auto t4 = theta_series(4, n);
  const auto sq = [](const PiGradedQSeries& x) { return x * x; };
  CHECK(sq(sq(t3)) == sq(sq(t2)) + sq(sq(t4)));
}

TEST_CASE("numeric evaluation") {
  const TauPoint i(cplx(0.0, 1.0));
  // mpmath: jtheta(3, 0, exp(-pi))
  CHECK(std::abs(eval_series(theta_series(3, 120), i) - 1.0864348112133080146) < 1e-15);
  CHECK(std::abs(eval_series(theta_series(2, 120), i) - eval_series(theta_series(4, 120), i)) <
        1e-15);
  // pi i E2 at i: E2(i) = 3 / pi.
  const auto e2 = eisenstein_series(2, 40).with_pi_power(1);
  CHECK(std::abs(eval_series(e2, i) - cplx(0.0, 3.0)) < 1e-13);
}

TEST_CASE("tail bound shrinks with order and dominates the error") {
  const TauPoint tau(cplx(0.1, 0.6));
  const cplx ref = eval_series(theta_series(3, 400), tau);
  double prev = 1.0;
  for (int n : {10, 30, 60}) {
    const auto s = theta_series(3, n);
    const double tb = tail_bound(s, tau);
    CHECK(tb < prev);
    CHECK(std::abs(eval_series(s, tau) - ref) <= tb);
    prev = tb;
  }
}

TEST_CASE("JSON round trip") {
  const auto e6 = eisenstein_series(6, 12).with_pi_power(3);
  nlohmann::json j = e6;
  CHECK(j["pi_power"] == 3);
  CHECK(j["trunc_order"] == 12);
  CHECK(j["variable"] == "q");
  CHECK(j["terms"][1][1] == "-504/1");
  const auto back = series_from_json(j);
  CHECK(back == e6);
  CHECK(back.trunc_order() == 12);

  nlohmann::json bad = j;
  bad["terms"] = nlohmann::json::array({nlohmann::json::array({2, "1/1"}), nlohmann::json::array({1, "1/1"})});
  CHECK_THROWS(series_from_json(bad));
  bad["terms"] = nlohmann::json::array({nlohmann::json::array({1, "1/0"})});
  CHECK_THROWS(series_from_json(bad));
}
