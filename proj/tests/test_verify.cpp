#include <doctest.h>

#include "halphen/qseries.hpp"
#include "halphen/sweep.hpp"
#include "halphen/verify.hpp"

using namespace halphen;
using namespace halphen::verify;

TEST_CASE("sampler is deterministic and respects its bounds") {
  RationalSampler a(42);
  RationalSampler b(42);
  for (int k = 0; k < 100; ++k) {
    const Rational x = a.next();
    CHECK(x == b.next());
    CHECK(abs(x) <= 60);
    CHECK(x.get_den() <= 17);
  }
  RationalSampler c(1);
  for (int k = 0; k < 100; ++k) {
    const auto t = c.distinct_triple();
    CHECK(t[0] != t[1]);
    CHECK(t[0] != t[2]);
    CHECK(t[1] != t[2]);
  }
}

TEST_CASE("parallel and serial sweeps agree") {
  const auto f = [](std::size_t i) { return static_cast<double>(i * i) + 0.5; };
  CHECK(parallel_sweep(1000, f) == serial_sweep(1000, f));
  CHECK(parallel_sweep(0, f).empty());

  for (auto sweep : {gauss_manin_sweep, conjugacy_sweep, darboux_sweep, coupled_reduction_sweep}) {
    const auto p = sweep(40, 7, Backend::parallel);
    const auto s = sweep(40, 7, Backend::serial);
    CHECK(p.samples == s.samples);
    CHECK(p.failures() == s.failures());
    CHECK(p.all_zero());
    CHECK(p.worst() == 0.0);
  }
}

TEST_CASE("different seeds give different samples") {
  CHECK(gauss_manin_sweep(5, 1).samples != gauss_manin_sweep(5, 2).samples);
}

TEST_CASE("derivative residuals are small") {
  CHECK(dh_theta_ode_residual(TauPoint(cplx(0.0, 1.0))) < 1e-6);
  CHECK(darbouxA_residual(1.0) < 1e-6);
  CHECK(omegasolution_residual(1.0, 0.3) < 1e-8);
}
