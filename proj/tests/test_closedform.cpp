#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "doctest.h"
#include "ringabs/closedform.hpp"
#include "ringabs/errors.hpp"

using namespace ringabs;
using namespace ringabs::closedform;

namespace {

// 1-D maximization oracle: coarse scan plus golden-section refinement on the
// bracketing interval. Independent of the closed-form argmax expression.
std::pair<double, double> maximize_1d(const std::function<double(double)>& f, double lo,
                                      double hi) {
  const int scan = 256;
  int best = 0;
  double best_v = -1.0;
  for (int i = 0; i <= scan; ++i) {
    const double x = lo + (hi - lo) * i / scan;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / scan;
  double b = lo + (hi - lo) * std::min(best + 1, scan) / scan;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace

TEST_CASE("single emitter closed forms") {
  SUBCASE("balanced rates absorb a quarter") {
    const auto r = single_atom(gamma0, gamma0, 0.0);
    CHECK(r.absorbed_fraction == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("stated limits") {
    CHECK(single_atom(gamma0, 0.0, 2.0).absorbed_fraction == 0.0);
    CHECK(single_atom(gamma0, 0.0, 0.0).scattered_fraction == 1.0);
  }
  SUBCASE("frozen example: Gamma_T=2, Gamma_D=3 gives 1/9") {
    const auto r = single_atom(gamma0, 2.0, 3.0);
    CHECK(r.absorbed_fraction == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(r.rho_ee_factor == doctest::Approx(4.0 / 18.0).epsilon(1e-15));
  }
  SUBCASE("dephasing only suppresses single-emitter absorption") {
    double prev = 1.0;
    for (double gd : {0.0, 0.5, 2.0, 10.0}) {
      const double v = single_atom(gamma0, 1.0, gd).absorbed_fraction;
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("collective local-dephasing cross-section") {
  SUBCASE("frozen example 5/29") {
    CHECK(local_dephasing_sigma(10, 1.0, 9.0) ==
          doctest::Approx(0.17241379310344829).epsilon(1e-14));
  }
  SUBCASE("N = 1 consistency with the single emitter") {
    for (double gd : {0.0, 1.0, 7.0})
      CHECK(local_dephasing_sigma(1, 0.8, gd) ==
            doctest::Approx(single_atom(gamma0, 0.8, gd).absorbed_fraction).epsilon(1e-14));
  }
  SUBCASE("strong-dephasing limit: N times the single emitter at N Gamma0") {
    const int n = 10;
    const double gt = 1e-6;
    const double v = local_dephasing_sigma(n, gt, 1e5);
    const double lim = n * single_atom(n * gamma0, gt, 1e5).absorbed_fraction;
    CHECK(v == doctest::Approx(lim).epsilon(1e-4));
    // and the displayed small-trap form
    CHECK(v == doctest::Approx(local_dephasing_sigma_small_trap(n, gt, 1e5)).epsilon(1e-4));
  }
  SUBCASE("pole reported at Gamma_T = 0 with dephasing") {
    CHECK_THROWS_AS(local_dephasing_sigma(5, 0.0, 1.0), DegenerateSink);
    CHECK(local_dephasing_sigma(5, 0.0, 0.0) == 0.0);
  }
  SUBCASE("bounded by 1/4 over a million random draws") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    std::uniform_int_distribution<int> nd(1, 200);
    for (int i = 0; i < 1'000'000; ++i) {
      const double v =
          local_dephasing_sigma(nd(rng), std::pow(10.0, logu(rng)), std::pow(10.0, logu(rng)));
      REQUIRE(v <= 0.25);
      REQUIRE(v >= 0.0);
    }
  }
}

TEST_CASE("optimal local dephasing") {
  SUBCASE("N = 1: dephasing never helps") {
    for (double gt : {0.01, 1.0, 50.0}) {
      const auto rep = optimal_local_dephasing(1, gt);
      CHECK(rep.arg_gamma_x == 0.0);
      CHECK(rep.boundary);
    }
  }
  SUBCASE("frozen example N=10, Gamma_T=Gamma0") {
    const auto rep = optimal_local_dephasing(10, 1.0);
    CHECK(rep.arg_gamma_x == doctest::Approx(5.7082039324993691).epsilon(1e-14));
    CHECK(rep.value == doctest::Approx(0.17910613801673749).epsilon(1e-14));
    CHECK(!rep.boundary);
  }
  SUBCASE("N=2, Gamma_T=Gamma0 sits exactly on the existence boundary") {
    const auto rep = optimal_local_dephasing(2, 1.0);
    CHECK(rep.arg_gamma_x == 0.0);
    CHECK(rep.boundary);
  }
  SUBCASE("agrees with 1-D numeric maximization (sampled grid)") {
    for (int n : {2, 5, 17, 50}) {
      for (double gt : {1e-3, 0.1, 1.0, 31.0, 1e3}) {
        const auto rep = optimal_local_dephasing(n, gt);
        const auto [x, v] = maximize_1d(
            [&](double gd) { return local_dephasing_sigma(n, gt, gd); }, 0.0, n * gamma0);
        CHECK(std::abs(v - rep.value) <= 1e-6 * rep.value);
        CHECK(std::abs(x - rep.arg_gamma_x) <= 1e-6 * std::max(rep.arg_gamma_x, gamma0));
      }
    }
  }
}

TEST_CASE("zero-temperature thermal closed form") {
  SUBCASE("no thermal width reduces to the single-emitter form with N Gamma0") {
    const int n = 8;
    const double gt = 0.9;
    CHECK(zero_T_thermal_sigma(n, gt, 0.0).absorbed_fraction ==
          doctest::Approx(single_atom(n * gamma0, gt, 0.0).absorbed_fraction).epsilon(1e-14));
  }
  SUBCASE("matched sinks reach sigma/4") {
    const int n = 10;
    const auto r = zero_T_thermal_sigma(n, 4.0, 6.0);  // Gamma_T + Gamma_B^th = N Gamma0
    CHECK(r.absorbed_fraction == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("frozen example (10, 0.1, 5)") {
    CHECK(zero_T_thermal_sigma(10, 0.1, 5.0).absorbed_fraction ==
          doctest::Approx(0.22367440024560326).epsilon(1e-14));
  }
  SUBCASE("exchange symmetry is exact") {
    for (double a : {0.037, 1.5, 20.0})
      for (double b : {0.2, 3.0, 700.0})
        CHECK(zero_T_thermal_sigma(12, a, b).absorbed_fraction ==
              zero_T_thermal_sigma(12, b, a).absorbed_fraction);
  }
  SUBCASE("pole at Gamma_T = 0") {
    CHECK_THROWS_AS(zero_T_thermal_sigma(5, 0.0, 1.0), DegenerateSink);
  }
}

TEST_CASE("incoherent closed forms") {
  SUBCASE("monotone nondecreasing in the dephasing rate") {
    double prev = -1.0;
    for (double gd : {0.0, 0.1, 1.0, 10.0, 1e3}) {
      const double v = incoherent_local_sigma(10, 0.4, gd);
      CHECK(v >= prev);
      prev = v;
    }
    prev = -1.0;
    for (double gb : {0.0, 0.1, 1.0, 10.0, 1e3}) {
      const double v = incoherent_zero_T_sigma(10, 0.4, gb);
      CHECK(v >= prev);
      prev = v;
    }
  }
  SUBCASE("strong local dephasing: trapping reduced by N") {
    const double gt = 0.8;
    CHECK(incoherent_local_sigma(10, gt, 1e8) == doctest::Approx(gt / (gamma0 + gt)).epsilon(1e-6));
  }
  SUBCASE("weak dephasing: single-emitter with enhanced irreversible decay") {
    const int n = 10;
    const double gt = 0.5, gd = 0.01;
    CHECK(incoherent_local_sigma(n, gt, gd) ==
          doctest::Approx((gt + gd) / (n * gamma0 + gt + gd)).epsilon(3e-3));
  }
}

TEST_CASE("collective-to-independent ratio") {
  SUBCASE("local model saturates at one for strong dephasing") {
    CHECK(independent_ratio(10, 0.05, 1e7, DephasingModel::Local) ==
          doctest::Approx(1.0).epsilon(1e-4));
  }
  SUBCASE("monotone growth with dephasing in the local model") {
    double prev = 0.0;
    for (double gd : {1e-2, 1.0, 1e2, 1e4}) {
      const double r = independent_ratio(10, 0.05, gd, DephasingModel::Local);
      CHECK(r > prev);
      CHECK(r <= 1.0 + 1e-12);
      prev = r;
    }
  }
  SUBCASE("zero-temperature limit expression") {
    // Gamma_B^th = 2 fbar J N with N large: ratio -> (G0/GT)(2 fbar J/(G0+2 fbar J))^2
    const double gt = 1e-4, fbar_j = 22.4;  // 2 fbar J = 44.8
    const int n = 300;
    const double ratio =
        independent_ratio(n, gt, 2.0 * fbar_j * n, DephasingModel::ThermalZeroT);
    CHECK(ratio == doctest::Approx(zero_T_ratio_limit(gt, fbar_j)).epsilon(1e-3));
  }
}

TEST_CASE("detuning-averaged cross-sections") {
  SUBCASE("extinction integral is independent of the decoherence rates") {
    const int n = 7;
    const double expected = 0.5 * std::numbers::pi * n * gamma0;
    for (double gt : {0.01, 1.0, 40.0})
      for (double gd : {0.0, 0.6, 12.0}) {
        const auto avg = detuning_averaged(n, gt, gd);
        CHECK(avg.ext_analytic == doctest::Approx(expected).epsilon(1e-15));
        CHECK(avg.ext_numeric == doctest::Approx(expected).epsilon(1e-6));
      }
  }
  SUBCASE("absorption integral matches its closed form") {
    const auto avg = detuning_averaged(10, 0.3, 2.0);
    CHECK(avg.abs_numeric == doctest::Approx(avg.abs_analytic).epsilon(1e-6));
  }
  SUBCASE("no dephasing: branching matches the incoherent single-emitter ratio") {
    const int n = 10;
    const double gt = 0.7;
    const auto avg = detuning_averaged(n, gt, 0.0);
    CHECK(avg.abs_analytic / avg.ext_analytic ==
          doctest::Approx(gt / (n * gamma0 + gt)).epsilon(1e-14));
  }
}
