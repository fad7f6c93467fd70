#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "ringabs/bath.hpp"

using namespace ringabs;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Direct restricted sum over lower-energy Dicke modes, the independent oracle
// for the zero-temperature closed form.
double zero_T_width_direct(int m, int n, double fbar_j) {
  const double jm = std::cos(2.0 * std::numbers::pi * std::abs(m) / n);
  double sum = 0.0;
  for (int mp : modes::mode_indices(n)) {
    if (mp == m) continue;
    const double jmp = std::cos(2.0 * std::numbers::pi * std::abs(mp) / n);
    if (jmp < jm) sum += 2.0 * fbar_j * (jm - jmp);
  }
  return sum;
}

}  // namespace

TEST_CASE("spectral density") {
  const auto ohmic = model::BathSpec::ohmic(1e-7, 1.0);
  CHECK(bath::spectral_density(6.05, ohmic) == doctest::Approx(6.05e-7).epsilon(1e-15));
  CHECK(bath::spectral_density(0.0, ohmic) == 0.0);
  CHECK(bath::spectral_density(-2.0, ohmic) == -bath::spectral_density(2.0, ohmic));

  const auto dl = model::BathSpec::drude_lorentz(0.5, 100.0, 1.0);
  // w << omega_c: J(w) ~ fbar w with fbar = 2 f / omega_c
  CHECK(bath::spectral_density(0.01, dl) == doctest::Approx(dl.fbar * 0.01).epsilon(1e-4));
  CHECK(bath::spectral_density(-3.0, dl) == -bath::spectral_density(3.0, dl));
}

TEST_CASE("transition rate limits and detailed balance") {
  SUBCASE("zero temperature is the rectified linear form") {
    const auto b = model::BathSpec::ohmic(0.3, kInf);
    CHECK(bath::transition_rate(5.0, b) == doctest::Approx(2.0 * 0.3 * 5.0).epsilon(1e-15));
    CHECK(bath::transition_rate(-5.0, b) == 0.0);
    CHECK(bath::transition_rate(0.0, b) == 0.0);
  }
  SUBCASE("high temperature: rate approaches 2 fbar / beta, independent of w") {
    const auto b = model::BathSpec::ohmic(0.2, 1e-6);
    const double k0w = bath::transition_rate(0.0, b);
    CHECK(k0w == doctest::Approx(2.0 * 0.2 / 1e-6).epsilon(1e-15));
    for (double w : {-3.0, -0.1, 0.05, 2.0})
      CHECK(bath::transition_rate(w, b) == doctest::Approx(k0w).epsilon(1e-5));
  }
  SUBCASE("detailed balance ratio k(w)/k(-w) = e^{beta w}") {
    // w = 0.7 J, beta J = 1.3 -> e^{0.91} = 2.4843225333848166 (mpmath)
    const double j = 2.0, beta = 1.3 / j, w = 0.7 * j;
    const auto b = model::BathSpec::ohmic(1e-3, beta);
    const double ratio = bath::transition_rate(w, b) / bath::transition_rate(-w, b);
    CHECK(ratio == doctest::Approx(2.4843225333848166).epsilon(1e-12));
  }
  SUBCASE("beta = 0 diverges") {
    const auto b = model::BathSpec::ohmic(0.1, 0.0);
    CHECK_THROWS_AS(bath::transition_rate(1.0, b), InfiniteTemperatureRate);
  }
  SUBCASE("no overflow for strongly uphill transitions") {
    const auto b = model::BathSpec::ohmic(0.1, 1e4);
    CHECK(bath::transition_rate(-1.0, b) == 0.0);  // e^{-beta w} underflows harmlessly
    CHECK(bath::transition_rate(-1e-3, b) > 0.0);
  }
}

TEST_CASE("rate matrix on the Dicke spectrum") {
  const auto sp = modes::spectrum_dicke(4, 0.1);
  const double j = modes::dispersion_scale(0.1);
  const double fbar = 1e-5;

  SUBCASE("zero temperature: only downhill channels") {
    const auto rm = bath::rate_matrix(sp, model::BathSpec::ohmic(fbar, kInf));
    CHECK(rm.rates.minCoeff() >= 0.0);
    // modes (0, +1, -1, 2) with shifts (J, 0, 0, -J): Gamma_1^th = 2 fbar J
    CHECK(rm.thermal_widths[1] == doctest::Approx(2.0 * fbar * j).epsilon(1e-13));
    CHECK(rm.thermal_widths[2] == doctest::Approx(2.0 * fbar * j).epsilon(1e-13));
    // degenerate +-1 pair exchanges nothing at zero temperature
    CHECK(rm.rates(1, 2) == 0.0);
    CHECK(rm.rates(2, 1) == 0.0);
    // bright width: 2 fbar J sum_m (1 - cos) = 2 fbar J N
    CHECK(rm.bright_width == doctest::Approx(2.0 * fbar * j * 4.0).epsilon(1e-13));
    // darkest mode has no downhill channel
    CHECK(rm.thermal_widths[3] == 0.0);
  }

  SUBCASE("finite temperature: detailed balance and symmetric degenerate pairs") {
    const auto rm = bath::rate_matrix(sp, model::BathSpec::ohmic(fbar, 0.8 / j));
    for (int a = 0; a < 4; ++a)
      for (int b2 = 0; b2 < 4; ++b2) {
        if (a == b2) continue;
        REQUIRE(rm.rates(a, b2) > 1e-300);
        const double lhs = rm.rates(a, b2) / rm.rates(b2, a);
        const double rhs = std::exp((0.8 / j) * (sp.shifts[a] - sp.shifts[b2]));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
    CHECK(rm.rates(1, 2) == rm.rates(2, 1));
  }

  SUBCASE("Pauli generator kernel is the Boltzmann vector") {
    const double beta = 1.1 / j;
    const auto rm = bath::rate_matrix(sp, model::BathSpec::ohmic(fbar, beta));
    // generator L(i,j) = k_{j->i} - delta_ij Gamma_i^th; replace one row by the
    // normalization to solve for the stationary vector
    Eigen::MatrixXd gen = rm.rates.transpose();
    for (int i = 0; i < 4; ++i) gen(i, i) -= rm.thermal_widths[i];
    gen.row(3).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(4);
    rhs[3] = 1.0;
    const Eigen::VectorXd st = gen.partialPivLu().solve(rhs);
    Eigen::VectorXd gibbs(4);
    for (int i = 0; i < 4; ++i) gibbs[i] = std::exp(-beta * sp.shifts[i]);
    gibbs /= gibbs.sum();
    CHECK((st - gibbs).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("uniform rate matrix reproduces local dephasing populations") {
  const auto sp = modes::spectrum_dicke(6, 0.1);
  const auto rm = bath::uniform_rate_matrix(sp, 0.25);
  CHECK(rm.rates(2, 4) == 0.25);
  CHECK(rm.rates(3, 3) == 0.0);
  CHECK(rm.thermal_widths[0] == doctest::Approx(5.0 * 0.25).epsilon(1e-15));
}

TEST_CASE("zero-temperature closed form (Appendix-style counting)") {
  SUBCASE("N=4, m=1: single downhill channel") {
    CHECK(bath::zero_T_width_closed(1, 4, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("bright mode gives exactly 2 fbar J N, darkest exactly zero") {
    for (int n : {2, 3, 4, 9, 16, 101, 512}) {
      CHECK(bath::zero_T_width_closed(0, n, 0.37) == 2.0 * 0.37 * n);
      const int darkest = n / 2;
      CHECK(bath::zero_T_width_closed(darkest, n, 0.37) == 0.0);
      CHECK(bath::zero_T_width_closed(-((n - 1) / 2), n, 0.37) ==
            bath::zero_T_width_closed((n - 1) / 2, n, 0.37));
    }
  }
  SUBCASE("equals the direct restricted sum to 1e-10 relative") {
    for (int n : {2, 3, 5, 8, 33, 512}) {
      for (int m : modes::mode_indices(n)) {
        const double closed = bath::zero_T_width_closed(m, n, 1.0);
        const double direct = zero_T_width_direct(m, n, 1.0);
        if (direct == 0.0)
          CHECK(closed == 0.0);
        else
          CHECK(std::abs(closed - direct) <= 1e-10 * direct);
      }
    }
  }
  SUBCASE("matches rate_matrix row sums at zero temperature") {
    const int n = 12;
    const auto sp = modes::spectrum_dicke(n, 0.07);
    const double j = modes::dispersion_scale(0.07);
    const auto rm = bath::rate_matrix(sp, model::BathSpec::ohmic(2e-4, kInf));
    for (int i = 0; i < n; ++i) {
      const double closed = bath::zero_T_width_closed(sp.modes[i], n, 2e-4 * j);
      if (closed == 0.0)
        CHECK(rm.thermal_widths[i] <= 1e-12 * j);
      else
        CHECK(rm.thermal_widths[i] == doctest::Approx(closed).epsilon(1e-10));
    }
  }
}

TEST_CASE("bright-mode width series (continuum limit)") {
  SUBCASE("beta J -> infinity leaves only the n = 0 term") {
    CHECK(bath::bright_width_series(100, 1e4, 0.5) ==
          doctest::Approx(2.0 * 100 * 0.5).epsilon(1e-8));
  }
  SUBCASE("monotone decreasing in beta J") {
    double prev = kInf;
    for (double bj : {0.05, 0.2, 1.0, 4.0, 20.0, 100.0}) {
      const double w = bath::bright_width_series(10, bj, 1.0);
      CHECK(w < prev);
      prev = w;
    }
  }
  SUBCASE("1/(beta J) scaling at high temperature") {
    const double w1 = bath::bright_width_series(1, 1e-3, 1.0);
    const double w2 = bath::bright_width_series(1, 2e-3, 1.0);
    CHECK(w1 / w2 == doctest::Approx(2.0).epsilon(2e-3));
  }
  SUBCASE("matches the direct mode sum at N = 1000 within the continuum error") {
    const int n = 1000;
    const auto sp = modes::spectrum_dicke(n, 1.0);
    const double j = modes::dispersion_scale(1.0);
    for (double bj : {0.1, 1.0, 10.0}) {
      const auto rm = bath::rate_matrix(sp, model::BathSpec::ohmic(1.0, bj / j));
      const double series = bath::bright_width_series(n, bj, j);
      CHECK(std::abs(series - rm.bright_width) <= 0.01 * rm.bright_width);
    }
  }
  SUBCASE("slow convergence is reported") {
    CHECK_THROWS_AS(bath::bright_width_series(10, 1e-9, 1.0), SlowConvergence);
    CHECK_THROWS_AS(bath::bright_width_series(10, 0.1, 1.0, 100), SlowConvergence);
  }
}
