#include <cmath>
#include <complex>

#include "doctest.h"
#include "ringabs/modes.hpp"

using namespace ringabs;

namespace {

modes::ModeSpectrum finite(int n, double d) {
  const model::RingGeometry geom{n, d};
  return modes::spectrum_finite(geom, greens::coupling_matrices(geom));
}

}  // namespace

TEST_CASE("canonical mode enumeration") {
  CHECK(modes::mode_indices(1) == std::vector<int>{0});
  CHECK(modes::mode_indices(4) == std::vector<int>{0, 1, -1, 2});
  CHECK(modes::mode_indices(5) == std::vector<int>{0, 1, -1, 2, -2});
}

TEST_CASE("sum rules and degeneracy of the finite spectrum") {
  for (int n : {1, 2, 5, 10, 24}) {
    for (double d : {0.05, 0.2, 0.7}) {
      const auto sp = finite(n, d);
      CHECK(std::abs(sp.rates.sum() - n * gamma0) <= 1e-10 * n * gamma0);
      CHECK(std::abs(sp.shifts.sum()) <= 1e-10 * n * gamma0);
      CHECK(sp.rates.minCoeff() >= -1e-10 * gamma0);
      for (int i = 0; i < sp.size(); ++i)
        for (int j = 0; j < sp.size(); ++j)
          if (sp.modes[i] == -sp.modes[j]) {
            CHECK(std::abs(sp.shifts[i] - sp.shifts[j]) <= 1e-12);
            CHECK(std::abs(sp.rates[i] - sp.rates[j]) <= 1e-12);
          }
    }
  }
}

TEST_CASE("non-circulant couplings are rejected") {
  const model::RingGeometry geom{4, 0.1};
  auto cm = greens::coupling_matrices(geom);
  cm.dissipative(1, 2) += 1e-6;
  cm.dissipative(2, 1) += 1e-6;
  CHECK_THROWS_AS(modes::spectrum_finite(geom, cm), NonCirculantInput);
}

TEST_CASE("deep-subwavelength ring approaches the Dicke spectrum") {
  // d = 0.01, N = 10: bright rate within 2% of N Gamma0, all others <= 0.05
  const auto sp = finite(10, 0.01);
  CHECK(sp.bright_m() == 0);
  CHECK(std::abs(sp.rates[sp.bright_pos] - 10.0) <= 0.02 * 10.0);
  for (int i = 0; i < sp.size(); ++i)
    if (i != sp.bright_pos) CHECK(sp.rates[i] <= 0.05 * gamma0);

  // d -> 0.005: |Gamma~_0 - N Gamma0| <= 1% N Gamma0 for N <= 20
  for (int n = 1; n <= 20; ++n) {
    const auto s = finite(n, 0.005);
    CHECK(std::abs(s.rates[0] - n * gamma0) <= 0.01 * n * gamma0);
  }
}

TEST_CASE("finite shifts follow the tight-binding dispersion in the near field") {
  // J~_0 - J~_m vs 2 J_nn (1 - cos(2 pi m/N)) within 15% at d = 0.01, N = 10
  const double d = 0.01;
  const auto sp = finite(10, d);
  const double j_nn = greens::green_zz(d).real();
  for (int i = 0; i < sp.size(); ++i) {
    const int m = sp.modes[i];
    if (m == 0) continue;
    const double gap = sp.shifts[0] - sp.shifts[i];
    const double tb = 2.0 * j_nn * (1.0 - std::cos(2.0 * std::numbers::pi * m / 10.0));
    CHECK(std::abs(gap - tb) <= 0.15 * std::abs(tb));
  }
}

TEST_CASE("one point of the bright-rate-vs-spacing curve (N=10, d=0.2)") {
  // at this spacing the m = +-1 pair is more radiant than the symmetric mode
  const auto sp = finite(10, 0.2);
  const double gb = sp.rates[sp.bright_pos];
  CHECK(gb > gamma0);
  CHECK(gb < 10.0 * gamma0);
  CHECK(modes::bright_mode(sp) == 1);
  // frozen from an independent direct Fourier sum of green_zz couplings
  CHECK(gb == doctest::Approx(3.212375130180728).epsilon(1e-10));
}

TEST_CASE("Dicke idealization") {
  SUBCASE("N=4 quarter-turn shifts") {
    const auto sp = modes::spectrum_dicke(4, 0.1);
    const double j = modes::dispersion_scale(0.1);
    CHECK(j == doctest::Approx(6.0471627062249042).epsilon(1e-14));  // 3/(2 (0.2 pi)^3)
    CHECK(sp.shifts[0] == doctest::Approx(j).epsilon(1e-15));
    CHECK(std::abs(sp.shifts[1]) <= 1e-15 * j);
    CHECK(std::abs(sp.shifts[2]) <= 1e-15 * j);
    CHECK(sp.shifts[3] == doctest::Approx(-j).epsilon(1e-15));
  }
  SUBCASE("bright rate is exactly N Gamma0 and dark rates exactly zero") {
    for (int n : {1, 2, 7, 16}) {
      const auto sp = modes::spectrum_dicke(n, 0.08);
      CHECK(sp.rates[0] == n * gamma0);
      for (int i = 1; i < n; ++i) CHECK(sp.rates[i] == 0.0);
      CHECK(sp.rates.sum() == n * gamma0);
      CHECK(modes::bright_mode(sp) == 0);
    }
  }
}

TEST_CASE("bright mode selection and tie breaking") {
  modes::ModeSpectrum sp;
  sp.modes = {0, 1, -1, 2};
  sp.n_emitters = 4;
  sp.shifts = Eigen::VectorXd::Zero(4);
  sp.rates.resize(4);
  sp.rates << 0.3, 2.0, 2.0, 1.0;  // degenerate +-1 maximum
  CHECK(modes::bright_mode(sp) == 1);

  // argmax is invariant under uniform positive rescaling
  modes::ModeSpectrum scaled = sp;
  scaled.rates *= 77.3;
  CHECK(modes::bright_mode(scaled) == modes::bright_mode(sp));
}

TEST_CASE("plane-wave drive projection") {
  SUBCASE("Parseval for any geometry") {
    for (int n : {1, 3, 10, 21}) {
      for (double d : {0.05, 0.2, 1.4}) {
        const auto dp = modes::project_drive({n, d}, 0.7);
        CHECK(dp.amplitudes.squaredNorm() ==
              doctest::Approx(n * 0.7 * 0.7).epsilon(1e-10));
      }
    }
  }
  SUBCASE("uniform phase limit concentrates on the symmetric mode") {
    const int n = 8;
    const auto dp = modes::project_drive({n, 1e-5}, 1.0);
    CHECK(std::abs(dp.amplitudes[0]) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-7));
    for (int i = 1; i < n; ++i) CHECK(std::abs(dp.amplitudes[i]) < 1e-3);
  }
  SUBCASE("finite ring drives subradiant modes (N=10, d=0.2)") {
    const auto dp = modes::project_drive({10, 0.2}, 1.0);
    const auto ms = modes::mode_indices(10);
    for (int i = 0; i < 10; ++i)
      if (std::abs(ms[i]) == 1) CHECK(std::norm(dp.amplitudes[i]) > 1e-4);
  }
  SUBCASE("ideal Dicke projection") {
    const auto dp = modes::dicke_drive(6, 0.5);
    CHECK(std::abs(dp.amplitudes[0]) == doctest::Approx(std::sqrt(6.0) * 0.5).epsilon(1e-15));
    for (int i = 1; i < 6; ++i) CHECK(std::abs(dp.amplitudes[i]) == 0.0);
  }
}
