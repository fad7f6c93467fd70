#include "ringabs/bath.hpp"

#include <cmath>
#include <limits>

#include "ringabs/errors.hpp"

namespace ringabs::bath {

namespace {

// Exponentially scaled difference D(x) = e^{-x} [I0(x) - I1(x)].
//
// Below x = 20 the library Bessel functions are used directly (no overflow,
// subtraction loses at most ~1.6 digits). Above, the asymptotic expansions of
// I0 and I1 are combined term by term, which avoids the cancellation of the
// direct difference: the combined series has positive coefficients,
//   D(x) ~ [1/(2x) + 3/(16 x^2) + 45/(256 x^3) + ...] / sqrt(2 pi x).
double scaled_i0_minus_i1(double x) {
  if (x == 0.0) return 1.0;
  if (x < 20.0)
    return (std::cyl_bessel_i(0.0, x) - std::cyl_bessel_i(1.0, x)) * std::exp(-x);
  double t0 = 1.0, t1 = 1.0;  // running asymptotic terms for nu = 0, 1
  double sum = 0.0;           // t0 - t1 starts at 0
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    t0 *= (odd * odd) / (8.0 * k * x);          // -(0 - odd^2) / (8 k x)
    t1 *= -(4.0 - odd * odd) / (8.0 * k * x);
    const double diff = t0 - t1;
    if (std::abs(diff) >= prev) break;          // divergent asymptotic series: stop at smallest term
    sum += diff;
    if (std::abs(diff) < 1e-17 * sum) break;
    prev = std::abs(diff);
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// Asymptotic envelope g(x) ~ D(x) to four orders,
//   g(x) = (2 pi)^{-1/2} [a1 x^{-3/2} + a2 x^{-5/2} + a3 x^{-7/2} + a4 x^{-9/2}],
// with its derivatives and right tail integral, used for the Euler-Maclaurin
// tail of the series over n.
constexpr double kA1 = 0.5;
constexpr double kA2 = 0.1875;
constexpr double kA3 = 0.17578125;      // 45/256
constexpr double kA4 = 0.25634765625;   // 8400/32768

double rsqrt2pi() { return 1.0 / std::sqrt(2.0 * std::numbers::pi); }

double g_env(double x) {
  const double u = 1.0 / x, r = 1.0 / std::sqrt(x);
  return rsqrt2pi() * r * u * (kA1 + u * (kA2 + u * (kA3 + u * kA4)));
}

double g_env_prime(double x) {
  const double u = 1.0 / x, r = 1.0 / std::sqrt(x);
  return -rsqrt2pi() * r * u * u *
         (1.5 * kA1 + u * (2.5 * kA2 + u * (3.5 * kA3 + u * 4.5 * kA4)));
}

double g_env_third(double x) {
  const double u = 1.0 / x, r = 1.0 / std::sqrt(x);
  return -rsqrt2pi() * r * u * u * u * u *
         (1.5 * 2.5 * 3.5 * kA1 +
          u * (2.5 * 3.5 * 4.5 * kA2 +
               u * (3.5 * 4.5 * 5.5 * kA3 + u * 4.5 * 5.5 * 6.5 * kA4)));
}

double g_env_integral(double x) {  // int_x^inf g
  const double u = 1.0 / x, r = 1.0 / std::sqrt(x);
  return rsqrt2pi() * r *
         (2.0 * kA1 + u * ((2.0 / 3.0) * kA2 + u * (0.4 * kA3 + u * (2.0 / 7.0) * kA4)));
}

void require_thermal_beta(const model::BathSpec& bath) {
  model::validate_or_throw(bath);
  if (bath.inv_temperature == 0.0)
    throw InfiniteTemperatureRate(
        "transition rate diverges at beta = 0; use finite beta or the local-dephasing model");
}

}  // namespace

double spectral_density(double omega, const model::BathSpec& bath) {
  model::validate_or_throw(bath);
  switch (bath.model) {
    case model::BathModel::Ohmic:
      return bath.fbar * omega;
    case model::BathModel::DrudeLorentz:
      return 2.0 * bath.f * bath.omega_c * omega / (omega * omega + bath.omega_c * bath.omega_c);
  }
  return 0.0;
}

double transition_rate(double omega_ab, const model::BathSpec& bath) {
  require_thermal_beta(bath);
  const double beta = bath.inv_temperature;
  if (std::isinf(beta)) {
    // zero temperature: 2 J(w) for downhill transitions, exact 0 otherwise
    return omega_ab > 0.0 ? 2.0 * spectral_density(omega_ab, bath) : 0.0;
  }
  if (omega_ab == 0.0) return 2.0 * bath.fbar / beta;  // removable singularity
  const double bw = beta * omega_ab;
  if (bw < -40.0)  // 1 - e^{-bw} ~ -e^{-bw}; rewrite to avoid overflow
    return 2.0 * spectral_density(-omega_ab, bath) * std::exp(bw);
  return 2.0 * spectral_density(omega_ab, bath) / (-std::expm1(-bw));
}

RateMatrix rate_matrix(const modes::ModeSpectrum& spectrum, const model::BathSpec& bath) {
  require_thermal_beta(bath);
  const int n = spectrum.size();
  RateMatrix rm;
  rm.modes = spectrum.modes;
  rm.rates = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      rm.rates(a, b) = transition_rate(spectrum.shifts[a] - spectrum.shifts[b], bath);
    }
  rm.thermal_widths = rm.rates.rowwise().sum();
  rm.bright_pos = spectrum.bright_pos;
  rm.bright_width = rm.thermal_widths[rm.bright_pos];
  return rm;
}

RateMatrix uniform_rate_matrix(const modes::ModeSpectrum& spectrum, double k) {
  if (!(k >= 0.0)) throw InvalidParameter({"uniform rate k >= 0"});
  const int n = spectrum.size();
  RateMatrix rm;
  rm.modes = spectrum.modes;
  rm.rates = Eigen::MatrixXd::Constant(n, n, k);
  rm.rates.diagonal().setZero();
  rm.thermal_widths = rm.rates.rowwise().sum();
  rm.bright_pos = spectrum.bright_pos;
  rm.bright_width = rm.thermal_widths[rm.bright_pos];
  return rm;
}

double zero_T_width_closed(int m, int n_emitters, double fbar_J) {
  const int n = n_emitters;
  if (n < 2) throw InvalidParameter({"n_emitters >= 2"});
  const int am = std::abs(m);
  if (am > n / 2) throw InvalidParameter({"mode index in canonical range"});
  const int count = n - 2 * am - 1;
  if (count <= 0) return 0.0;  // darkest mode(s): no lower-energy channels
  const double pi_n = std::numbers::pi / n;
  const double counting = std::cos(2.0 * pi_n * am) * count;
  const double csc_sin = std::sin(2.0 * pi_n * am + pi_n) / std::sin(pi_n);
  return 2.0 * fbar_J * (counting + std::max(0.0, csc_sin));
}

double bright_width_series(int n_emitters, double beta_J, double fbar_J, long max_terms) {
  if (!(beta_J > 0.0)) throw InvalidParameter({"beta_J > 0"});
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});

  // Terms decay only as (n beta_J)^{-3/2}: sum directly into the asymptotic
  // regime, then close with the Euler-Maclaurin tail of the envelope. The
  // stopping index must scale like 1/beta_J to reach that regime.
  constexpr double kAsymptoticX = 30.0;
  const long n_stop = std::max<long>(64, static_cast<long>(std::ceil(kAsymptoticX / beta_J)));
  if (n_stop > max_terms)
    throw SlowConvergence("bright_width_series: term cap reached before the asymptotic "
                          "regime; the cap must scale with 1/beta_J");

  double sum = 1.0;  // n = 0 term: I0(0) - I1(0) = 1
  for (long n = 1; n <= n_stop; ++n) sum += scaled_i0_minus_i1(n * beta_J);

  const double x1 = (n_stop + 1) * beta_J;
  const double tail = g_env_integral(x1) / beta_J + 0.5 * g_env(x1) -
                      beta_J * g_env_prime(x1) / 12.0 +
                      beta_J * beta_J * beta_J * g_env_third(x1) / 720.0;
  sum += tail;
  return 2.0 * n_emitters * fbar_J * sum;
}

}  // namespace ringabs::bath
