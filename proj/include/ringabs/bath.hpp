// bath.hpp — Thermal transition rates between collective modes.
//
// The paper's rate n(w_ba) J(w_ba) + (1 + n(w_ab)) J(w_ab), with an
// antisymmetric spectral density J(-w) = -J(w), reduces algebraically to the
// single-term form
//     k(w) = 2 J(w) / (1 - e^{-beta w}),
// which for the Ohmic density J(w) = fbar * w has the removable singularity
// k(0) = 2 fbar / beta and the zero-temperature limit 2 fbar * max(w, 0).
// The reduced form is what is implemented; it removes the 0 * inf ambiguity
// of evaluating the occupation number at negative arguments.

#pragma once

#include <Eigen/Core>
#include <vector>

#include "ringabs/model.hpp"
#include "ringabs/modes.hpp"

namespace ringabs::bath {

// Mode-to-mode transition rates, Gamma0 units, canonical mode order.
//   rates(a, b) = k_{a -> b} >= 0, zero diagonal
//   detailed balance: k_{a->b} / k_{b->a} = e^{beta (J~_a - J~_b)}
//   degenerate pairs (w_ab = 0): k_{a->b} = k_{b->a} = 2 fbar / beta
struct RateMatrix {
  std::vector<int> modes;
  Eigen::MatrixXd rates;
  Eigen::VectorXd thermal_widths;  // Gamma^th_m = sum_{m'} k_{m -> m'}
  int bright_pos = 0;
  double bright_width = 0.0;       // Gamma^th_B
};

// J(w) for w of either sign (antisymmetric continuation).
// Ohmic: fbar * w.  Drude-Lorentz: 2 f omega_c w / (w^2 + omega_c^2).
double spectral_density(double omega, const model::BathSpec& bath);

// k(w_ab) as above. beta = +inf uses the rectified-linear form exactly;
// beta = 0 throws InfiniteTemperatureRate (the rate diverges).
double transition_rate(double omega_ab, const model::BathSpec& bath);

RateMatrix rate_matrix(const modes::ModeSpectrum& spectrum, const model::BathSpec& bath);

// Uniform rates k_{a->b} = k for all pairs: exactly the population dynamics
// of local dephasing with Gamma_D = N k.
RateMatrix uniform_rate_matrix(const modes::ModeSpectrum& spectrum, double k);

// Zero-temperature thermal width of mode m in the Dicke dispersion, closed
// form (restricted sum over lower-energy modes):
//   Gamma^th_m / (2 fbar J) = cos(2 pi m / N) max{0, N - 2|m| - 1}
//                           + max{0, csc(pi/N) sin(2 pi |m| / N + pi/N)}
// Returns Gamma^th_m in Gamma0 units given fbar_J = fbar * J (Gamma0).
// The darkest modes (|m| = N/2 even, (N-1)/2 odd) have no downhill channels
// and return exactly 0; m = 0 returns exactly 2 * fbar_J * N.
double zero_T_width_closed(int m, int n_emitters, double fbar_J);

// Continuum-limit (N -> infinity) bright-mode thermal width via the Bessel
// series  Gamma^th_B / (2 N fbar J) = sum_{n>=0} e^{-n bJ} [I0(n bJ) - I1(n bJ)].
// Terms decay as (n bJ)^{-3/2}; the sum runs into the asymptotic regime and
// is closed with an analytic Euler-Maclaurin tail (relative accuracy ~1e-8,
// far inside the O(1/N) continuum error it estimates). Returns Gamma^th_B in
// Gamma0 units given fbar_J = fbar * J. Throws SlowConvergence when beta_J is
// so small that max_terms (which must scale like 1/beta_J) is exhausted
// before the asymptotic regime is reached.
double bright_width_series(int n_emitters, double beta_J, double fbar_J,
                           long max_terms = 50'000'000);

}  // namespace ringabs::bath
