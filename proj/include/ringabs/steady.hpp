// steady.hpp — Weak-drive steady-state populations and cross-sections.
//
// All solvers work in the linearized weak-drive regime (rho_gg pinned to 1):
// populations are O(|Omega|^2) and every returned fraction is independent of
// the drive amplitude. Thermal/mode-mixing cases solve the Pauli balance
// system; the site-basis oracle provides an independent verification path in
// the bare emitter basis (local dephasing only, N <= 12).

#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "ringabs/bath.hpp"
#include "ringabs/greens.hpp"
#include "ringabs/modes.hpp"

namespace ringabs::steady {

struct SteadyState {
  std::vector<int> modes;            // canonical order (empty for site-basis results)
  Eigen::VectorXd populations;       // rho_mm, O(|Omega_0|^2 / Gamma0^2)
  Eigen::VectorXd pump;              // s_m, the optical pumping vector
  double total_excited = 0.0;        // rho_ee
  double absorbed_fraction = 0.0;    // sigma_abs / sigma
  std::optional<double> scattered_fraction;  // sigma_sc / sigma, where the paper defines it
};

// Dicke limit with pure local dephasing, drive resonant with the bright mode
// (closed-form branching ratios and total population).
// Throws DegenerateSink for Gamma_T = 0 with Gamma_D > 0 (dark populations
// are unbounded there; the pole is reported, not clamped).
SteadyState coherent_dicke_local(int n_emitters, double rabi, double gamma_t, double gamma_d);

// General mode-space steady state under coherent drive:
//   Gamma_m^tot rho_mm - sum_m' k_{m'->m} rho_m'm' =
//       4 |Omega_m|^2 Gamma_m^tot / [(Gamma_m^tot)^2 + 4 (J~_m - delta)^2]
// with Gamma_m^tot = Gamma~_m + Gamma_T + Gamma_m^th. sigma_abs normalization
// uses the plane-wave single-emitter Rabi frequency |Omega_0|^2.
SteadyState coherent_thermal(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                             const modes::DriveProjection& drive, double gamma_t, double delta);

// Incoherent symmetric pump (Dicke regime): same balance system with the
// bright-mode pump replaced by epsilon N Gamma0 n;
// sigma_abs^inc / sigma = Gamma_T rho_ee / (epsilon n N Gamma0).
SteadyState incoherent_dicke(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                             double intensity, double mean_photons, double gamma_t);

// Convenience: incoherent pump with local dephasing, realized as the uniform
// rate matrix k = Gamma_D / N (exact population equivalence).
SteadyState incoherent_dicke_local(int n_emitters, double intensity, double mean_photons,
                                   double gamma_t, double gamma_d);

// Balance matrix of the Pauli system, A(i,i) = Gamma_i^tot,
// A(i,j) = -k_{j->i}; exposed for stationarity and kernel checks.
Eigen::MatrixXd balance_matrix(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                               double gamma_t);

// Site-basis brute force for the excited-state population: solves the
// N-dimensional coherence system, then the N^2-dimensional excited-block
// system  -i(H rho - rho H^+) + Gamma_D (diag(rho) - rho) - Gamma_T rho
//          + i(Omega c^+ - c Omega^+) = 0,   H = J - (i/2) Gamma,
// and returns tr(rho_ex). Local dephasing model only; N <= 12.
double site_basis_oracle(const greens::CouplingMatrices& couplings, double gamma_t,
                         double gamma_d, const Eigen::VectorXcd& site_rabi, double delta);

}  // namespace ringabs::steady
