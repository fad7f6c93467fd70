// closedform.hpp — Analytic benchmark formulas for the absorption
// cross-section and the optimizers over decoherence parameters.
//
// Everything is in Gamma0 units and returns dimensionless fractions
// sigma/sigma unless noted. Population "factors" are per |Omega|^2.

#pragma once

#include <string>

#include "ringabs/units.hpp"

namespace ringabs::closedform {

struct SingleAtomResult {
  double rho_ee_factor = 0.0;       // rho_ee / |Omega|^2
  double scattered_fraction = 0.0;  // sigma_sc / sigma
  double absorbed_fraction = 0.0;   // sigma_abs / sigma
};

// Single emitter with radiative decay gamma, trapping and local dephasing:
//   rho_ee = 4|Omega|^2 / [(gamma + Gamma_D + Gamma_T)(gamma + Gamma_T)]
//   sigma_sc/sigma  = gamma/(gamma+Gamma_D+Gamma_T) * gamma/(gamma+Gamma_T)
//   sigma_abs/sigma = gamma/(gamma+Gamma_D+Gamma_T) * Gamma_T/(gamma+Gamma_T)
SingleAtomResult single_atom(double gamma, double gamma_t, double gamma_d);

// Dicke-ring absorption under pure local dephasing:
//   sigma_abs/sigma = N Gamma0/(N Gamma0+Gamma_D+Gamma_T)
//                   * (Gamma_D+Gamma_T)/(N Gamma0+Gamma_D+Gamma_T+Gamma_D Gamma0/Gamma_T)
// Pole at Gamma_T = 0 with Gamma_D > 0 (throws DegenerateSink).
double local_dephasing_sigma(int n_emitters, double gamma_t, double gamma_d);

// Limit forms, exposed for testing:
// Gamma_T << Gamma_D: N Gamma0/(N Gamma0+Gamma_D+Gamma_T) * Gamma_T/(Gamma0+Gamma_T)
double local_dephasing_sigma_small_trap(int n_emitters, double gamma_t, double gamma_d);
// Gamma_D << Gamma_T (also the exact N -> infinity form):
// N Gamma0/(N Gamma0+Gamma_D+Gamma_T) * (Gamma_D+Gamma_T)/(N Gamma0+Gamma_D+Gamma_T)
double local_dephasing_sigma_large_n(int n_emitters, double gamma_t, double gamma_d);

enum class OptimumMethod { ClosedForm, GridRefine };

struct OptimumReport {
  double arg_gamma_t = 0.0;     // fixed input or optimized, per context
  double arg_gamma_x = 0.0;     // Gamma_D^max or Gamma_B^th*, per context
  double value = 0.0;           // sigma_abs^max / sigma
  OptimumMethod method = OptimumMethod::ClosedForm;
  bool boundary = false;        // argmax clamped to a domain boundary
  bool degenerate = false;      // argmax degenerate along a line
};

// Optimal local dephasing at fixed Gamma_T:
//   Gamma_D^max = max{0, Gamma0 sqrt(N(N-1) Gamma_T/(Gamma_T+Gamma0)) - Gamma_T}
// with the interior maximum value
//   sigma^max/sigma = (sqrt((N-1)/N) + sqrt((Gamma0+Gamma_T)/Gamma_T))^{-2};
// clamped optima report boundary = true and the Gamma_D = 0 value instead.
OptimumReport optimal_local_dephasing(int n_emitters, double gamma_t);

struct ZeroTThermalResult {
  double rho_bb_factor = 0.0;  // rho_BB / |Omega|^2 = 4N/(N Gamma0+Gamma_T+Gamma_B^th)^2
  double rho_ee_factor = 0.0;  // (Gamma_T+Gamma_B^th)/Gamma_T * rho_bb_factor
  double absorbed_fraction = 0.0;
};

// Zero-temperature thermal dephasing closed form; symmetric under exchange of
// Gamma_T and Gamma_B^th at fixed sum. Pole at Gamma_T = 0 (throws).
ZeroTThermalResult zero_T_thermal_sigma(int n_emitters, double gamma_t, double gamma_bth);

// Incoherent-illumination closed forms:
// high temperature / local dephasing:
//   (Gamma_T+Gamma_D)/(N Gamma0+Gamma_D+Gamma_T+Gamma_D Gamma0/Gamma_T)
double incoherent_local_sigma(int n_emitters, double gamma_t, double gamma_d);
// zero temperature: (Gamma_T+Gamma_B^th)/(N Gamma0+Gamma_T+Gamma_B^th)
double incoherent_zero_T_sigma(int n_emitters, double gamma_t, double gamma_bth);

enum class DephasingModel { Local, ThermalZeroT };

// Collective-to-independent ratio sigma_abs / (N sigma_abs^1at(Gamma0)), with
// the independent emitters dephased at the same rate (Gamma_D = dephasing for
// Local, Gamma_D = Gamma_B^th for ThermalZeroT).
double independent_ratio(int n_emitters, double gamma_t, double dephasing, DephasingModel model);

// Low-temperature large-N limit of the ratio:
//   (Gamma0/Gamma_T) (2 fbar J / (Gamma0 + 2 fbar J))^2
double zero_T_ratio_limit(double gamma_t, double fbar_J);

struct DetuningAveraged {
  double ext_analytic = 0.0;  // (pi/2) N Gamma0 sigma, in units of sigma*Gamma0
  double abs_analytic = 0.0;
  double ext_numeric = 0.0;   // adaptive quadrature with analytic tail correction
  double abs_numeric = 0.0;
};

// Detuning-integrated extinction and absorption cross-sections of the
// Dicke-local model. The extinction integral is independent of
// (Gamma_D, Gamma_T); the numeric companions verify both to 1e-6 relative
// (throws QuadratureNotConverged otherwise).
DetuningAveraged detuning_averaged(int n_emitters, double gamma_t, double gamma_d);

}  // namespace ringabs::closedform
