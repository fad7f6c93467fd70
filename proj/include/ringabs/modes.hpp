// modes.hpp — Spin-wave collective modes of the ring: shifts J~_m, decay
// rates Gamma~_m, bright-mode identification and mode-projected drive.

#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "ringabs/greens.hpp"
#include "ringabs/model.hpp"

namespace ringabs::modes {

enum class SpectrumRegime { DickeIdeal, FiniteSize };

// Canonical mode enumeration: 0, +1, -1, +2, -2, ..., with the unpaired
// m = N/2 last for even N. The order is fixed so that CSV columns are stable
// and so that a first-maximum scan breaks bright-mode ties toward the
// smallest |m| and then toward nonnegative m.
std::vector<int> mode_indices(int n_emitters);

struct ModeSpectrum {
  std::vector<int> modes;      // canonical order (see mode_indices)
  Eigen::VectorXd shifts;      // J~_m (Gamma0)
  Eigen::VectorXd rates;       // Gamma~_m (Gamma0)
  int bright_pos = 0;          // position in canonical order of max Gamma~_m
  SpectrumRegime regime = SpectrumRegime::FiniteSize;
  int n_emitters = 0;

  int size() const { return static_cast<int>(modes.size()); }
  int bright_m() const { return modes[bright_pos]; }
};

struct DriveProjection {
  std::vector<int> modes;        // aligned with ModeSpectrum canonical order
  Eigen::VectorXcd amplitudes;   // Omega_m (Gamma0)
  double reference_rabi = 0.0;   // Omega_0
};

// Nearest-neighbour dispersion coefficient J = 3 Gamma0 / (2 k0^3 d^3) of the
// Dicke-limit tight-binding dispersion J~_m = J cos(2 pi m / N).
double dispersion_scale(double spacing);

// Discrete Fourier transform of the circulant coupling rows:
//   J~_m = sum_{l != 0} e^{i 2 pi m l / N} J(l)
//   Gamma~_m = sum_l e^{i 2 pi m l / N} Gamma(l)
// Throws NonCirculantInput if the couplings are not circulant to 1e-12 Gamma0;
// imaginary residues are checked against 1e-10 and discarded.
ModeSpectrum spectrum_finite(const model::RingGeometry& geometry,
                             const greens::CouplingMatrices& couplings);

// Dicke-limit idealization: Gamma~_0 = N Gamma0 and exactly dark m != 0,
// J~_m = J cos(2 pi m / N). Exact zeros keep closed-form comparisons exact.
ModeSpectrum spectrum_dicke(int n_emitters, double spacing);

// The m maximizing Gamma~_m; ties break toward smallest |m|, then m >= 0.
int bright_mode(const ModeSpectrum& spectrum);

// Plane-wave drive along +x projected on the spin-wave basis:
//   Omega_m = N^{-1/2} sum_j e^{-i 2 pi m j / N} Omega_0 e^{i k0 x_j}
DriveProjection project_drive(const model::RingGeometry& geometry, double rabi);

// Ideal Dicke-limit projection (all x_j -> 0): Omega_0 -> sqrt(N) Omega_0 on
// the symmetric mode, exact zeros elsewhere.
DriveProjection dicke_drive(int n_emitters, double rabi);

}  // namespace ringabs::modes
