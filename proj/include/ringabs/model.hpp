// model.hpp — Parameter types, unit conventions and validated construction.

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ringabs/errors.hpp"
#include "ringabs/units.hpp"

namespace ringabs::model {

// Regular N-gon of emitters in the z = 0 plane, dipoles normal to the plane
// (transverse polarization). Vertex j sits at angle 2*pi*j/N, first vertex on
// the +x axis; the drive plane wave propagates along +x.
struct RingGeometry {
  int n_emitters = 1;       // N >= 1
  double spacing = 0.1;     // nearest-neighbour distance d, in lambda0 (> 0)

  std::vector<std::string> validate() const;

  // Circumradius: d / (2 sin(pi/N)) for N >= 2, 0 for the single emitter.
  double radius() const {
    if (n_emitters < 2) return 0.0;
    return spacing / (2.0 * std::sin(std::numbers::pi / n_emitters));
  }
};

enum class BathModel { Ohmic, DrudeLorentz };

// Phonon bath: spectral density model plus inverse temperature.
// inv_temperature is in 1/Gamma0; +infinity is the zero-temperature sentinel,
// 0 means infinite temperature (rejected by the rate evaluators).
struct BathSpec {
  BathModel model = BathModel::Ohmic;
  double fbar = 0.0;         // Ohmic slope (dimensionless); = 2f/omega_c for Drude-Lorentz
  double f = 0.0;            // Drude-Lorentz coupling (Gamma0)
  double omega_c = 1.0;      // Drude-Lorentz cutoff (Gamma0)
  double inv_temperature = std::numeric_limits<double>::infinity();

  static BathSpec ohmic(double fbar, double beta) {
    BathSpec b;
    b.model = BathModel::Ohmic;
    b.fbar = fbar;
    b.inv_temperature = beta;
    return b;
  }
  static BathSpec drude_lorentz(double f, double omega_c, double beta) {
    BathSpec b;
    b.model = BathModel::DrudeLorentz;
    b.f = f;
    b.omega_c = omega_c;
    b.fbar = (omega_c > 0.0) ? 2.0 * f / omega_c : 0.0;
    b.inv_temperature = beta;
    return b;
  }

  std::vector<std::string> validate() const;
};

// Trapping channel plus at most one dephasing mechanism. Local dephasing and
// a thermal bath are alternative models and may not be combined.
struct DecoherenceSpec {
  double trap_rate = 0.0;        // Gamma_T >= 0 (Gamma0)
  double local_dephasing = 0.0;  // Gamma_D >= 0 (Gamma0)
  std::optional<BathSpec> bath;

  std::vector<std::string> validate() const;
};

enum class DriveKind { CoherentPlaneWave, IncoherentSymmetric };

struct DriveSpec {
  DriveKind kind = DriveKind::CoherentPlaneWave;
  double rabi = 1e-3;                  // Omega_0 (Gamma0), coherent
  std::optional<double> detuning;      // delta (Gamma0); empty = resonant with brightest mode
  double intensity = 1e-3;             // epsilon << 1, incoherent
  double mean_photons = 1.0;           // n, incoherent

  std::vector<std::string> validate() const;
};

// Vertex positions (lambda0 units), z = 0, first vertex on the +x axis.
// N = 1 degenerates to a single point at the origin.
std::vector<Eigen::Vector3d> positions(const RingGeometry& geometry);

// Throws InvalidParameter listing every violated invariant.
template <class Spec>
void validate_or_throw(const Spec& spec) {
  auto violations = spec.validate();
  if (!violations.empty()) throw InvalidParameter(std::move(violations));
}

}  // namespace ringabs::model
