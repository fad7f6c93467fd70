// units.hpp — Global unit conventions shared by every module.
//
// All rates are expressed in units of the single-emitter spontaneous emission
// rate Gamma0, all lengths in units of the transition wavelength lambda0.

#pragma once

#include <numbers>

namespace ringabs {

inline constexpr double gamma0 = 1.0;                      // spontaneous emission rate of one emitter
inline constexpr double lambda0 = 1.0;                     // transition wavelength
inline constexpr double k0 = 2.0 * std::numbers::pi;       // wave number, 2*pi/lambda0

// Per-photon absorption probability sigma_abs/sigma is bounded by 1/4 for
// coherent drive (p(1-p) argument); incoherent branching fractions by 1.
inline constexpr double coherent_absorption_bound = 0.25;

inline constexpr const char* version_string = "ringabs 1.0.0";

}  // namespace ringabs
