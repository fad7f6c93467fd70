// greens.hpp — Free-space Green's tensor (zz component) and the pairwise
// dispersive/dissipative coupling matrices it generates on a ring.

#pragma once

#include <Eigen/Core>
#include <complex>

#include "ringabs/model.hpp"

namespace ringabs::greens {

// Pairwise couplings in Gamma0 units.
//   dispersive  J_ij : symmetric, zero diagonal
//   dissipative G_ij : symmetric, diagonal exactly Gamma0, positive semidefinite
// Both are circulant for ring geometries (entries depend on (i-j) mod N).
struct CouplingMatrices {
  Eigen::MatrixXd dispersive;
  Eigen::MatrixXd dissipative;
};

// zz component of the free-space Green's tensor for in-plane separation r > 0:
//   G^zz(r) = (3 Gamma0 / 4) e^{i k0 r} (1 - i k0 r - (k0 r)^2) / (k0 r)^3
// J-coupling = Re, Gamma-coupling = -2 Im. Separations below 1e-6 lambda0 are
// rejected (catastrophic cancellation in 1 - i k0 r - (k0 r)^2); the Dicke
// limit is served by the dedicated idealized spectrum instead.
std::complex<double> green_zz(double separation);

CouplingMatrices coupling_matrices(const model::RingGeometry& geometry);

// Idealized Dicke-limit couplings: G_ij = Gamma0 for every pair and a
// nearest-neighbour dispersive hop j_nn. Used by benchmarks and the
// site-basis oracle, where the analytic formulas assume perfect darkness.
CouplingMatrices dicke_couplings(int n_emitters, double j_nn);

// Max deviation of any row from the cyclic shift of the first row, in Gamma0.
double circulant_deviation(const Eigen::MatrixXd& m);

}  // namespace ringabs::greens
