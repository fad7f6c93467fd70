#include "ringabs/greens.hpp"

#include <cmath>

#include "ringabs/errors.hpp"

namespace ringabs::greens {

std::complex<double> green_zz(double separation) {
  if (!(separation > 0.0)) throw DomainError("green_zz: separation must be > 0");
  if (separation < 1e-6 * lambda0)
    throw DomainError("green_zz: separation below 1e-6 lambda0 rejected");
  const double x = k0 * separation;
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  // e^{ix} (1 - ix - x^2) = (c + i s)(1 - x^2 - i x), expanded real/imaginary.
  const double re = c * (1.0 - x2) + s * x;
  const double im = s * (1.0 - x2) - c * x;
  const double pref = 0.75 * gamma0 / x3;
  return {pref * re, pref * im};
}

CouplingMatrices coupling_matrices(const model::RingGeometry& geometry) {
  const auto pts = model::positions(geometry);
  const int n = geometry.n_emitters;
  CouplingMatrices cm;
  cm.dispersive = Eigen::MatrixXd::Zero(n, n);
  cm.dissipative = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    cm.dissipative(i, i) = gamma0;
    for (int j = i + 1; j < n; ++j) {
      const auto g = green_zz((pts[i] - pts[j]).norm());
      cm.dispersive(i, j) = cm.dispersive(j, i) = g.real();
      cm.dissipative(i, j) = cm.dissipative(j, i) = -2.0 * g.imag();
    }
  }
  return cm;
}

CouplingMatrices dicke_couplings(int n_emitters, double j_nn) {
  CouplingMatrices cm;
  cm.dispersive = Eigen::MatrixXd::Zero(n_emitters, n_emitters);
  cm.dissipative = Eigen::MatrixXd::Constant(n_emitters, n_emitters, gamma0);
  if (n_emitters > 1) {
    for (int j = 0; j < n_emitters; ++j) {
      const int next = (j + 1) % n_emitters;
      cm.dispersive(j, next) = j_nn;
      cm.dispersive(next, j) = j_nn;
    }
  }
  return cm;
}

double circulant_deviation(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  double dev = 0.0;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int l = (j - i + n) % n;  // (i,j) should equal first-row entry (0, (j-i) mod N)
      dev = std::max(dev, std::abs(m(i, j) - m(0, l)));
    }
  return dev;
}

}  // namespace ringabs::greens
