#include "ringabs/steady.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ringabs/errors.hpp"

namespace ringabs::steady {

namespace {

constexpr double kConditionLimit = 1e14;

Eigen::VectorXd solve_balance(const Eigen::MatrixXd& a, const Eigen::VectorXd& s,
                              const char* what) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond > 1.0 / kConditionLimit))
    throw SingularSystem(std::string(what) + ": balance matrix condition estimate exceeds 1e14");
  return lu.solve(s);
}

}  // namespace

SteadyState coherent_dicke_local(int n_emitters, double rabi, double gamma_t, double gamma_d) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  if (!(rabi > 0.0)) throw InvalidParameter({"rabi > 0"});
  if (!(gamma_t >= 0.0) || !(gamma_d >= 0.0))
    throw InvalidParameter({"trap_rate >= 0", "local_dephasing >= 0"});
  if (gamma_t == 0.0 && gamma_d > 0.0)
    throw DegenerateSink("coherent_dicke_local: dark populations diverge for "
                         "Gamma_T = 0 with Gamma_D > 0");

  const double n = n_emitters;
  const double ng = n * gamma0;
  const double om2 = rabi * rabi;
  const double gtot_b = ng + gamma_d + gamma_t;

  SteadyState st;
  st.modes = modes::mode_indices(n_emitters);
  st.populations.resize(n_emitters);
  st.pump = Eigen::VectorXd::Zero(n_emitters);
  st.pump[0] = 4.0 * n * om2 / gtot_b;

  double rho_ee, rho_bb;
  if (gamma_t == 0.0 && gamma_d == 0.0) {
    rho_bb = 4.0 * n * om2 / (ng * ng);
    rho_ee = rho_bb;
  } else {
    rho_ee = (4.0 * n * om2 / gtot_b) * (gamma_d + gamma_t) /
             (gamma_t * gtot_b + gamma_d * gamma0);
    rho_bb = rho_ee * (gamma_t + gamma_d / n) / (gamma_t + gamma_d);
  }
  const double rho_dd = (n_emitters > 1 && gamma_t + gamma_d > 0.0)
                            ? rho_ee * (gamma_d / n) / (gamma_t + gamma_d)
                            : 0.0;
  st.populations[0] = rho_bb;
  for (int i = 1; i < n_emitters; ++i) st.populations[i] = rho_dd;
  st.total_excited = rho_ee;
  st.absorbed_fraction = gamma_t * gamma0 * rho_ee / (4.0 * om2);
  // Only the bright mode radiates; sigma_sc follows Eq.(17)'s structure with
  // the collective decay N Gamma0.
  st.scattered_fraction = ng * gamma0 * rho_bb / (4.0 * om2);
  return st;
}

Eigen::MatrixXd balance_matrix(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                               double gamma_t) {
  const int n = spectrum.size();
  if (rates.rates.rows() != n) throw InvalidParameter({"rates size matches spectrum"});
  Eigen::MatrixXd a = -rates.rates.transpose();
  for (int i = 0; i < n; ++i)
    a(i, i) = spectrum.rates[i] + gamma_t + rates.thermal_widths[i];
  return a;
}

SteadyState coherent_thermal(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                             const modes::DriveProjection& drive, double gamma_t, double delta) {
  const int n = spectrum.size();
  if (drive.amplitudes.size() != n) throw InvalidParameter({"drive size matches spectrum"});
  if (!(gamma_t >= 0.0)) throw InvalidParameter({"trap_rate >= 0"});

  const Eigen::MatrixXd a = balance_matrix(spectrum, rates, gamma_t);
  Eigen::VectorXd pump(n);
  for (int m = 0; m < n; ++m) {
    const double gtot = spectrum.rates[m] + gamma_t + rates.thermal_widths[m];
    const double det = spectrum.shifts[m] - delta;
    pump[m] = 4.0 * std::norm(drive.amplitudes[m]) * gtot / (gtot * gtot + 4.0 * det * det);
  }

  SteadyState st;
  st.modes = spectrum.modes;
  st.pump = pump;
  st.populations = solve_balance(a, pump, "coherent_thermal");
  st.total_excited = st.populations.sum();
  const double om2 = drive.reference_rabi * drive.reference_rabi;
  st.absorbed_fraction = gamma_t * gamma0 * st.total_excited / (4.0 * om2);
  return st;
}

SteadyState incoherent_dicke(const modes::ModeSpectrum& spectrum, const bath::RateMatrix& rates,
                             double intensity, double mean_photons, double gamma_t) {
  model::DriveSpec drive;
  drive.kind = model::DriveKind::IncoherentSymmetric;
  drive.intensity = intensity;
  drive.mean_photons = mean_photons;
  model::validate_or_throw(drive);
  if (!(gamma_t >= 0.0)) throw InvalidParameter({"trap_rate >= 0"});

  const int n = spectrum.size();
  const double flux = intensity * spectrum.n_emitters * gamma0 * mean_photons;
  Eigen::VectorXd pump = Eigen::VectorXd::Zero(n);
  pump[spectrum.bright_pos] = flux;  // symmetric-mode pump only

  SteadyState st;
  st.modes = spectrum.modes;
  st.pump = pump;
  st.populations = solve_balance(balance_matrix(spectrum, rates, gamma_t), pump, "incoherent_dicke");
  st.total_excited = st.populations.sum();
  st.absorbed_fraction = gamma_t * st.total_excited / flux;
  return st;
}

SteadyState incoherent_dicke_local(int n_emitters, double intensity, double mean_photons,
                                   double gamma_t, double gamma_d) {
  if (!(gamma_d >= 0.0)) throw InvalidParameter({"local_dephasing >= 0"});
  if (gamma_t == 0.0 && gamma_d > 0.0)
    throw DegenerateSink("incoherent_dicke_local: dark populations diverge for "
                         "Gamma_T = 0 with Gamma_D > 0");
  const auto spectrum = modes::spectrum_dicke(n_emitters, 0.05);  // shifts unused by the pump
  const auto rates = bath::uniform_rate_matrix(spectrum, gamma_d / n_emitters);
  return incoherent_dicke(spectrum, rates, intensity, mean_photons, gamma_t);
}

double site_basis_oracle(const greens::CouplingMatrices& couplings, double gamma_t,
                         double gamma_d, const Eigen::VectorXcd& site_rabi, double delta) {
  const int n = static_cast<int>(site_rabi.size());
  if (n < 1 || n > 12) throw InvalidParameter({"site_basis_oracle: 1 <= N <= 12"});
  if (couplings.dispersive.rows() != n || couplings.dissipative.rows() != n)
    throw InvalidParameter({"couplings size matches drive"});
  if (!(gamma_t >= 0.0) || !(gamma_d >= 0.0))
    throw InvalidParameter({"trap_rate >= 0", "local_dephasing >= 0"});

  using Cx = std::complex<double>;
  const Cx iu(0.0, 1.0);
  const Eigen::MatrixXcd jm = couplings.dispersive.cast<Cx>();
  const Eigen::MatrixXcd gm = couplings.dissipative.cast<Cx>();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  // (i) ground-excited coherences c_j = rho_jg:
  //     [i (J - delta) + Gamma/2 + (Gamma_T + Gamma_D)/2] c = i Omega
  const Eigen::MatrixXcd m =
      iu * (jm - delta * id) + 0.5 * gm + 0.5 * (gamma_t + gamma_d) * id;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_c(m);
  if (!(lu_c.rcond() > 1.0 / kConditionLimit))
    throw SingularSystem("site_basis_oracle: coherence system is singular");
  const Eigen::VectorXcd c = lu_c.solve(iu * site_rabi);

  // (ii) excited block as an N^2 linear system (column-major vec):
  //     [-i (I (x) H - conj(H) (x) I) - (Gamma_T + Gamma_D) I + Gamma_D diag] vec(rho) = -vec(S)
  const Eigen::MatrixXcd h = jm - 0.5 * iu * gm;
  const int nn = n * n;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(nn, nn);
  for (int col = 0; col < n; ++col)
    big.block(col * n, col * n, n, n) -= iu * h;                       // I (x) H
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row)
      big.block(row * n, col * n, n, n).diagonal().array() += iu * std::conj(h(row, col));
  big.diagonal().array() -= gamma_t + gamma_d;
  for (int j = 0; j < n; ++j) big(j * n + j, j * n + j) += gamma_d;

  const Eigen::MatrixXcd src =
      iu * (site_rabi * c.adjoint() - c * site_rabi.adjoint());
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_e(big);
  if (!(lu_e.rcond() > 1.0 / kConditionLimit))
    throw SingularSystem("site_basis_oracle: excited-block system is singular");
  const Eigen::VectorXcd rho = lu_e.solve(-Eigen::Map<const Eigen::VectorXcd>(src.data(), nn));

  double trace = 0.0;
  for (int j = 0; j < n; ++j) trace += rho[j * n + j].real();
  return trace;
}

}  // namespace ringabs::steady
