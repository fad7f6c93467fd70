#include "ringabs/modes.hpp"

#include <cmath>
#include <complex>

#include "ringabs/errors.hpp"

namespace ringabs::modes {

namespace {

constexpr double kCirculantTol = 1e-12;
constexpr double kImagResidueTol = 1e-10;

int position_of(const std::vector<int>& modes, int m) {
  for (int i = 0; i < static_cast<int>(modes.size()); ++i)
    if (modes[i] == m) return i;
  return -1;
}

int argmax_rate(const Eigen::VectorXd& rates) {
  int best = 0;
  for (int i = 1; i < rates.size(); ++i)
    if (rates[i] > rates[best]) best = i;  // strict: canonical order breaks ties
  return best;
}

}  // namespace

std::vector<int> mode_indices(int n_emitters) {
  std::vector<int> ms;
  ms.reserve(n_emitters);
  ms.push_back(0);
  for (int k = 1; k <= (n_emitters - 1) / 2; ++k) {
    ms.push_back(k);
    ms.push_back(-k);
  }
  if (n_emitters % 2 == 0 && n_emitters > 1) ms.push_back(n_emitters / 2);
  return ms;
}

double dispersion_scale(double spacing) {
  const double kd = k0 * spacing;
  return 3.0 * gamma0 / (2.0 * kd * kd * kd);
}

ModeSpectrum spectrum_finite(const model::RingGeometry& geometry,
                             const greens::CouplingMatrices& couplings) {
  model::validate_or_throw(geometry);
  const int n = geometry.n_emitters;
  if (couplings.dispersive.rows() != n || couplings.dissipative.rows() != n)
    throw InvalidParameter({"couplings size matches n_emitters"});
  if (greens::circulant_deviation(couplings.dispersive) > kCirculantTol * gamma0 ||
      greens::circulant_deviation(couplings.dissipative) > kCirculantTol * gamma0)
    throw NonCirculantInput("spectrum_finite: coupling matrices are not circulant");

  ModeSpectrum sp;
  sp.modes = mode_indices(n);
  sp.shifts.resize(n);
  sp.rates.resize(n);
  sp.regime = SpectrumRegime::FiniteSize;
  sp.n_emitters = n;

  // Transform the first circulant row; evaluate at |m| and copy onto -m so the
  // m <-> -m degeneracy is exact.
  for (int i = 0; i < n; ++i) {
    const int m = sp.modes[i];
    if (m < 0) {
      const int pos = position_of(sp.modes, -m);
      sp.shifts[i] = sp.shifts[pos];
      sp.rates[i] = sp.rates[pos];
      continue;
    }
    double jr = 0.0, ji = 0.0, gr = 0.0, gi = 0.0;
    for (int l = 0; l < n; ++l) {
      const double phase = 2.0 * std::numbers::pi * m * l / n;
      const double c = std::cos(phase), s = std::sin(phase);
      jr += c * couplings.dispersive(0, l);
      ji += s * couplings.dispersive(0, l);
      gr += c * couplings.dissipative(0, l);
      gi += s * couplings.dissipative(0, l);
    }
    const double scale = n * gamma0;
    if (std::abs(ji) > kImagResidueTol * scale || std::abs(gi) > kImagResidueTol * scale)
      throw NonCirculantInput("spectrum_finite: Fourier transform has imaginary residue");
    sp.shifts[i] = jr;
    sp.rates[i] = gr;
  }
  sp.bright_pos = argmax_rate(sp.rates);
  return sp;
}

ModeSpectrum spectrum_dicke(int n_emitters, double spacing) {
  model::validate_or_throw(model::RingGeometry{n_emitters, spacing});
  const double j = dispersion_scale(spacing);

  ModeSpectrum sp;
  sp.modes = mode_indices(n_emitters);
  sp.shifts.resize(n_emitters);
  sp.rates.resize(n_emitters);
  sp.regime = SpectrumRegime::DickeIdeal;
  sp.n_emitters = n_emitters;
  for (int i = 0; i < n_emitters; ++i) {
    const int m = std::abs(sp.modes[i]);
    sp.shifts[i] = j * std::cos(2.0 * std::numbers::pi * m / n_emitters);
    sp.rates[i] = (m == 0) ? n_emitters * gamma0 : 0.0;
  }
  sp.bright_pos = 0;
  return sp;
}

int bright_mode(const ModeSpectrum& spectrum) {
  if (spectrum.modes.empty()) throw InvalidParameter({"nonempty spectrum"});
  return spectrum.modes[argmax_rate(spectrum.rates)];
}

DriveProjection project_drive(const model::RingGeometry& geometry, double rabi) {
  if (!(rabi > 0.0)) throw InvalidParameter({"rabi > 0"});
  const auto pts = model::positions(geometry);
  const int n = geometry.n_emitters;

  DriveProjection dp;
  dp.modes = mode_indices(n);
  dp.amplitudes.resize(n);
  dp.reference_rabi = rabi;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    const int m = dp.modes[i];
    std::complex<double> sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double mode_phase = -2.0 * std::numbers::pi * m * j / n;
      const double drive_phase = k0 * pts[j].x();
      sum += std::polar(rabi, mode_phase + drive_phase);
    }
    dp.amplitudes[i] = norm * sum;
  }
  return dp;
}

DriveProjection dicke_drive(int n_emitters, double rabi) {
  if (!(rabi > 0.0)) throw InvalidParameter({"rabi > 0"});
  DriveProjection dp;
  dp.modes = mode_indices(n_emitters);
  dp.amplitudes = Eigen::VectorXcd::Zero(n_emitters);
  dp.amplitudes[0] = std::sqrt(static_cast<double>(n_emitters)) * rabi;
  dp.reference_rabi = rabi;
  return dp;
}

}  // namespace ringabs::modes
