#include "ringabs/model.hpp"

#include <cmath>

namespace ringabs::model {

std::vector<std::string> RingGeometry::validate() const {
  std::vector<std::string> v;
  if (n_emitters < 1) v.push_back("n_emitters >= 1");
  if (!(spacing > 0.0)) v.push_back("spacing > 0");
  return v;
}

std::vector<std::string> BathSpec::validate() const {
  std::vector<std::string> v;
  if (!(fbar >= 0.0)) v.push_back("fbar >= 0");
  if (model == BathModel::DrudeLorentz) {
    if (!(omega_c > 0.0)) v.push_back("omega_c > 0");
    if (!(f >= 0.0)) v.push_back("f >= 0");
  }
  if (!(inv_temperature >= 0.0)) v.push_back("inv_temperature >= 0");
  return v;
}

std::vector<std::string> DecoherenceSpec::validate() const {
  std::vector<std::string> v;
  if (!(trap_rate >= 0.0)) v.push_back("trap_rate >= 0");
  if (!(local_dephasing >= 0.0)) v.push_back("local_dephasing >= 0");
  if (local_dephasing > 0.0 && bath.has_value()) v.push_back("exclusive decoherence models");
  if (bath.has_value()) {
    for (auto& s : bath->validate()) v.push_back("bath: " + s);
  }
  return v;
}

std::vector<std::string> DriveSpec::validate() const {
  std::vector<std::string> v;
  if (kind == DriveKind::CoherentPlaneWave) {
    if (!(rabi > 0.0)) v.push_back("rabi > 0");
  } else {
    if (!(intensity > 0.0)) v.push_back("intensity > 0");
    if (intensity > 1e-2) v.push_back("intensity <= 1e-2 (weak-drive regime)");
    if (!(mean_photons > 0.0)) v.push_back("mean_photons > 0");
  }
  return v;
}

std::vector<Eigen::Vector3d> positions(const RingGeometry& geometry) {
  validate_or_throw(geometry);
  const int n = geometry.n_emitters;
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(n);
  if (n == 1) {
    pts.emplace_back(0.0, 0.0, 0.0);
    return pts;
  }
  const double r = geometry.radius();
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / n;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), 0.0);
  }
  return pts;
}

}  // namespace ringabs::model
