// runner.hpp — Parameter sweeps, two-parameter maximization and the
// figure-reproduction drivers that produce tabular outputs.

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringabs/closedform.hpp"
#include "ringabs/steady.hpp"

namespace ringabs::runner {

enum class SweepModel { SingleAtom, DickeLocal, DickeThermal, FiniteThermal, IncoherentDicke };
enum class ValueKind { SigmaAbs, RatioIndependent };
enum class AxisQuantity { GammaT, GammaD, GammaBth, BetaJ, BetaGamma0, NEmitters, Spacing };
enum class AxisScale { Log, Linear };

struct Axis {
  AxisQuantity quantity = AxisQuantity::GammaT;
  AxisScale scale = AxisScale::Log;
  double min = 1e-3;
  double max = 1e2;
  int count = 101;

  std::vector<double> grid() const;
};

// Model selector plus every physical parameter a cell can depend on. Axis
// quantities override the corresponding scalar per cell. All rates in Gamma0.
struct SweepConfig {
  SweepModel model = SweepModel::DickeLocal;
  ValueKind value = ValueKind::SigmaAbs;
  int n_emitters = 10;
  double spacing = 0.05;                       // lambda0
  double beta = std::numeric_limits<double>::infinity();  // 1/Gamma0; +inf = zero temperature
  std::optional<double> beta_J;                // if set, beta = beta_J / J(spacing)
  std::optional<double> fbar;                  // bath coupling; otherwise inverted from gamma_bth
  double gamma_t = 1.0;
  double gamma_d = 0.0;
  double gamma_bth = 0.0;                      // bright-mode thermal width target
  double intensity = 1e-3;                     // incoherent epsilon
  double mean_photons = 1.0;                   // incoherent n
  std::optional<double> detuning;              // empty: resonant with the brightest mode
  bool thermal_incoherent = false;             // IncoherentDicke: bath instead of local dephasing
  bool experimental_finite_incoherent = false; // gate per design decision
  double rabi = 1e-3;                          // weak coherent drive (results independent of it)
  Axis axis1;
  Axis axis2;
};

struct SweepColumn {
  std::string name;
  std::vector<double> values;
};

// Axes carry the output-facing (possibly caption-normalized) values; the
// metadata records the normalization so CSVs are self-describing.
struct SweepTable {
  std::string name;
  std::vector<std::pair<std::string, std::string>> metadata;
  SweepColumn axis1;
  SweepColumn axis2;
  std::vector<SweepColumn> axis2_companions;  // emitted instead of axis2 when nonempty
  std::string value_name = "sigma_abs_over_sigma";
  Eigen::MatrixXd values;                     // axis1.size x axis2.size
  std::vector<std::uint8_t> divergent;        // row-major flags, same shape

  bool is_divergent(int i, int j) const {
    return divergent[static_cast<std::size_t>(i) * axis2.values.size() + j] != 0;
  }
  int rows() const { return static_cast<int>(axis1.values.size()); }
  int cols() const { return static_cast<int>(axis2.values.size()); }
};

// Evaluates one cell of a fully resolved config (no axis substitution).
// Throws the underlying solver errors; sweep2d converts them to flags.
double evaluate_cell(const SweepConfig& config);

// Grid sweep over axis1 (outer) and axis2 (inner). Cells failing with a
// numeric error are flagged divergent. Deterministic; cells evaluate
// concurrently, capped by the RINGABS_THREADS environment variable.
SweepTable sweep2d(const SweepConfig& config);

// Log-space coarse scan plus compass pattern search (shrink 0.5, terminate at
// 1e-4 relative in value) over (Gamma_T, dephasing knob) within bounds.
// Deterministic given the config. Flags boundary optima and exchange-degenerate
// ridges (Gamma_T <-> Gamma_B^th at fixed sum in the zero-temperature limit).
struct MaximizeBounds {
  double gamma_t_min = 1e-3, gamma_t_max = 1e3;
  double gamma_x_min = 1e-6, gamma_x_max = 1e3;
};
closedform::OptimumReport maximize_sigma(const SweepConfig& config, const MaximizeBounds& bounds);

// Built-in figure parameter sets (caption-transcribed defaults). A figure can
// produce several tables (panel qualifiers become name suffixes).
std::vector<std::string> figure_names();
std::vector<SweepTable> figure(const std::string& name);

}  // namespace ringabs::runner
