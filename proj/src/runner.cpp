#include "ringabs/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "ringabs/errors.hpp"

namespace ringabs::runner {

namespace {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("RINGABS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

// Deterministic static chunking: worker w handles indices i with i % W == w.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::min(worker_count(), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* model_name(SweepModel m) {
  switch (m) {
    case SweepModel::SingleAtom: return "single-atom";
    case SweepModel::DickeLocal: return "dicke-local";
    case SweepModel::DickeThermal: return "dicke-thermal";
    case SweepModel::FiniteThermal: return "finite-thermal";
    case SweepModel::IncoherentDicke: return "incoherent-dicke";
  }
  return "?";
}

const char* quantity_name(AxisQuantity q) {
  switch (q) {
    case AxisQuantity::GammaT: return "gamma_t";
    case AxisQuantity::GammaD: return "gamma_d";
    case AxisQuantity::GammaBth: return "gamma_bth";
    case AxisQuantity::BetaJ: return "beta_j";
    case AxisQuantity::BetaGamma0: return "beta";
    case AxisQuantity::NEmitters: return "n_emitters";
    case AxisQuantity::Spacing: return "d";
  }
  return "?";
}

void substitute(SweepConfig& c, AxisQuantity q, double v) {
  switch (q) {
    case AxisQuantity::GammaT: c.gamma_t = v; break;
    case AxisQuantity::GammaD: c.gamma_d = v; break;
    case AxisQuantity::GammaBth: c.gamma_bth = v; c.fbar.reset(); break;
    case AxisQuantity::BetaJ: c.beta_J = v; break;
    case AxisQuantity::BetaGamma0: c.beta = v; c.beta_J.reset(); break;
    case AxisQuantity::NEmitters: c.n_emitters = static_cast<int>(std::lround(v)); break;
    case AxisQuantity::Spacing: c.spacing = v; break;
  }
}

double resolved_beta(const SweepConfig& c) {
  if (c.beta_J) return *c.beta_J / modes::dispersion_scale(c.spacing);
  return c.beta;
}

// Spectrum, drive and unit-coupling rate matrix for one (model, N, d, beta);
// the bath coupling enters linearly and is applied per cell.
struct ThermalBase {
  modes::ModeSpectrum spectrum;
  modes::DriveProjection drive;
  Eigen::MatrixXd unit_rates;      // Ohmic rates at fbar = 1
  Eigen::VectorXd unit_widths;
  double unit_bright_width = 0.0;
  double delta = 0.0;
};

ThermalBase make_thermal_base(const SweepConfig& c) {
  ThermalBase base;
  if (c.model == SweepModel::FiniteThermal) {
    const model::RingGeometry geom{c.n_emitters, c.spacing};
    base.spectrum = modes::spectrum_finite(geom, greens::coupling_matrices(geom));
    base.drive = modes::project_drive(geom, c.rabi);
  } else {
    base.spectrum = modes::spectrum_dicke(c.n_emitters, c.spacing);
    base.drive = modes::dicke_drive(c.n_emitters, c.rabi);
  }
  const auto unit = bath::rate_matrix(base.spectrum, model::BathSpec::ohmic(1.0, resolved_beta(c)));
  base.unit_rates = unit.rates;
  base.unit_widths = unit.thermal_widths;
  base.unit_bright_width = unit.bright_width;
  base.delta = c.detuning ? *c.detuning : base.spectrum.shifts[base.spectrum.bright_pos];
  return base;
}

bath::RateMatrix scaled_rates(const ThermalBase& base, double fbar) {
  bath::RateMatrix rm;
  rm.modes = base.spectrum.modes;
  rm.rates = fbar * base.unit_rates;
  rm.thermal_widths = fbar * base.unit_widths;
  rm.bright_pos = base.spectrum.bright_pos;
  rm.bright_width = fbar * base.unit_bright_width;
  return rm;
}

// fbar from the bright-width target when not given directly.
double resolve_fbar(const SweepConfig& c, const ThermalBase& base) {
  if (c.fbar) return *c.fbar;
  if (c.gamma_bth == 0.0) return 0.0;
  if (!(base.unit_bright_width > 0.0))
    throw SingularSystem("cannot realize a nonzero Gamma_B^th: unit bright width is zero");
  return c.gamma_bth / base.unit_bright_width;
}

double eval_with_base(const SweepConfig& c, const ThermalBase& base) {
  const auto rates = scaled_rates(base, resolve_fbar(c, base));
  if (c.model == SweepModel::IncoherentDicke) {
    const auto st = steady::incoherent_dicke(base.spectrum, rates, c.intensity, c.mean_photons,
                                             c.gamma_t);
    return st.absorbed_fraction;
  }
  const auto st = steady::coherent_thermal(base.spectrum, rates, base.drive, c.gamma_t, base.delta);
  if (c.value == ValueKind::RatioIndependent) {
    const double matched = rates.bright_width;  // independent emitters get Gamma_D = Gamma_B^th
    const double one = closedform::single_atom(gamma0, c.gamma_t, matched).absorbed_fraction;
    return st.absorbed_fraction / (c.n_emitters * one);
  }
  return st.absorbed_fraction;
}

}  // namespace

std::vector<double> Axis::grid() const {
  if (count < 1) throw InvalidParameter({"axis count >= 1"});
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = min;
    return g;
  }
  if (scale == AxisScale::Log) {
    if (!(min > 0.0) || !(max > 0.0)) throw InvalidParameter({"log axis bounds > 0"});
    const double l0 = std::log10(min), l1 = std::log10(max);
    for (int i = 0; i < count; ++i) g[i] = std::pow(10.0, l0 + (l1 - l0) * i / (count - 1));
  } else {
    for (int i = 0; i < count; ++i) g[i] = min + (max - min) * i / (count - 1);
  }
  return g;
}

double evaluate_cell(const SweepConfig& config) {
  switch (config.model) {
    case SweepModel::SingleAtom:
      return closedform::single_atom(gamma0, config.gamma_t, config.gamma_d).absorbed_fraction;
    case SweepModel::DickeLocal:
      if (config.value == ValueKind::RatioIndependent)
        return closedform::independent_ratio(config.n_emitters, config.gamma_t, config.gamma_d,
                                             closedform::DephasingModel::Local);
      return closedform::local_dephasing_sigma(config.n_emitters, config.gamma_t, config.gamma_d);
    case SweepModel::IncoherentDicke:
      if (!config.thermal_incoherent) {
        const auto st = steady::incoherent_dicke_local(config.n_emitters, config.intensity,
                                                       config.mean_photons, config.gamma_t,
                                                       config.gamma_d);
        return st.absorbed_fraction;
      }
      [[fallthrough]];
    case SweepModel::DickeThermal:
    case SweepModel::FiniteThermal: {
      const auto base = make_thermal_base(config);
      return eval_with_base(config, base);
    }
  }
  throw InvalidParameter({"unknown sweep model"});
}

namespace {

bool base_reusable(const SweepConfig& c) {
  if (c.model == SweepModel::SingleAtom || c.model == SweepModel::DickeLocal) return false;
  if (c.model == SweepModel::IncoherentDicke && !c.thermal_incoherent) return false;
  const auto touches_base = [](AxisQuantity q) {
    return q == AxisQuantity::NEmitters || q == AxisQuantity::Spacing ||
           q == AxisQuantity::BetaJ || q == AxisQuantity::BetaGamma0;
  };
  return !touches_base(c.axis1.quantity) && !touches_base(c.axis2.quantity);
}

std::vector<std::pair<std::string, std::string>> config_metadata(const SweepConfig& c) {
  std::vector<std::pair<std::string, std::string>> md;
  md.emplace_back("model", model_name(c.model));
  md.emplace_back("value", c.value == ValueKind::SigmaAbs ? "sigma_abs_over_sigma"
                                                          : "ratio_to_independent");
  md.emplace_back("n_emitters", std::to_string(c.n_emitters));
  md.emplace_back("d_over_lambda0", fmt(c.spacing));
  if (c.beta_J)
    md.emplace_back("beta_J", fmt(*c.beta_J));
  else
    md.emplace_back("beta_gamma0", fmt(c.beta));
  if (c.fbar) md.emplace_back("fbar", fmt(*c.fbar));
  md.emplace_back("delta_policy", c.detuning ? fmt(*c.detuning) : "resonant-with-brightest");
  md.emplace_back("version", version_string);
  return md;
}

}  // namespace

SweepTable sweep2d(const SweepConfig& config) {
  const auto g1 = config.axis1.grid();
  const auto g2 = config.axis2.grid();
  const int n1 = static_cast<int>(g1.size());
  const int n2 = static_cast<int>(g2.size());

  SweepTable table;
  table.name = "sweep";
  table.metadata = config_metadata(config);
  table.metadata.emplace_back("axis1", quantity_name(config.axis1.quantity));
  table.metadata.emplace_back("axis2", quantity_name(config.axis2.quantity));
  table.axis1 = {quantity_name(config.axis1.quantity), g1};
  table.axis2 = {quantity_name(config.axis2.quantity), g2};
  table.value_name = config.value == ValueKind::SigmaAbs ? "sigma_abs_over_sigma"
                                                         : "ratio_to_independent";
  table.values.setZero(n1, n2);
  table.divergent.assign(static_cast<std::size_t>(n1) * n2, 0);

  std::optional<ThermalBase> base;
  if (base_reusable(config)) base = make_thermal_base(config);

  parallel_for(n1, [&](int i) {
    for (int j = 0; j < n2; ++j) {
      SweepConfig cell = config;
      substitute(cell, config.axis1.quantity, g1[i]);
      substitute(cell, config.axis2.quantity, g2[j]);
      try {
        table.values(i, j) = base ? eval_with_base(cell, *base) : evaluate_cell(cell);
      } catch (const NumericError&) {
        table.values(i, j) = std::numeric_limits<double>::quiet_NaN();
        table.divergent[static_cast<std::size_t>(i) * n2 + j] = 1;
      }
    }
  });
  return table;
}

closedform::OptimumReport maximize_sigma(const SweepConfig& config, const MaximizeBounds& bounds) {
  std::optional<ThermalBase> base;
  if (config.model == SweepModel::DickeThermal || config.model == SweepModel::FiniteThermal)
    base = make_thermal_base(config);

  const bool thermal_knob = base.has_value();
  const auto objective = [&](double log_gt, double log_gx) -> double {
    SweepConfig c = config;
    c.gamma_t = std::pow(10.0, log_gt);
    const double gx = std::pow(10.0, log_gx);
    if (thermal_knob) {
      c.gamma_bth = gx;
      c.fbar.reset();
    } else {
      c.gamma_d = gx;
    }
    try {
      return base ? eval_with_base(c, *base) : evaluate_cell(c);
    } catch (const NumericError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  const double t0 = std::log10(bounds.gamma_t_min), t1 = std::log10(bounds.gamma_t_max);
  const double x0 = std::log10(bounds.gamma_x_min), x1 = std::log10(bounds.gamma_x_max);

  constexpr int kCoarse = 21;
  double best_t = t0, best_x = x0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCoarse; ++i)
    for (int j = 0; j < kCoarse; ++j) {
      const double lt = t0 + (t1 - t0) * i / (kCoarse - 1);
      const double lx = x0 + (x1 - x0) * j / (kCoarse - 1);
      const double v = objective(lt, lx);
      if (v > best) {
        best = v;
        best_t = lt;
        best_x = lx;
      }
    }

  double step = std::max(t1 - t0, x1 - x0) / (kCoarse - 1);
  double last_shrink_value = best;
  while (true) {
    bool moved = false;
    const double cand[4][2] = {{best_t + step, best_x}, {best_t - step, best_x},
                               {best_t, best_x + step}, {best_t, best_x - step}};
    for (const auto& c : cand) {
      const double lt = std::clamp(c[0], t0, t1);
      const double lx = std::clamp(c[1], x0, x1);
      const double v = objective(lt, lx);
      if (v > best) {
        best = v;
        best_t = lt;
        best_x = lx;
        moved = true;
      }
    }
    if (!moved) {
      const double improvement = (best - last_shrink_value) / std::max(best, 1e-300);
      if (improvement < 1e-4 && step < 1e-3) break;
      last_shrink_value = best;
      step *= 0.5;
      if (step < 1e-9) break;
    }
  }

  closedform::OptimumReport rep;
  rep.method = closedform::OptimumMethod::GridRefine;
  rep.arg_gamma_t = std::pow(10.0, best_t);
  rep.arg_gamma_x = std::pow(10.0, best_x);
  rep.value = best;
  const double edge = 2.0 * std::max(step, 1e-9);
  rep.boundary = best_t - t0 < edge || t1 - best_t < edge || best_x - x0 < edge ||
                 x1 - best_x < edge;
  // Exchange probe: flat ridge along Gamma_T + Gamma_X = const (zero-T closed form).
  if (std::abs(best_t - best_x) > 1e-6) {
    const double swapped = objective(std::clamp(best_x, t0, t1), std::clamp(best_t, x0, x1));
    if (std::isfinite(swapped) && std::abs(swapped - best) <= 1e-9 * std::abs(best))
      rep.degenerate = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Figure drivers. Parameter sets are transcribed from the captions; grid
// ranges that are only visible on the plots default to the documented decades
// below and are overridable through the generic sweep subcommand.
// ---------------------------------------------------------------------------

namespace {

constexpr double kDickeSpacing = 0.05;  // deep-subwavelength default for Dicke-limit panels

SweepColumn normalized(const char* name, const std::vector<double>& raw, double norm) {
  SweepColumn col{name, raw};
  for (auto& v : col.values) v /= norm;
  return col;
}

SweepTable dicke_panel(const std::string& name, SweepModel model, int n, ValueKind value,
                       std::optional<double> beta_j, bool thermal_axis,
                       bool thermal_incoherent = false,
                       std::optional<double> beta_gamma0 = std::nullopt) {
  SweepConfig cfg;
  cfg.model = model;
  cfg.value = value;
  cfg.n_emitters = n;
  cfg.spacing = kDickeSpacing;
  cfg.beta_J = beta_j;
  if (beta_gamma0) cfg.beta = *beta_gamma0;
  cfg.thermal_incoherent = thermal_incoherent;
  const double norm = n * gamma0;
  cfg.axis1 = {AxisQuantity::GammaT, AxisScale::Log, 1e-3 * norm, 1e2 * norm, 101};
  cfg.axis2 = {thermal_axis ? AxisQuantity::GammaBth : AxisQuantity::GammaD, AxisScale::Log,
               1e-3 * norm, 1e2 * norm, 101};
  SweepTable t = sweep2d(cfg);
  t.name = name;
  t.axis1 = normalized("gamma_t_over_n_gamma0", t.axis1.values, norm);
  t.axis2 = normalized(thermal_axis ? "gamma_bth_over_n_gamma0" : "gamma_d_over_n_gamma0",
                       t.axis2.values, norm);
  t.metadata.emplace_back("axis_normalization", "N*Gamma0 = " + fmt(norm));
  return t;
}

SweepTable optimal_dephasing_overlay(const std::string& name, int n) {
  const double norm = n * gamma0;
  Axis gt_axis{AxisQuantity::GammaT, AxisScale::Log, 1e-3 * norm, 1e2 * norm, 101};
  const auto grid = gt_axis.grid();
  SweepTable t;
  t.name = name;
  t.metadata.emplace_back("model", "dicke-local optimal dephasing (dashed overlay)");
  t.metadata.emplace_back("n_emitters", std::to_string(n));
  t.metadata.emplace_back("version", version_string);
  t.axis1 = normalized("gamma_t_over_n_gamma0", grid, norm);
  t.axis2 = {"column", {0.0}};
  t.value_name = "gamma_d_max_over_n_gamma0";
  t.values.resize(static_cast<int>(grid.size()), 1);
  t.divergent.assign(grid.size(), 0);
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.values(static_cast<int>(i), 0) =
        closedform::optimal_local_dephasing(n, grid[i]).arg_gamma_x / norm;
  return t;
}

SweepTable fig3_table() {
  // Caption values; the body text swaps them, see README.
  const double gt_norm = 0.6, gbth_norm = 0.05;
  std::vector<double> ns;
  for (int n = 2; n <= 100; n += 2) ns.push_back(n);
  Axis beta_axis{AxisQuantity::BetaJ, AxisScale::Log, 1e-2, 1e2, 101};
  const auto betas = beta_axis.grid();

  SweepTable t;
  t.name = "fig3";
  t.metadata.emplace_back("model", "dicke-thermal");
  t.metadata.emplace_back("gamma_t_over_n_gamma0", fmt(gt_norm));
  t.metadata.emplace_back("gamma_bth_over_n_gamma0", fmt(gbth_norm));
  t.metadata.emplace_back("version", version_string);
  t.axis1 = {"n_emitters", ns};
  t.axis2 = {"beta_J", betas};
  t.values.setZero(static_cast<int>(ns.size()), static_cast<int>(betas.size()));
  t.divergent.assign(ns.size() * betas.size(), 0);
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const int n = static_cast<int>(ns[i]);
    for (std::size_t j = 0; j < betas.size(); ++j) {
      SweepConfig c;
      c.model = SweepModel::DickeThermal;
      c.n_emitters = n;
      c.spacing = kDickeSpacing;
      c.beta_J = betas[j];
      c.gamma_t = gt_norm * n * gamma0;
      c.gamma_bth = gbth_norm * n * gamma0;
      t.values(i, static_cast<int>(j)) = evaluate_cell(c);
    }
  });
  return t;
}

std::vector<SweepTable> fig5_tables() {
  const double spacing = 0.001;  // documented choice; saturation by N ~ 100 at betaJ = 3
  const double gamma_t = 1e-4, fbar = 1e-7;

  std::vector<double> ns;
  for (double x = std::log10(2.0); x <= std::log10(300.0) + 1e-9; x += 0.08) {
    const int n = static_cast<int>(std::lround(std::pow(10.0, x)));
    if (ns.empty() || n > ns.back()) ns.push_back(n);
  }
  if (ns.back() != 300) ns.push_back(300);

  SweepTable main;
  main.name = "fig5";
  main.metadata.emplace_back("model", "dicke-thermal ratio");
  main.metadata.emplace_back("beta_J", fmt(3.0));
  main.metadata.emplace_back("gamma_t", fmt(gamma_t));
  main.metadata.emplace_back("fbar", fmt(fbar));
  main.metadata.emplace_back("d_over_lambda0", fmt(spacing));
  main.metadata.emplace_back("version", version_string);
  main.axis1 = {"n_emitters", ns};
  main.axis2 = {"column", {0.0}};
  main.value_name = "ratio_to_independent";
  main.values.resize(static_cast<int>(ns.size()), 1);
  main.divergent.assign(ns.size(), 0);
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    SweepConfig c;
    c.model = SweepModel::DickeThermal;
    c.value = ValueKind::RatioIndependent;
    c.n_emitters = static_cast<int>(ns[i]);
    c.spacing = spacing;
    c.beta_J = 3.0;
    c.fbar = fbar;
    c.gamma_t = gamma_t;
    main.values(i, 0) = evaluate_cell(c);
  });

  Axis beta_axis{AxisQuantity::BetaJ, AxisScale::Log, 1e-1, 1e2, 25};
  const auto betas = beta_axis.grid();
  SweepTable inset;
  inset.name = "fig5_inset";
  inset.metadata.emplace_back("model", "dicke-thermal ratio, saturation at N = 300");
  inset.metadata.emplace_back("gamma_t", fmt(gamma_t));
  inset.metadata.emplace_back("fbar", fmt(fbar));
  inset.metadata.emplace_back("d_over_lambda0", fmt(spacing));
  inset.metadata.emplace_back(
      "zero_T_asymptote",
      fmt(closedform::zero_T_ratio_limit(gamma_t, fbar * modes::dispersion_scale(spacing))));
  inset.metadata.emplace_back("version", version_string);
  inset.axis1 = {"beta_J", betas};
  inset.axis2 = {"column", {0.0}};
  inset.value_name = "ratio_to_independent";
  inset.values.resize(static_cast<int>(betas.size()), 1);
  inset.divergent.assign(betas.size(), 0);
  parallel_for(static_cast<int>(betas.size()), [&](int i) {
    SweepConfig c;
    c.model = SweepModel::DickeThermal;
    c.value = ValueKind::RatioIndependent;
    c.n_emitters = 300;
    c.spacing = spacing;
    c.beta_J = betas[i];
    c.fbar = fbar;
    c.gamma_t = gamma_t;
    inset.values(i, 0) = evaluate_cell(c);
  });
  return {main, inset};
}

std::vector<SweepTable> fig6_tables() {
  std::vector<SweepTable> tables;
  for (const double beta : {0.01, 10.0})
    for (const double d : {0.1, 0.2, 0.35}) {
      const model::RingGeometry geom{10, d};
      const auto spectrum = modes::spectrum_finite(geom, greens::coupling_matrices(geom));
      const double norm = spectrum.rates[spectrum.bright_pos];  // Gamma~_B

      SweepConfig cfg;
      cfg.model = SweepModel::FiniteThermal;
      cfg.n_emitters = 10;
      cfg.spacing = d;
      cfg.beta = beta;
      cfg.axis1 = {AxisQuantity::GammaT, AxisScale::Log, 1e-3 * norm, 1e2 * norm, 101};
      cfg.axis2 = {AxisQuantity::GammaBth, AxisScale::Log, 1e-3 * norm, 1e2 * norm, 101};
      SweepTable t = sweep2d(cfg);
      char suffix[64];
      std::snprintf(suffix, sizeof suffix, "fig6_beta%g_d%g", beta, d);
      t.name = suffix;
      t.axis1 = normalized("gamma_t_over_gamma_b", t.axis1.values, norm);
      t.axis2 = normalized("gamma_bth_over_gamma_b", t.axis2.values, norm);
      t.metadata.emplace_back("gamma_b", fmt(norm));
      tables.push_back(std::move(t));
    }
  return tables;
}

SweepTable fig7_table() {
  struct Curve {
    int n;
    double beta;
  };
  const std::vector<Curve> curves = {{10, 0.01}, {20, 0.01}, {50, 0.01}, {10, 10.0}};
  std::vector<double> ds;
  for (double d = 0.05; d <= 1.0 + 1e-9; d += 0.05) ds.push_back(d);
  for (double d = 1.1; d <= 2.0 + 1e-9; d += 0.1) ds.push_back(d);

  SweepTable t;
  t.name = "fig7";
  t.metadata.emplace_back("model", "finite-thermal, maximized over gamma_t and gamma_bth");
  t.metadata.emplace_back("bounds_gamma_t", "[1e-3,1e3] Gamma0");
  t.metadata.emplace_back("bounds_gamma_bth", "[1e-6,1e3] Gamma0");
  t.metadata.emplace_back("version", version_string);
  t.axis1 = {"d_over_lambda", ds};
  t.axis2 = {"curve", {0, 1, 2, 3}};
  SweepColumn n_col{"n_emitters", {}}, b_col{"beta_gamma0", {}};
  for (const auto& c : curves) {
    n_col.values.push_back(c.n);
    b_col.values.push_back(c.beta);
  }
  t.axis2_companions = {n_col, b_col};
  t.value_name = "sigma_max_norm";
  t.values.setZero(static_cast<int>(ds.size()), static_cast<int>(curves.size()));
  t.divergent.assign(ds.size() * curves.size(), 0);

  const int jobs = static_cast<int>(ds.size() * curves.size());
  parallel_for(jobs, [&](int job) {
    const int i = job / static_cast<int>(curves.size());
    const int k = job % static_cast<int>(curves.size());
    SweepConfig c;
    c.model = SweepModel::FiniteThermal;
    c.n_emitters = curves[k].n;
    c.beta = curves[k].beta;
    c.spacing = ds[i];
    const auto rep = maximize_sigma(c, MaximizeBounds{});
    t.values(i, k) = 4.0 * rep.value / (curves[k].n * gamma0);
  });
  return t;
}

SweepTable fig9_table() {
  Axis d_axis{AxisQuantity::Spacing, AxisScale::Log, 0.01, 50.0, 201};
  const auto ds = d_axis.grid();
  const std::vector<int> ns = {10, 20, 50};

  SweepTable t;
  t.name = "fig9";
  t.metadata.emplace_back("model", "bright-mode decay rate vs spacing");
  t.metadata.emplace_back("version", version_string);
  t.axis1 = {"d_over_lambda", ds};
  t.axis2 = {"curve", {0, 1, 2}};
  t.axis2_companions = {{"n_emitters", {10, 20, 50}}};
  t.value_name = "gamma_b_over_gamma0";
  t.values.setZero(static_cast<int>(ds.size()), static_cast<int>(ns.size()));
  t.divergent.assign(ds.size() * ns.size(), 0);
  parallel_for(static_cast<int>(ds.size()), [&](int i) {
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const model::RingGeometry geom{ns[k], ds[i]};
      const auto sp = modes::spectrum_finite(geom, greens::coupling_matrices(geom));
      t.values(i, static_cast<int>(k)) = sp.rates[sp.bright_pos] / gamma0;
    }
  });
  return t;
}

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f", "fig3", "fig4a",
          "fig4b", "fig5", "fig6", "fig7", "fig8a", "fig8b", "fig9"};
}

std::vector<SweepTable> figure(const std::string& name) {
  if (name == "fig2a")
    return {dicke_panel("fig2a", SweepModel::SingleAtom, 1, ValueKind::SigmaAbs, std::nullopt, false)};
  if (name == "fig2b")
    return {dicke_panel("fig2b", SweepModel::DickeLocal, 10, ValueKind::SigmaAbs, std::nullopt, false),
            optimal_dephasing_overlay("fig2b_optimal_dephasing", 10)};
  if (name == "fig2c")
    return {dicke_panel("fig2c", SweepModel::DickeLocal, 50, ValueKind::SigmaAbs, std::nullopt, false),
            optimal_dephasing_overlay("fig2c_optimal_dephasing", 50)};
  if (name == "fig2d")
    return {dicke_panel("fig2d", SweepModel::DickeThermal, 10, ValueKind::SigmaAbs, 1e-2, true)};
  if (name == "fig2e")
    return {dicke_panel("fig2e", SweepModel::DickeThermal, 10, ValueKind::SigmaAbs, 1.0, true)};
  if (name == "fig2f")
    return {dicke_panel("fig2f", SweepModel::DickeThermal, 10, ValueKind::SigmaAbs, 1e2, true)};
  if (name == "fig3") return {fig3_table()};
  if (name == "fig4a")
    return {dicke_panel("fig4a", SweepModel::DickeLocal, 10, ValueKind::RatioIndependent,
                        std::nullopt, false)};
  if (name == "fig4b")
    return {dicke_panel("fig4b", SweepModel::DickeThermal, 10, ValueKind::RatioIndependent, 1.0,
                        true)};
  if (name == "fig5") return fig5_tables();
  if (name == "fig6") return fig6_tables();
  if (name == "fig7") return {fig7_table()};
  if (name == "fig8a")
    return {dicke_panel("fig8a", SweepModel::IncoherentDicke, 10, ValueKind::SigmaAbs,
                        std::nullopt, false)};
  if (name == "fig8b")
    return {dicke_panel("fig8b", SweepModel::IncoherentDicke, 10, ValueKind::SigmaAbs,
                        std::nullopt, true, true,
                        std::numeric_limits<double>::infinity())};
  if (name == "fig9") return {fig9_table()};
  throw UsageError("unknown figure: " + name);
}

}  // namespace ringabs::runner
