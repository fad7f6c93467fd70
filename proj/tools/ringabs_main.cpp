// ringabs — steady-state absorption of a nanoring of dipole-coupled emitters.
//
// Subcommands: point, sweep, figure, modes, optimize. Exit codes: 0 success,
// 2 usage error, 3 numeric failure, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ringabs/table_io.hpp"

namespace {

using namespace ringabs;

struct CliOptions {
  std::string model = "dicke-local";
  int n = 10;
  double d = 0.05;
  double beta = std::numeric_limits<double>::infinity();
  std::optional<double> beta_j;
  std::optional<double> fbar;
  double gamma_t = 1.0;
  double gamma_d = 0.0;
  double gamma_bth = 0.0;
  double epsilon = 1e-3;
  double nphot = 1.0;
  std::optional<double> delta;
  bool ratio = false;
  bool thermal = false;
  bool experimental_finite_incoherent = false;
  std::string axis1, axis2;
  std::string out;
  std::string svg;
  std::string outdir = ".";
  // optimize bounds
  double gt_min = 1e-3, gt_max = 1e3, gx_min = 1e-6, gx_max = 1e3;
};

runner::SweepModel parse_model(const std::string& name) {
  if (name == "single-atom") return runner::SweepModel::SingleAtom;
  if (name == "dicke-local") return runner::SweepModel::DickeLocal;
  if (name == "dicke-thermal") return runner::SweepModel::DickeThermal;
  if (name == "finite-thermal") return runner::SweepModel::FiniteThermal;
  if (name == "incoherent-dicke") return runner::SweepModel::IncoherentDicke;
  throw UsageError("unknown model: " + name);
}

runner::Axis parse_axis(const std::string& spec) {
  // name:scale:min:max:count, e.g. gamma_t:log:1e-3:1e2:101
  runner::Axis axis;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 5) throw UsageError("axis spec must be name:scale:min:max:count: " + spec);
  const std::string& q = parts[0];
  if (q == "gamma_t") axis.quantity = runner::AxisQuantity::GammaT;
  else if (q == "gamma_d") axis.quantity = runner::AxisQuantity::GammaD;
  else if (q == "gamma_bth") axis.quantity = runner::AxisQuantity::GammaBth;
  else if (q == "beta_j") axis.quantity = runner::AxisQuantity::BetaJ;
  else if (q == "beta") axis.quantity = runner::AxisQuantity::BetaGamma0;
  else if (q == "n") axis.quantity = runner::AxisQuantity::NEmitters;
  else if (q == "d") axis.quantity = runner::AxisQuantity::Spacing;
  else throw UsageError("unknown axis quantity: " + q);
  if (parts[1] == "log") axis.scale = runner::AxisScale::Log;
  else if (parts[1] == "lin") axis.scale = runner::AxisScale::Linear;
  else throw UsageError("axis scale must be log or lin: " + spec);
  try {
    axis.min = std::stod(parts[2]);
    axis.max = std::stod(parts[3]);
    axis.count = std::stoi(parts[4]);
  } catch (const std::exception&) {
    throw UsageError("bad axis numbers: " + spec);
  }
  if (axis.count < 1) throw UsageError("axis count must be >= 1: " + spec);
  return axis;
}

runner::SweepConfig to_config(const CliOptions& o) {
  runner::SweepConfig c;
  c.model = parse_model(o.model);
  c.value = o.ratio ? runner::ValueKind::RatioIndependent : runner::ValueKind::SigmaAbs;
  c.n_emitters = o.n;
  c.spacing = o.d;
  c.beta = o.beta;
  c.beta_J = o.beta_j;
  c.fbar = o.fbar;
  c.gamma_t = o.gamma_t;
  c.gamma_d = o.gamma_d;
  c.gamma_bth = o.gamma_bth;
  c.intensity = o.epsilon;
  c.mean_photons = o.nphot;
  c.detuning = o.delta;
  c.thermal_incoherent = o.thermal;
  c.experimental_finite_incoherent = o.experimental_finite_incoherent;
  return c;
}

void add_physics_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--model", o.model,
                  "single-atom | dicke-local | dicke-thermal | finite-thermal | incoherent-dicke");
  cmd->add_option("--n", o.n, "number of emitters");
  cmd->add_option("--d", o.d, "interparticle spacing (lambda0)");
  cmd->add_option("--beta", o.beta, "inverse temperature (1/Gamma0); inf = zero temperature");
  cmd->add_option("--beta-j", [&o](const CLI::results_t& r) {
    o.beta_j = std::stod(r[0]);
    return true;
  }, "inverse temperature as beta*J (converted via J(d))");
  cmd->add_option("--fbar", [&o](const CLI::results_t& r) {
    o.fbar = std::stod(r[0]);
    return true;
  }, "bath coupling slope (dimensionless)");
  cmd->add_option("--gamma-t", o.gamma_t, "trapping rate (Gamma0)");
  cmd->add_option("--gamma-d", o.gamma_d, "local dephasing rate (Gamma0)");
  cmd->add_option("--gamma-bth", o.gamma_bth, "bright-mode thermal width target (Gamma0)");
  cmd->add_option("--epsilon", o.epsilon, "incoherent intensity epsilon");
  cmd->add_option("--nphot", o.nphot, "incoherent mean photon number");
  cmd->add_option("--delta", [&o](const CLI::results_t& r) {
    o.delta = std::stod(r[0]);
    return true;
  }, "drive detuning (Gamma0); default resonant with the brightest mode");
  cmd->add_flag("--ratio", o.ratio, "report sigma_abs / (N sigma_abs^1at) instead of sigma_abs/sigma");
  cmd->add_flag("--thermal", o.thermal, "incoherent-dicke: thermal bath instead of local dephasing");
  cmd->add_flag("--experimental-finite-incoherent", o.experimental_finite_incoherent,
                "allow the symmetric incoherent pump outside the Dicke limit");
}

void echo_config(std::ostream& out, const CliOptions& o) {
  out << "# units: rates in Gamma0, lengths in lambda0\n";
  out << "# version: " << version_string << "\n";
  out << "# model: " << o.model << "\n# n_emitters: " << o.n << "\n# d: " << o.d << "\n";
  if (o.beta_j) out << "# beta_j: " << *o.beta_j << "\n";
  else out << "# beta: " << o.beta << "\n";
  if (o.fbar) out << "# fbar: " << *o.fbar << "\n";
  out << "# gamma_t: " << o.gamma_t << "\n# gamma_d: " << o.gamma_d
      << "\n# gamma_bth: " << o.gamma_bth << "\n";
  out << "# delta: " << (o.delta ? std::to_string(*o.delta) : "resonant-with-brightest") << "\n";
}

int run_point(const CliOptions& o) {
  echo_config(std::cout, o);
  const auto cfg = to_config(o);
  const double v = runner::evaluate_cell(cfg);
  char buf[64];
  if (cfg.value == runner::ValueKind::RatioIndependent) {
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::cout << "sigma_abs/(N sigma_abs^1at) = " << buf << "\n";
    return 0;
  }
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::cout << "sigma_abs/sigma = " << buf << "\n";
  if (cfg.model == runner::SweepModel::SingleAtom) {
    const auto r = closedform::single_atom(gamma0, o.gamma_t, o.gamma_d);
    std::snprintf(buf, sizeof buf, "%.6g", r.scattered_fraction);
    std::cout << "sigma_sc/sigma = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.6g", r.rho_ee_factor);
    std::cout << "rho_ee per |Omega|^2 = " << buf << "\n";
  } else if (cfg.model == runner::SweepModel::DickeLocal) {
    const auto st = steady::coherent_dicke_local(o.n, 1e-3, o.gamma_t, o.gamma_d);
    std::snprintf(buf, sizeof buf, "%.6g", *st.scattered_fraction);
    std::cout << "sigma_sc/sigma = " << buf << "\n";
  }
  return 0;
}

int run_sweep(const CliOptions& o) {
  if (o.axis1.empty() || o.axis2.empty())
    throw UsageError("sweep requires --axis1 and --axis2");
  auto cfg = to_config(o);
  cfg.axis1 = parse_axis(o.axis1);
  cfg.axis2 = parse_axis(o.axis2);
  auto table = runner::sweep2d(cfg);
  if (o.out.empty()) {
    io::emit_csv(table, std::cout);
  } else {
    io::write_csv(table, o.out);
    std::cout << "wrote " << o.out << "\n";
  }
  if (!o.svg.empty()) {
    io::HeatmapOptions hopt;
    if (cfg.model == runner::SweepModel::IncoherentDicke ||
        cfg.value == runner::ValueKind::RatioIndependent)
      hopt.vmax = 1.0;
    io::write_heatmap(table, o.svg, hopt);
    std::cout << "wrote " << o.svg << "\n";
  }
  return 0;
}

int run_figure(const std::string& name, const CliOptions& o, bool with_svg) {
  std::vector<std::string> names;
  if (name == "all") names = runner::figure_names();
  else names.push_back(name);
  for (const auto& fig : names) {
    for (const auto& table : runner::figure(fig)) {
      const std::string path = o.outdir + "/" + table.name + ".csv";
      io::write_csv(table, path);
      std::cout << "wrote " << path << "\n";
      if (with_svg && table.cols() > 1) {
        io::HeatmapOptions hopt;
        if (fig == "fig8a" || fig == "fig8b" || fig == "fig4a" || fig == "fig4b") hopt.vmax = 1.0;
        io::write_heatmap(table, o.outdir + "/" + table.name + ".svg", hopt);
        std::cout << "wrote " << o.outdir + "/" + table.name + ".svg" << "\n";
      }
    }
  }
  return 0;
}

int run_modes(const CliOptions& o, bool dicke, std::ostream& out) {
  modes::ModeSpectrum sp;
  if (dicke) {
    sp = modes::spectrum_dicke(o.n, o.d);
  } else {
    const model::RingGeometry geom{o.n, o.d};
    sp = modes::spectrum_finite(geom, greens::coupling_matrices(geom));
  }
  out << "# table: modes\n";
  out << "# units: rates in Gamma0, lengths in lambda0\n";
  out << "# model: " << (dicke ? "dicke" : "finite") << "\n";
  out << "# n_emitters: " << o.n << "\n# d: " << o.d << "\n";
  out << "# version: " << version_string << "\n";
  out << "m,j_shift,gamma_rate,bright\n";
  for (int i = 0; i < sp.size(); ++i)
    out << sp.modes[i] << "," << io::format_number(sp.shifts[i]) << ","
        << io::format_number(sp.rates[i]) << "," << (i == sp.bright_pos ? 1 : 0) << "\n";
  return 0;
}

int run_optimize(const CliOptions& o) {
  auto cfg = to_config(o);
  runner::MaximizeBounds bounds{o.gt_min, o.gt_max, o.gx_min, o.gx_max};
  const auto rep = runner::maximize_sigma(cfg, bounds);
  echo_config(std::cout, o);
  std::cout << "argmax gamma_t = " << io::format_number(rep.arg_gamma_t) << "\n";
  std::cout << "argmax "
            << (cfg.model == runner::SweepModel::DickeLocal ? "gamma_d" : "gamma_bth") << " = "
            << io::format_number(rep.arg_gamma_x) << "\n";
  std::cout << "sigma_abs_max/sigma = " << io::format_number(rep.value) << "\n";
  std::cout << "method = grid-refine\n";
  if (rep.boundary) std::cout << "flag: boundary optimum\n";
  if (rep.degenerate) std::cout << "flag: degenerate ridge (gamma_t + gamma_x = const)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringabs: single-photon absorption of a nanoring of dipole-coupled emitters"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key-value config file with [subcommand] sections");

  CliOptions opt;
  bool dicke_modes = false;
  bool with_svg = false;
  std::string figure_name;

  auto* point = app.add_subcommand("point", "evaluate sigma_abs at a single parameter set");
  add_physics_options(point, opt);

  auto* sweep = app.add_subcommand("sweep", "2-D parameter sweep to CSV (optional SVG heatmap)");
  add_physics_options(sweep, opt);
  sweep->add_option("--axis1", opt.axis1, "outer axis, name:scale:min:max:count");
  sweep->add_option("--axis2", opt.axis2, "inner axis, name:scale:min:max:count");
  sweep->add_option("-o,--out", opt.out, "output CSV path (default stdout)");
  sweep->add_option("--svg", opt.svg, "also write an SVG heatmap");

  auto* figure = app.add_subcommand("figure", "write built-in figure tables as CSV");
  figure->add_option("name", figure_name, "fig2a..fig2f, fig3, fig4a, fig4b, fig5, fig6, fig7, "
                                          "fig8a, fig8b, fig9, or all")
      ->required();
  figure->add_option("--outdir", opt.outdir, "output directory (default .)");
  figure->add_flag("--svg", with_svg, "also write SVG heatmaps for 2-D tables");

  auto* modes_cmd = app.add_subcommand("modes", "dump the collective mode spectrum as CSV");
  modes_cmd->add_option("--n", opt.n, "number of emitters");
  modes_cmd->add_option("--d", opt.d, "interparticle spacing (lambda0)");
  modes_cmd->add_flag("--dicke", dicke_modes, "idealized Dicke-limit spectrum");
  modes_cmd->add_option("-o,--out", opt.out, "output CSV path (default stdout)");

  auto* optimize = app.add_subcommand("optimize", "maximize sigma_abs over (gamma_t, dephasing)");
  add_physics_options(optimize, opt);
  optimize->add_option("--gamma-t-min", opt.gt_min, "lower gamma_t bound");
  optimize->add_option("--gamma-t-max", opt.gt_max, "upper gamma_t bound");
  optimize->add_option("--gamma-x-min", opt.gx_min, "lower dephasing bound");
  optimize->add_option("--gamma-x-max", opt.gx_max, "upper dephasing bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(point)) return run_point(opt);
    if (app.got_subcommand(sweep)) return run_sweep(opt);
    if (app.got_subcommand(figure)) return run_figure(figure_name, opt, with_svg);
    if (app.got_subcommand(modes_cmd)) {
      if (opt.out.empty()) return run_modes(opt, dicke_modes, std::cout);
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw ringabs::IoError("cannot open for writing: " + opt.out);
      return run_modes(opt, dicke_modes, f);
    }
    if (app.got_subcommand(optimize)) return run_optimize(opt);
  } catch (const ringabs::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ringabs::InvalidParameter& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const ringabs::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const ringabs::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const ringabs::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
