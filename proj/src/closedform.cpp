#include "ringabs/closedform.hpp"

#include <cmath>
#include <functional>

#include "ringabs/errors.hpp"

namespace ringabs::closedform {

namespace {

void require_nonnegative_rates(double gamma_t, double gamma_d) {
  if (!(gamma_t >= 0.0) || !(gamma_d >= 0.0))
    throw InvalidParameter({"trap_rate >= 0", "dephasing >= 0"});
}

void require_trap_pole(double gamma_t, double dephasing, const char* what) {
  if (gamma_t == 0.0 && dephasing > 0.0)
    throw DegenerateSink(std::string(what) + ": pole at Gamma_T = 0 with nonzero dephasing");
}

// Adaptive Simpson on [a, b]; throws QuadratureNotConverged at the depth cap.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  if (depth > 60)
    throw QuadratureNotConverged("adaptive quadrature failed to reach tolerance");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

SingleAtomResult single_atom(double gamma, double gamma_t, double gamma_d) {
  if (!(gamma > 0.0)) throw InvalidParameter({"gamma > 0"});
  require_nonnegative_rates(gamma_t, gamma_d);
  const double width = gamma + gamma_d + gamma_t;
  const double decay = gamma + gamma_t;
  SingleAtomResult r;
  r.rho_ee_factor = 4.0 / (width * decay);
  r.scattered_fraction = (gamma / width) * (gamma / decay);
  r.absorbed_fraction = (gamma / width) * (gamma_t / decay);
  return r;
}

double local_dephasing_sigma(int n_emitters, double gamma_t, double gamma_d) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  require_nonnegative_rates(gamma_t, gamma_d);
  require_trap_pole(gamma_t, gamma_d, "local_dephasing_sigma");
  if (gamma_t == 0.0) return 0.0;
  const double ng = n_emitters * gamma0;
  const double width = ng + gamma_d + gamma_t;
  return (ng / width) * (gamma_d + gamma_t) / (width + gamma_d * gamma0 / gamma_t);
}

double local_dephasing_sigma_small_trap(int n_emitters, double gamma_t, double gamma_d) {
  const double ng = n_emitters * gamma0;
  return (ng / (ng + gamma_d + gamma_t)) * gamma_t / (gamma0 + gamma_t);
}

double local_dephasing_sigma_large_n(int n_emitters, double gamma_t, double gamma_d) {
  const double ng = n_emitters * gamma0;
  const double width = ng + gamma_d + gamma_t;
  return (ng / width) * (gamma_d + gamma_t) / width;
}

OptimumReport optimal_local_dephasing(int n_emitters, double gamma_t) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  if (!(gamma_t > 0.0)) throw InvalidParameter({"trap_rate > 0"});
  const double n = n_emitters;
  OptimumReport rep;
  rep.arg_gamma_t = gamma_t;
  rep.method = OptimumMethod::ClosedForm;
  const double interior =
      gamma0 * std::sqrt(n * (n - 1.0) * gamma_t / (gamma_t + gamma0)) - gamma_t;
  if (interior > 0.0) {
    rep.arg_gamma_x = interior;
    const double root = std::sqrt((n - 1.0) / n) + std::sqrt((gamma0 + gamma_t) / gamma_t);
    rep.value = 1.0 / (root * root);
  } else {
    rep.arg_gamma_x = 0.0;
    rep.boundary = true;
    rep.value = local_dephasing_sigma(n_emitters, gamma_t, 0.0);
  }
  return rep;
}

ZeroTThermalResult zero_T_thermal_sigma(int n_emitters, double gamma_t, double gamma_bth) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  require_nonnegative_rates(gamma_t, gamma_bth);
  if (gamma_t == 0.0)
    throw DegenerateSink("zero_T_thermal_sigma: pole at Gamma_T = 0");
  const double ng = n_emitters * gamma0;
  const double sinks = gamma_t + gamma_bth;  // exchange-symmetric by construction
  const double width = ng + sinks;
  ZeroTThermalResult r;
  r.rho_bb_factor = 4.0 * n_emitters / (width * width);
  r.rho_ee_factor = sinks / gamma_t * r.rho_bb_factor;
  r.absorbed_fraction = (ng / width) * (sinks / width);
  return r;
}

double incoherent_local_sigma(int n_emitters, double gamma_t, double gamma_d) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  require_nonnegative_rates(gamma_t, gamma_d);
  require_trap_pole(gamma_t, gamma_d, "incoherent_local_sigma");
  if (gamma_t == 0.0) return 0.0;
  const double ng = n_emitters * gamma0;
  return (gamma_t + gamma_d) / (ng + gamma_d + gamma_t + gamma_d * gamma0 / gamma_t);
}

double incoherent_zero_T_sigma(int n_emitters, double gamma_t, double gamma_bth) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  require_nonnegative_rates(gamma_t, gamma_bth);
  const double sinks = gamma_t + gamma_bth;
  return sinks / (n_emitters * gamma0 + sinks);
}

double independent_ratio(int n_emitters, double gamma_t, double dephasing, DephasingModel model) {
  if (!(gamma_t > 0.0)) throw InvalidParameter({"trap_rate > 0"});
  const double collective = (model == DephasingModel::Local)
                                ? local_dephasing_sigma(n_emitters, gamma_t, dephasing)
                                : zero_T_thermal_sigma(n_emitters, gamma_t, dephasing).absorbed_fraction;
  const double one = single_atom(gamma0, gamma_t, dephasing).absorbed_fraction;
  return collective / (n_emitters * one);
}

double zero_T_ratio_limit(double gamma_t, double fbar_J) {
  if (!(gamma_t > 0.0)) throw InvalidParameter({"trap_rate > 0"});
  const double x = 2.0 * fbar_J;
  return (gamma0 / gamma_t) * (x / (gamma0 + x)) * (x / (gamma0 + x));
}

DetuningAveraged detuning_averaged(int n_emitters, double gamma_t, double gamma_d) {
  if (n_emitters < 1) throw InvalidParameter({"n_emitters >= 1"});
  require_nonnegative_rates(gamma_t, gamma_d);
  const double ng = n_emitters * gamma0;
  const double width = ng + gamma_d + gamma_t;
  const double sigma_res = local_dephasing_sigma(n_emitters, gamma_t, gamma_d);

  DetuningAveraged out;
  out.ext_analytic = 0.5 * std::numbers::pi * ng;
  out.abs_analytic = (gamma_t == 0.0 && gamma_d == 0.0)
                         ? 0.0
                         : (gamma_d + gamma_t) / (width + gamma_d * gamma0 / gamma_t) *
                               out.ext_analytic;

  // Lorentzian responses sigma(delta) = sigma(0) w^2/(w^2 + 4 delta^2); the
  // quadrature covers |delta| <= 50 w and the exact arctan tail is added.
  const double lim = 50.0 * width;
  const double tail_unit = std::numbers::pi / 2.0 - std::atan(2.0 * lim / width);
  const auto lorentz = [width](double delta) {
    return width * width / (width * width + 4.0 * delta * delta);
  };
  const double quad = integrate(lorentz, -lim, lim, 1e-10 * lim);
  const double line = quad + width * tail_unit;  // = integral of the unit Lorentzian
  out.ext_numeric = (ng / width) * line;
  out.abs_numeric = sigma_res * line;
  return out;
}

}  // namespace ringabs::closedform
