#include "ratefv/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ratefv/error.hpp"

namespace ratefv {

FluxKind parse_flux_kind(std::string_view text) {
  if (text == "mlf") return FluxKind::mlf;
  if (text == "dafermos") return FluxKind::dafermos;
  if (text == "godunov") return FluxKind::godunov;
  if (text == "llf") return FluxKind::llf;
  throw InvalidArgument("unknown flux '" + std::string(text) + "' (expected mlf, dafermos, godunov or llf)");
}

std::string to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::mlf:
      return "mlf";
    case FluxKind::dafermos:
      return "dafermos";
    case FluxKind::godunov:
      return "godunov";
    case FluxKind::llf:
      return "llf";
  }
  return "?";
}

double dafermos_flux_burgers(const AdmissibleInterval& adm, double u_l, double u_r) {
  const double a = adm.lo();
  const double b = adm.hi();
  double u_star = adm.center();
  if (u_l < u_r) {
    // Minimize f: the sonic point if admissible, else the end closest to it.
    if (a <= 0.0 && 0.0 <= b) {
      u_star = 0.0;
    } else if (a > 0.0) {
      u_star = a;
    } else {
      u_star = b;
    }
  } else if (u_l > u_r) {
    u_star = std::abs(b) > std::abs(a) ? b : a;
  }
  return 0.5 * u_star * u_star;
}

double dafermos_flux(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r) {
  const double jump = law.entropy_vars(u_r) - law.entropy_vars(u_l);
  if (jump > 0.0) return law.flux(law.flux_argmin(adm.lo(), adm.hi()));
  if (jump < 0.0) return law.flux(law.flux_argmax(adm.lo(), adm.hi()));
  return law.flux(adm.center());
}

double dafermos_flux_search(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r,
                            std::size_t n_samples) {
  if (n_samples < 2) throw InvalidArgument("dafermos_flux_search: need at least two samples");
  const double jump = law.entropy_vars(u_r) - law.entropy_vars(u_l);
  const double lo = adm.lo();
  const double hi = adm.hi();
  const double step = (hi - lo) / static_cast<double>(n_samples - 1);

  double best_obj = std::numeric_limits<double>::infinity();
  double best_flux = law.flux(lo);
  bool center_done = false;
  auto consider = [&](double u) {
    const double fu = law.flux(u);
    const double obj = jump * fu;
    if (obj < best_obj) {
      best_obj = obj;
      best_flux = fu;
    }
  };
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double u = i + 1 == n_samples ? hi : lo + static_cast<double>(i) * step;
    if (!center_done && adm.center() < u) {
      consider(adm.center());
      center_done = true;
    }
    consider(u);
  }
  if (!center_done) consider(adm.center());
  return best_flux;
}

double mlf_flux(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r, double eps_jump) {
  if (!(eps_jump > 0.0)) throw InvalidArgument("mlf_flux: eps_jump must be positive");
  const double base = law.flux(adm.center());
  const double jump = law.entropy_vars(u_l) - law.entropy_vars(u_r);
  if (std::abs(jump) < eps_jump) return base;
  const double speed = law.max_wave_speed(adm.lo(), adm.hi());
  return base + std::copysign(speed * adm.radius(), jump);
}

double godunov_flux(const ScalarLaw& law, double u_l, double u_r) {
  if (u_l <= u_r) return law.flux(law.flux_argmin(u_l, u_r));
  return law.flux(law.flux_argmax(u_r, u_l));
}

double llf_flux(const ScalarLaw& law, double u_l, double u_r) {
  const double speed = law.max_wave_speed(std::min(u_l, u_r), std::max(u_l, u_r));
  return 0.5 * (law.flux(u_l) + law.flux(u_r)) + 0.5 * speed * (u_l - u_r);
}

}  // namespace ratefv
