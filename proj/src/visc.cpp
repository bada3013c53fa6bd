#include "ratefv/visc.hpp"

#include <cmath>
#include <numbers>

#include "ratefv/error.hpp"

namespace ratefv {

MollifierKernel hann_kernel(std::size_t width_boundaries) {
  if (width_boundaries < 3 || width_boundaries % 2 == 0) {
    throw InvalidArgument("hann_kernel: width must be odd and at least 3");
  }
  MollifierKernel kernel;
  kernel.half_width = (width_boundaries - 1) / 2;
  kernel.weights.resize(width_boundaries);
  const auto span = static_cast<double>(width_boundaries - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < width_boundaries; ++i) {
    const double l = static_cast<double>(i) - static_cast<double>(kernel.half_width);
    double h = 0.0;
    // The two ends are exact zeros of the window.
    if (i != 0 && i + 1 != width_boundaries) {
      const double c = std::cos(std::numbers::pi * l / span);
      h = c * c;
    }
    kernel.weights[i] = h;
    sum += h;
  }
  for (double& w : kernel.weights) w /= sum;
  kernel.scale = 1.0 / kernel.weights[kernel.half_width];
  return kernel;
}

ViscosityProfile build_profile(std::span<const AdmissibleInterval> adm, std::span<const double> means,
                               const ScalarLaw& law) {
  if (means.size() != adm.size() + 1) throw InvalidArgument("build_profile: need one more mean than interfaces");
  ViscosityProfile profile;
  profile.demand.resize(adm.size());
  profile.jump_sq.resize(adm.size());
  profile.mu_tilde.assign(adm.size(), 0.0);
  for (std::size_t j = 0; j < adm.size(); ++j) {
    const double jump = law.entropy_vars(means[j + 1]) - law.entropy_vars(means[j]);
    profile.jump_sq[j] = jump * jump;
    profile.demand[j] = law.max_wave_speed(adm[j].lo(), adm[j].hi()) * adm[j].radius() * std::abs(jump);
  }
  return profile;
}

std::span<const double> redistribute(ViscosityProfile& profile, const MollifierKernel& kernel, BoundaryCondition bc) {
  return redistribute(profile, kernel, bc, kernel.scale);
}

std::span<const double> redistribute(ViscosityProfile& profile, const MollifierKernel& kernel, BoundaryCondition bc,
                                     double scale) {
  const std::size_t m = profile.size();
  if (profile.jump_sq.size() != m) throw InvalidArgument("redistribute: inconsistent profile");
  profile.mu_tilde.assign(m, 0.0);
  if (m == 0) return profile.mu_tilde;
  const auto p = static_cast<std::ptrdiff_t>(kernel.half_width);
  const auto sm = static_cast<std::ptrdiff_t>(m);
  const bool periodic = bc.kind == BoundaryKind::periodic;

  // Index into the profile, or -1 for zero padding.
  auto at = [&](std::ptrdiff_t i) -> std::ptrdiff_t {
    if (periodic) return ((i % sm) + sm) % sm;
    return (i < 0 || i >= sm) ? -1 : i;
  };

  std::vector<double> ratio(m, 0.0);
  for (std::ptrdiff_t j = 0; j < sm; ++j) {
    const double demand = profile.demand[static_cast<std::size_t>(j)];
    if (demand == 0.0) continue;
    double window = 0.0;
    for (std::ptrdiff_t l = -p; l <= p; ++l) {
      const std::ptrdiff_t i = at(j + l);
      if (i >= 0) window += kernel.sigma(l) * profile.jump_sq[static_cast<std::size_t>(i)];
    }
    if (window > kWindowFloor) ratio[static_cast<std::size_t>(j)] = demand / window;
  }
  for (std::ptrdiff_t k = 0; k < sm; ++k) {
    double sum = 0.0;
    for (std::ptrdiff_t l = -p; l <= p; ++l) {
      const std::ptrdiff_t i = at(k + l);
      if (i >= 0) sum += kernel.sigma(l) * ratio[static_cast<std::size_t>(i)];
    }
    profile.mu_tilde[static_cast<std::size_t>(k)] = scale * sum;
  }
  return profile.mu_tilde;
}

void assemble_flux(std::span<const double> f_center, std::span<const double> mu_tilde, std::span<const double> means,
                   const ScalarLaw& law, std::span<double> out) {
  const std::size_t m = f_center.size();
  if (mu_tilde.size() != m || means.size() != m + 1 || out.size() != m) {
    throw InvalidArgument("assemble_flux: inconsistent lengths");
  }
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = f_center[j] + mu_tilde[j] * (law.entropy_vars(means[j]) - law.entropy_vars(means[j + 1]));
  }
}

std::vector<double> assemble_flux(std::span<const double> f_center, std::span<const double> mu_tilde,
                                  std::span<const double> means, const ScalarLaw& law) {
  std::vector<double> out(f_center.size());
  assemble_flux(f_center, mu_tilde, means, law, out);
  return out;
}

}  // namespace ratefv
