#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ratefv/grid.hpp"
#include "ratefv/law.hpp"
#include "ratefv/radius.hpp"

namespace ratefv {

/// Symmetric, nonnegative, unit-sum kernel sigma_l for l = -half_width..half_width.
struct MollifierKernel {
  std::size_t half_width = 0;
  std::vector<double> weights;  // weights[l + half_width]
  double scale = 1.0;           // A = 1 / sigma_0

  double sigma(std::ptrdiff_t l) const {
    return weights[static_cast<std::size_t>(l + static_cast<std::ptrdiff_t>(half_width))];
  }
};

/// Hann window over `width_boundaries` interfaces (odd, >= 3), normalized to
/// unit sum, with A = 1/sigma_0.
MollifierKernel hann_kernel(std::size_t width_boundaries);

inline constexpr std::size_t kDefaultViscWidth = 11;

/// Per-interface dissipation demand of the MLF flux in viscosity form.
///
/// demand = max_U |f'| * rad * |dW| is the product jump_sq * mu, which stays
/// finite where mu itself blows up because dW -> 0.
struct ViscosityProfile {
  std::vector<double> demand;
  std::vector<double> jump_sq;
  std::vector<double> mu_tilde;

  std::size_t size() const { return demand.size(); }
};

/// Interface j lies between means[j] and means[j+1], so means.size() must be
/// adm.size() + 1.
ViscosityProfile build_profile(std::span<const AdmissibleInterval> adm, std::span<const double> means,
                               const ScalarLaw& law);

/// Windows whose weighted jump sum is at or below this contribute nothing.
inline constexpr double kWindowFloor = 1e-300;

/// Entropy-aware redistribution. Periodic data wraps around the profile;
/// outflow data is zero beyond its ends. Fills profile.mu_tilde and returns it.
std::span<const double> redistribute(ViscosityProfile& profile, const MollifierKernel& kernel, BoundaryCondition bc);
/// Same with an explicit scaling constant in place of kernel.scale.
std::span<const double> redistribute(ViscosityProfile& profile, const MollifierKernel& kernel, BoundaryCondition bc,
                                     double scale);

/// flux_j = f_center_j + mu_tilde_j * (W(means[j]) - W(means[j+1])).
std::vector<double> assemble_flux(std::span<const double> f_center, std::span<const double> mu_tilde,
                                  std::span<const double> means, const ScalarLaw& law);
void assemble_flux(std::span<const double> f_center, std::span<const double> mu_tilde, std::span<const double> means,
                   const ScalarLaw& law, std::span<double> out);

}  // namespace ratefv
