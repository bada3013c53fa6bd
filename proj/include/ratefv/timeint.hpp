#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ratefv/flux.hpp"
#include "ratefv/grid.hpp"
#include "ratefv/law.hpp"
#include "ratefv/radius.hpp"
#include "ratefv/recon.hpp"
#include "ratefv/visc.hpp"

namespace ratefv {

struct SchemeConfig {
  std::shared_ptr<const ScalarLaw> law = std::make_shared<Burgers>();
  int order = 4;
  PredictorKind predictor{};
  FluxKind flux = FluxKind::mlf;
  bool redistribute = true;
  double cfl = 0.1;
  BoundaryCondition bc{};
  std::size_t visc_width = kDefaultViscWidth;

  /// Throws InvalidArgument on inconsistent settings.
  void validate() const;
  /// godunov and llf work on cell means directly.
  bool first_order() const { return flux == FluxKind::godunov || flux == FluxKind::llf; }
};

/// The semi-discrete operator du_k/dt = (F_{k-1/2} - F_{k+1/2}) / dx.
///
/// Holds the precomputed stencil table and kernel plus scratch buffers, so a
/// Scheme must not be shared between threads.
class Scheme {
 public:
  explicit Scheme(SchemeConfig config);

  const SchemeConfig& config() const { return config_; }
  const ScalarLaw& law() const { return *config_.law; }
  std::size_t ghost_width() const { return ghost_; }
  /// Minimum number of cells the stencils need.
  std::size_t min_cells() const;

  /// Fills `out` with the time derivative. Throws NumericalError on a
  /// non-finite state or flux.
  void rhs(std::span<const double> means, double dx, std::span<double> out);

  /// Interface fluxes F_0..F_n of the last rhs call.
  std::span<const double> interface_fluxes() const { return fluxes_; }
  /// Largest redistributed viscosity of the last rhs call, 0 without redistribution.
  double max_viscosity() const { return max_viscosity_; }

 private:
  void compute_fluxes(std::span<const double> means);

  SchemeConfig config_;
  StencilTable table_;
  MollifierKernel kernel_;
  std::size_t ghost_;
  std::vector<double> ext_;
  std::vector<double> candidates_;
  std::vector<double> scratch_;
  std::vector<AdmissibleInterval> adm_;
  std::vector<double> f_center_;
  ViscosityProfile profile_;
  std::vector<double> fluxes_;
  double max_viscosity_ = 0.0;
};

CellField semidiscrete_rhs(const CellField& field, const SchemeConfig& config);

inline constexpr double kSpeedFloor = 1e-12;

/// cfl * dx / max_k |f'(u_k)|, with the speed floored at kSpeedFloor.
double cfl_dt(std::span<const double> means, const ScalarLaw& law, double cfl, double dx);

/// Bound on mu * dt / dx. The flux term mu * (W_l - W_r) acts like a diffusion
/// whose eigenvalues reach -4 mu dt / dx; DP8 is stable on the real axis down
/// to about -5.17.
inline constexpr double kViscousNumber = 0.5;

/// kViscousNumber * dx / mu_max, or +infinity when mu_max <= 0.
double viscous_dt(double mu_max, double dx);

/// Explicit 13-stage, 8th order Dormand-Prince tableau.
struct ButcherTableau {
  static constexpr std::size_t kStages = 13;
  std::array<std::array<double, kStages>, kStages> a{};
  std::array<double, kStages> b{};
  std::array<double, kStages> c{};
};
const ButcherTableau& dp8_tableau();

using RhsFunction = std::function<void(double t, std::span<const double> u, std::span<double> dudt)>;

/// Reusable stage storage for dp8_step.
class Dp8Stepper {
 public:
  explicit Dp8Stepper(std::size_t n);
  /// Advances `u` in place by one fixed step. Throws NumericalError on NaN.
  /// A non-empty `k1` is taken as rhs(t, u) and saves the first evaluation.
  void step(const RhsFunction& rhs, double t, std::span<double> u, double dt, std::span<const double> k1 = {});

 private:
  std::size_t n_;
  std::vector<std::vector<double>> k_;
  std::vector<double> stage_;
};

std::vector<double> dp8_step(const RhsFunction& rhs, double t, std::span<const double> u, double dt);

struct Snapshot {
  double t = 0.0;
  CellField field;
  double entropy = 0.0;
};

struct EntropySample {
  double t = 0.0;
  double entropy = 0.0;
};

struct IntegrationResult {
  std::vector<Snapshot> snapshots;
  std::vector<EntropySample> entropy_trace;  // initial state plus every step
  CellField final_field;
  std::size_t steps = 0;
};

/// Fixed-step DP8 from t = 0 to t_end. Each step is the smaller of cfl_dt and
/// viscous_dt at the step's initial state. Steps are clipped to
/// land exactly on each snapshot time. Snapshot times outside [0, t_end] are
/// rejected.
IntegrationResult integrate(const CellField& field0, const SchemeConfig& config, double t_end,
                            std::span<const double> snapshot_times = {});

}  // namespace ratefv
