#include "ratefv/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ratefv/error.hpp"

namespace ratefv {

void SchemeConfig::validate() const {
  if (!law) throw InvalidArgument("scheme has no conservation law");
  if (order < 0 || order > 8) throw InvalidArgument("polynomial order must lie in [0, 8]");
  if (!(cfl > 0.0) || !std::isfinite(cfl)) throw InvalidArgument("cfl must be positive");
  if (predictor.type == PredictorType::surface_discard) {
    const int candidates = order + 2;
    if (predictor.discard < 0 || predictor.discard > candidates - 2) {
      throw InvalidArgument("bsphere-discard:" + std::to_string(predictor.discard) + " leaves fewer than two of " +
                            std::to_string(candidates) + " candidates");
    }
  }
  if (flux == FluxKind::mlf && redistribute) (void)hann_kernel(visc_width);
}

Scheme::Scheme(SchemeConfig config)
    : config_((config.validate(), std::move(config))),
      table_(config_.order),
      kernel_(config_.flux == FluxKind::mlf && config_.redistribute ? hann_kernel(config_.visc_width)
                                                                    : MollifierKernel{}),
      ghost_(config_.first_order() ? 1 : table_.stencil_width()) {
  candidates_.resize(table_.candidate_count());
  scratch_.resize(table_.candidate_count());
}

std::size_t Scheme::min_cells() const { return config_.first_order() ? 1 : table_.window_width(); }

void Scheme::compute_fluxes(std::span<const double> means) {
  const std::size_t n = means.size();
  const bool periodic = config_.bc.kind == BoundaryKind::periodic;
  const std::size_t m = periodic ? n : n + 1;
  const ScalarLaw& law = *config_.law;
  const std::size_t g = ghost_;

  ext_ = ghost_extend(means, config_.bc, g);
  max_viscosity_ = 0.0;
  fluxes_.resize(n + 1);

  // Interface j separates cells j-1 and j; their means sit at ext_[g+j-1], ext_[g+j].
  if (config_.first_order()) {
    for (std::size_t j = 0; j < m; ++j) {
      const double ul = ext_[g + j - 1];
      const double ur = ext_[g + j];
      fluxes_[j] = config_.flux == FluxKind::godunov ? godunov_flux(law, ul, ur) : llf_flux(law, ul, ur);
    }
  } else {
    adm_.resize(m);
    const std::size_t width = table_.window_width();
    for (std::size_t j = 0; j < m; ++j) {
      // Stencil window: cells j-r .. j+r-1, starting at ext_[j] since g = r.
      table_.recover(std::span<const double>(ext_).subspan(j, width), candidates_);
      adm_[j] = predict(config_.predictor, candidates_, scratch_);
    }
    const std::span<const double> adjacent = std::span<const double>(ext_).subspan(g - 1, m + 1);
    switch (config_.flux) {
      case FluxKind::mlf:
        if (config_.redistribute) {
          f_center_.resize(m);
          for (std::size_t j = 0; j < m; ++j) f_center_[j] = law.flux(adm_[j].center());
          profile_ = build_profile(adm_, adjacent, law);
          redistribute(profile_, kernel_, config_.bc);
          max_viscosity_ = *std::max_element(profile_.mu_tilde.begin(), profile_.mu_tilde.end());
          assemble_flux(f_center_, profile_.mu_tilde, adjacent, law, std::span<double>(fluxes_).first(m));
        } else {
          for (std::size_t j = 0; j < m; ++j) fluxes_[j] = mlf_flux(law, adm_[j], adjacent[j], adjacent[j + 1]);
        }
        break;
      case FluxKind::dafermos:
        for (std::size_t j = 0; j < m; ++j) fluxes_[j] = dafermos_flux(law, adm_[j], adjacent[j], adjacent[j + 1]);
        break;
      default:
        break;
    }
  }
  if (periodic) fluxes_[n] = fluxes_[0];
}

void Scheme::rhs(std::span<const double> means, double dx, std::span<double> out) {
  const std::size_t n = means.size();
  if (out.size() != n) throw InvalidArgument("Scheme::rhs: output size mismatch");
  if (n < min_cells()) {
    throw InvalidArgument("Scheme::rhs: " + std::to_string(n) + " cells, stencils need at least " +
                          std::to_string(min_cells()));
  }
  for (double u : means) {
    if (!std::isfinite(u)) throw NumericalError("non-finite cell mean entering the flux computation");
  }
  compute_fluxes(means);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = (fluxes_[k] - fluxes_[k + 1]) / dx;
    if (!std::isfinite(out[k])) throw NumericalError("non-finite time derivative in cell " + std::to_string(k));
  }
}

CellField semidiscrete_rhs(const CellField& field, const SchemeConfig& config) {
  Scheme scheme(config);
  std::vector<double> out(field.size());
  scheme.rhs(field.means(), field.grid().dx(), out);
  return {field.grid(), std::move(out)};
}

double cfl_dt(std::span<const double> means, const ScalarLaw& law, double cfl, double dx) {
  double speed = kSpeedFloor;
  for (double u : means) speed = std::max(speed, std::abs(law.wave_speed(u)));
  return cfl * dx / speed;
}

double viscous_dt(double mu_max, double dx) {
  if (!(mu_max > 0.0)) return std::numeric_limits<double>::infinity();
  return kViscousNumber * dx / mu_max;
}

namespace {

ButcherTableau make_dp8() {
  ButcherTableau t;
  auto& a = t.a;
  t.c = {0.0,
         1.0 / 18.0,
         1.0 / 12.0,
         1.0 / 8.0,
         5.0 / 16.0,
         3.0 / 8.0,
         59.0 / 400.0,
         93.0 / 200.0,
         5490023248.0 / 9719169821.0,
         13.0 / 20.0,
         1201146811.0 / 1299019798.0,
         1.0,
         1.0};
  a[1][0] = 1.0 / 18.0;
  a[2][0] = 1.0 / 48.0;
  a[2][1] = 1.0 / 16.0;
  a[3][0] = 1.0 / 32.0;
  a[3][2] = 3.0 / 32.0;
  a[4][0] = 5.0 / 16.0;
  a[4][2] = -75.0 / 64.0;
  a[4][3] = 75.0 / 64.0;
  a[5][0] = 3.0 / 80.0;
  a[5][3] = 3.0 / 16.0;
  a[5][4] = 3.0 / 20.0;
  a[6][0] = 29443841.0 / 614563906.0;
  a[6][3] = 77736538.0 / 692538347.0;
  a[6][4] = -28693883.0 / 1125000000.0;
  a[6][5] = 23124283.0 / 1800000000.0;
  a[7][0] = 16016141.0 / 946692911.0;
  a[7][3] = 61564180.0 / 158732637.0;
  a[7][4] = 22789713.0 / 633445777.0;
  a[7][5] = 545815736.0 / 2771057229.0;
  a[7][6] = -180193667.0 / 1043307555.0;
  a[8][0] = 39632708.0 / 573591083.0;
  a[8][3] = -433636366.0 / 683701615.0;
  a[8][4] = -421739975.0 / 2616292301.0;
  a[8][5] = 100302831.0 / 723423059.0;
  a[8][6] = 790204164.0 / 839813087.0;
  a[8][7] = 800635310.0 / 3783071287.0;
  a[9][0] = 246121993.0 / 1340847787.0;
  a[9][3] = -37695042795.0 / 15268766246.0;
  a[9][4] = -309121744.0 / 1061227803.0;
  a[9][5] = -12992083.0 / 490766935.0;
  a[9][6] = 6005943493.0 / 2108947869.0;
  a[9][7] = 393006217.0 / 1396673457.0;
  a[9][8] = 123872331.0 / 1001029789.0;
  a[10][0] = -1028468189.0 / 846180014.0;
  a[10][3] = 8478235783.0 / 508512852.0;
  a[10][4] = 1311729495.0 / 1432422823.0;
  a[10][5] = -10304129995.0 / 1701304382.0;
  a[10][6] = -48777925059.0 / 3047939560.0;
  a[10][7] = 15336726248.0 / 1032824649.0;
  a[10][8] = -45442868181.0 / 3398467696.0;
  a[10][9] = 3065993473.0 / 597172653.0;
  a[11][0] = 185892177.0 / 718116043.0;
  a[11][3] = -3185094517.0 / 667107341.0;
  a[11][4] = -477755414.0 / 1098053517.0;
  a[11][5] = -703635378.0 / 230739211.0;
  a[11][6] = 5731566787.0 / 1027545527.0;
  a[11][7] = 5232866602.0 / 850066563.0;
  a[11][8] = -4093664535.0 / 808688257.0;
  a[11][9] = 3962137247.0 / 1805957418.0;
  a[11][10] = 65686358.0 / 487910083.0;
  a[12][0] = 403863854.0 / 491063109.0;
  a[12][3] = -5068492393.0 / 434740067.0;
  a[12][4] = -411421997.0 / 543043805.0;
  a[12][5] = 652783627.0 / 914296604.0;
  a[12][6] = 11173962825.0 / 925320556.0;
  a[12][7] = -13158990841.0 / 6184727034.0;
  a[12][8] = 3936647629.0 / 1978049680.0;
  a[12][9] = -160528059.0 / 685178525.0;
  a[12][10] = 248638103.0 / 1413531060.0;
  t.b = {14005451.0 / 335480064.0,
         0.0,
         0.0,
         0.0,
         0.0,
         -59238493.0 / 1068277825.0,
         181606767.0 / 758867731.0,
         561292985.0 / 797845732.0,
         -1041891430.0 / 1371343529.0,
         760417239.0 / 1151165299.0,
         118820643.0 / 751138087.0,
         -528747749.0 / 2220607170.0,
         1.0 / 4.0};
  return t;
}

}  // namespace

const ButcherTableau& dp8_tableau() {
  static const ButcherTableau tableau = make_dp8();
  return tableau;
}

Dp8Stepper::Dp8Stepper(std::size_t n)
    : n_(n), k_(ButcherTableau::kStages, std::vector<double>(n)), stage_(n) {}

void Dp8Stepper::step(const RhsFunction& rhs, double t, std::span<double> u, double dt,
                      std::span<const double> k1) {
  if (u.size() != n_) throw InvalidArgument("Dp8Stepper: state size mismatch");
  if (!(dt > 0.0)) throw InvalidArgument("Dp8Stepper: dt must be positive");
  if (!k1.empty() && k1.size() != n_) throw InvalidArgument("Dp8Stepper: first stage size mismatch");
  const ButcherTableau& tab = dp8_tableau();
  for (std::size_t s = 0; s < ButcherTableau::kStages; ++s) {
    if (s == 0 && !k1.empty()) {
      std::copy(k1.begin(), k1.end(), k_[0].begin());
      continue;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < s; ++j) acc += tab.a[s][j] * k_[j][i];
      stage_[i] = u[i] + dt * acc;
    }
    rhs(t + tab.c[s] * dt, stage_, k_[s]);
    for (double v : k_[s]) {
      if (!std::isfinite(v)) throw NumericalError("non-finite derivative in DP8 stage " + std::to_string(s + 1));
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t s = 0; s < ButcherTableau::kStages; ++s) acc += tab.b[s] * k_[s][i];
    u[i] += dt * acc;
  }
}

std::vector<double> dp8_step(const RhsFunction& rhs, double t, std::span<const double> u, double dt) {
  std::vector<double> out(u.begin(), u.end());
  Dp8Stepper stepper(out.size());
  stepper.step(rhs, t, out, dt);
  return out;
}

IntegrationResult integrate(const CellField& field0, const SchemeConfig& config, double t_end,
                            std::span<const double> snapshot_times) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InvalidArgument("integrate: t_end must be finite and >= 0");
  std::vector<double> requested(snapshot_times.begin(), snapshot_times.end());
  for (double ts : requested) {
    if (!(ts >= 0.0 && ts <= t_end)) throw InvalidArgument("integrate: snapshot time outside [0, t_end]");
  }
  std::sort(requested.begin(), requested.end());
  std::vector<double> events = requested;
  events.push_back(t_end);
  events.erase(std::unique(events.begin(), events.end()), events.end());

  Scheme scheme(config);
  const Grid1D grid = field0.grid();
  const double dx = grid.dx();
  const ScalarLaw& law = scheme.law();
  if (grid.n_cells < scheme.min_cells()) {
    throw InvalidArgument("integrate: " + std::to_string(grid.n_cells) + " cells, scheme needs at least " +
                          std::to_string(scheme.min_cells()));
  }

  IntegrationResult result;
  std::vector<double> u(field0.means().begin(), field0.means().end());
  std::size_t next_snapshot = 0;
  auto record_snapshots = [&](double t) {
    while (next_snapshot < requested.size() && requested[next_snapshot] <= t) {
      CellField field(grid, u);
      const double e = total_entropy(field, law);
      result.snapshots.push_back({requested[next_snapshot], std::move(field), e});
      ++next_snapshot;
    }
  };

  double t = 0.0;
  result.entropy_trace.push_back({t, total_entropy(u, dx, law)});
  record_snapshots(t);

  const RhsFunction rhs = [&scheme, dx](double, std::span<const double> state, std::span<double> dudt) {
    scheme.rhs(state, dx, dudt);
  };
  Dp8Stepper stepper(u.size());
  std::vector<double> k1(u.size());
  std::size_t event = 0;
  while (event < events.size() && events[event] <= t) ++event;
  while (event < events.size()) {
    const double target = events[event];
    const double gap = target - t;
    double dt = 0.0;
    bool lands = false;
    try {
      scheme.rhs(u, dx, k1);
      const double dt_max = std::min(cfl_dt(u, law, config.cfl, dx), viscous_dt(scheme.max_viscosity(), dx));
      lands = dt_max >= gap;
      dt = lands ? gap : dt_max;
      stepper.step(rhs, t, u, dt, k1);
    } catch (const NumericalError& e) {
      std::ostringstream msg;
      msg << "state became non-finite in the step starting at t=" << t << ": " << e.what();
      throw NumericalError(msg.str());
    }
    t = lands ? target : t + dt;
    ++result.steps;
    result.entropy_trace.push_back({t, total_entropy(u, dx, law)});
    if (lands) {
      record_snapshots(t);
      ++event;
    }
  }
  result.final_field = CellField(grid, std::move(u));
  return result;
}

}  // namespace ratefv
