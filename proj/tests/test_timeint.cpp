#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "ratefv/error.hpp"
#include "ratefv/timeint.hpp"

using namespace ratefv;

namespace {

const BoundaryCondition kPeriodic{BoundaryKind::periodic};
const BoundaryCondition kOutflow{BoundaryKind::outflow};

SchemeConfig config_with(FluxKind flux, BoundaryCondition bc, bool redistribute = true) {
  SchemeConfig c;
  c.flux = flux;
  c.bc = bc;
  c.redistribute = redistribute;
  return c;
}

CellField sine_field(std::size_t n) {
  return project_initial_condition([](double x) { return std::sin(std::numbers::pi * x); }, Grid1D(0.0, 2.0, n));
}

double solve_cubic_ode(double t_end, int steps) {
  const RhsFunction rhs = [](double t, std::span<const double> u, std::span<double> d) {
    d[0] = -u[0] * u[0] * u[0] + std::sin(t);
  };
  std::vector<double> u{1.0};
  Dp8Stepper stepper(1);
  const double dt = t_end / steps;
  for (int i = 0; i < steps; ++i) stepper.step(rhs, i * dt, u, dt);
  return u[0];
}

}  // namespace

TEST_CASE("scheme configuration checks") {
  SchemeConfig c;
  CHECK_NOTHROW(c.validate());
  c.cfl = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SchemeConfig{};
  c.order = -1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SchemeConfig{};
  c.predictor = {PredictorType::surface_discard, 5};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.predictor = {PredictorType::surface_discard, 4};
  CHECK_NOTHROW(c.validate());
  c = SchemeConfig{};
  c.visc_width = 10;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.redistribute = false;
  CHECK_NOTHROW(c.validate());
  CHECK(config_with(FluxKind::godunov, kPeriodic).first_order());
  CHECK_FALSE(config_with(FluxKind::dafermos, kPeriodic).first_order());
}

TEST_CASE("constant states are steady for every scheme") {
  for (FluxKind flux : {FluxKind::mlf, FluxKind::dafermos, FluxKind::godunov, FluxKind::llf}) {
    for (BoundaryCondition bc : {kPeriodic, kOutflow}) {
      Scheme scheme(config_with(flux, bc));
      std::vector<double> u(24, -0.35), d(24, 1.0);
      scheme.rhs(u, 0.1, d);
      for (double v : d) CHECK(v == 0.0);
    }
  }
}

TEST_CASE("Godunov right-hand side on two periodic cells") {
  Scheme scheme(config_with(FluxKind::godunov, kPeriodic));
  const std::vector<double> u{1.0, -1.0};
  std::vector<double> d(2);
  scheme.rhs(u, 0.5, d);
  // Interface 1 is a stationary shock (flux 0.5); the wrap-around interface
  // sees -1 | 1, a rarefaction through the sonic point (flux 0).
  CHECK(scheme.interface_fluxes()[0] == 0.0);
  CHECK(scheme.interface_fluxes()[1] == 0.5);
  CHECK(scheme.interface_fluxes()[2] == 0.0);
  CHECK(d == std::vector<double>{-1.0, 1.0});
}

TEST_CASE("right-hand side guards") {
  Scheme scheme(SchemeConfig{});
  std::vector<double> u(9, 0.0), d(9);
  CHECK_THROWS_AS(scheme.rhs(u, 0.1, d), InvalidArgument);
  u.resize(12, 0.0);
  d.resize(12);
  u[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(scheme.rhs(u, 0.1, d), NumericalError);
  std::vector<double> wrong(5);
  CHECK_THROWS_AS(scheme.rhs(std::vector<double>(12, 0.0), 0.1, wrong), InvalidArgument);
}

TEST_CASE("property: periodic right-hand sides conserve mass") {
  testing::Gen gen(71);
  for (FluxKind flux : {FluxKind::mlf, FluxKind::dafermos, FluxKind::godunov, FluxKind::llf}) {
    Scheme scheme(config_with(flux, kPeriodic));
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(10, 60));
      const auto a = gen.vec(4, -0.5, 0.5);
      const auto phase = gen.vec(4, 0.0, 2.0 * std::numbers::pi);
      std::vector<double> u(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        for (std::size_t m = 0; m < 4; ++m) u[k] += a[m] * std::sin(static_cast<double>(m + 1) * x + phase[m]);
      }
      std::vector<double> d(u.size());
      const double dx = 2.0 / static_cast<double>(u.size());
      scheme.rhs(u, dx, d);
      double sum = 0.0;
      for (double v : d) sum += v * dx;
      REQUIRE(std::abs(sum) < 1e-13);
    }
  }
}

TEST_CASE("property: unredistributed MLF fluxes match a per-interface assembly") {
  Burgers law;
  testing::Gen gen(72);
  for (BoundaryCondition bc : {kPeriodic, kOutflow}) {
    SchemeConfig cfg = config_with(FluxKind::mlf, bc, false);
    Scheme scheme(cfg);
    const StencilTable table(cfg.order);
    const std::size_t r = table.stencil_width();
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = gen.vec(20, -1.0, 1.0);
      std::vector<double> d(u.size());
      scheme.rhs(u, 0.1, d);
      const auto ext = ghost_extend(u, bc, r);
      const std::size_t m = bc == kPeriodic ? u.size() : u.size() + 1;
      std::vector<double> scratch(table.candidate_count());
      for (std::size_t j = 0; j < m; ++j) {
        // Interface j is k + 1/2 with k = j - 1.
        const auto set = recover_interface_values(ext, table, static_cast<std::ptrdiff_t>(j) - 1, r);
        const auto adm = predict(cfg.predictor, set.candidates, scratch);
        const double expected = mlf_flux(law, adm, ext[r + j - 1], ext[r + j]);
        REQUIRE(scheme.interface_fluxes()[j] == expected);
      }
    }
  }
}

TEST_CASE("viscosity report") {
  Scheme mlf(SchemeConfig{});
  Scheme godunov(config_with(FluxKind::godunov, kPeriodic));
  const CellField u = sine_field(40);
  std::vector<double> d(40);
  mlf.rhs(u.means(), u.grid().dx(), d);
  godunov.rhs(u.means(), u.grid().dx(), d);
  CHECK(mlf.max_viscosity() > 0.0);
  CHECK(godunov.max_viscosity() == 0.0);
}

TEST_CASE("step size limits") {
  Burgers law;
  const std::vector<double> u{0.5, -1.0, 0.25};
  CHECK(cfl_dt(u, law, 0.1, 0.04) == doctest::Approx(0.004).epsilon(1e-15));
  CHECK(cfl_dt(u, law, 0.2, 0.04) == doctest::Approx(2.0 * cfl_dt(u, law, 0.1, 0.04)).epsilon(1e-15));
  const std::vector<double> zero(4, 0.0);
  CHECK(cfl_dt(zero, law, 0.1, 0.04) == doctest::Approx(0.1 * 0.04 / kSpeedFloor));
  CHECK(viscous_dt(0.0, 0.1) == std::numeric_limits<double>::infinity());
  CHECK(viscous_dt(4.0, 0.1) == doctest::Approx(kViscousNumber * 0.1 / 4.0));
}

TEST_CASE("DP8 tableau consistency") {
  const ButcherTableau& t = dp8_tableau();
  double bsum = 0.0;
  for (std::size_t s = 0; s < ButcherTableau::kStages; ++s) {
    bsum += t.b[s];
    double row = 0.0;
    for (std::size_t j = 0; j < s; ++j) row += t.a[s][j];
    CHECK(row == doctest::Approx(t.c[s]).epsilon(1e-14));
  }
  CHECK(bsum == doctest::Approx(1.0).epsilon(1e-15));
  // Quadrature conditions of order up to 8.
  for (int q = 1; q <= 8; ++q) {
    double sum = 0.0;
    for (std::size_t s = 0; s < ButcherTableau::kStages; ++s) sum += t.b[s] * std::pow(t.c[s], q - 1);
    CHECK(sum == doctest::Approx(1.0 / q).epsilon(1e-13));
  }
}

TEST_CASE("DP8 steps") {
  const RhsFunction zero = [](double, std::span<const double>, std::span<double> d) {
    for (double& v : d) v = 0.0;
  };
  CHECK(dp8_step(zero, 0.0, std::vector<double>{1.5, -2.0}, 0.3) == std::vector<double>{1.5, -2.0});

  const RhsFunction growth = [](double, std::span<const double> u, std::span<double> d) { d[0] = u[0]; };
  CHECK(std::abs(dp8_step(growth, 0.0, std::vector<double>{1.0}, 0.1)[0] - std::exp(0.1)) < 1e-13);

  const RhsFunction linear = [](double, std::span<const double> u, std::span<double> d) {
    d[0] = -2.0 * u[0] + u[1];
    d[1] = 0.5 * u[0] - u[1];
  };
  const auto a = dp8_step(linear, 0.0, std::vector<double>{1.0, 2.0}, 0.2);
  const auto b = dp8_step(linear, 0.0, std::vector<double>{3.0, 6.0}, 0.2);
  CHECK(b[0] == doctest::Approx(3.0 * a[0]).epsilon(1e-15));
  CHECK(b[1] == doctest::Approx(3.0 * a[1]).epsilon(1e-15));

  const RhsFunction blowup = [](double, std::span<const double>, std::span<double> d) {
    d[0] = std::numeric_limits<double>::infinity();
  };
  CHECK_THROWS_AS(dp8_step(blowup, 0.0, std::vector<double>{1.0}, 0.1), NumericalError);
  CHECK_THROWS_AS(dp8_step(growth, 0.0, std::vector<double>{1.0}, 0.0), InvalidArgument);
}

TEST_CASE("DP8 reuses a supplied first stage") {
  const RhsFunction growth = [](double, std::span<const double> u, std::span<double> d) { d[0] = u[0]; };
  Dp8Stepper stepper(1);
  std::vector<double> u{1.0}, v{1.0};
  const std::vector<double> k1{1.0};
  stepper.step(growth, 0.0, u, 0.1);
  stepper.step(growth, 0.0, v, 0.1, k1);
  CHECK(u == v);
}

TEST_CASE("DP8 is eighth order on a nonlinear scalar equation") {
  const double reference = solve_cubic_ode(1.0, 256);
  const double e1 = std::abs(solve_cubic_ode(1.0, 4) - reference);
  const double e2 = std::abs(solve_cubic_ode(1.0, 8) - reference);
  const double order = std::log2(e1 / e2);
  CHECK(order > 7.5);
  CHECK(order < 8.5);
}

TEST_CASE("integration basics") {
  const CellField u0 = sine_field(40);
  SUBCASE("zero end time") {
    const auto r = integrate(u0, SchemeConfig{}, 0.0, std::vector<double>{0.0});
    CHECK(r.steps == 0);
    CHECK(r.final_field.means()[7] == u0.means()[7]);
    REQUIRE(r.snapshots.size() == 1);
    CHECK(r.snapshots[0].t == 0.0);
  }
  SUBCASE("snapshots land exactly and the trace covers every step") {
    const std::vector<double> times{0.05, 0.2, 0.1};
    const auto r = integrate(u0, SchemeConfig{}, 0.2, times);
    REQUIRE(r.snapshots.size() == 3);
    CHECK(r.snapshots[0].t == 0.05);
    CHECK(r.snapshots[1].t == 0.1);
    CHECK(r.snapshots[2].t == 0.2);
    CHECK(r.entropy_trace.size() == r.steps + 1);
    CHECK(r.entropy_trace.back().t == 0.2);
    CHECK(r.snapshots[2].field.means()[3] == r.final_field.means()[3]);
  }
  SUBCASE("bad requests") {
    CHECK_THROWS_AS(integrate(u0, SchemeConfig{}, -1.0), InvalidArgument);
    CHECK_THROWS_AS(integrate(u0, SchemeConfig{}, 0.5, std::vector<double>{0.7}), InvalidArgument);
    CHECK_THROWS_AS(integrate(sine_field(8), SchemeConfig{}, 0.5), InvalidArgument);
  }
}

TEST_CASE("property: periodic integration conserves mass") {
  for (FluxKind flux : {FluxKind::mlf, FluxKind::godunov}) {
    const CellField u0 = sine_field(50);
    const auto r = integrate(u0, config_with(flux, kPeriodic), 0.8);
    CHECK(std::abs(total_mass(r.final_field) - total_mass(u0)) < 1e-12);
  }
}

TEST_CASE("production scheme does not create entropy through a shock") {
  const auto r = integrate(sine_field(50), SchemeConfig{}, 1.2);
  for (std::size_t i = 1; i < r.entropy_trace.size(); ++i) {
    const double prev = r.entropy_trace[i - 1].entropy;
    REQUIRE(r.entropy_trace[i].entropy <= prev + 1e-10 * std::abs(prev));
  }
}
