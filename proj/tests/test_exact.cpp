#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "ratefv/error.hpp"
#include "ratefv/exact.hpp"

using namespace ratefv;

namespace {

using std::numbers::pi;

SmoothInitialData sine(double offset, double amplitude) {
  return {[=](double x) { return offset + amplitude * std::sin(pi * x); },
          [=](double x) { return amplitude * pi * std::cos(pi * x); }};
}

// Picard iteration on u = u0(x - u t); a contraction while t * max|u0'| < 1.
double picard(const SmoothInitialData& data, double x, double t) {
  double u = data.u0(x);
  for (int i = 0; i < 500; ++i) u = data.u0(x - u * t);
  return u;
}

}  // namespace

TEST_CASE("shock times of the sine data") {
  Burgers law;
  CHECK(shock_time(sine(0.0, 1.0), law, 0.0, 2.0) == doctest::Approx(1.0 / pi).epsilon(1e-9));
  CHECK(shock_time(sine(1.0, 0.02), law, 0.0, 2.0) == doctest::Approx(50.0 / pi).epsilon(1e-9));
  const SmoothInitialData flat{[](double) { return 0.4; }, [](double) { return 0.0; }};
  CHECK(std::isinf(shock_time(flat, law, 0.0, 1.0)));
}

TEST_CASE("characteristic backtracking") {
  Burgers law;
  const SmoothInitialData flat{[](double) { return 0.4; }, [](double) { return 0.0; }};
  CHECK(backtrack_value(flat, 0.3, 0.7, law) == 0.4);
  const SmoothInitialData u1 = sine(0.0, 1.0);
  CHECK(backtrack_value(u1, 0.37, 0.0, law) == u1.u0(0.37));

  const SmoothInitialData u3 = sine(1.0, 0.02);
  const double u = backtrack_value(u3, 0.5, 1.0, law);
  CHECK(std::abs(u - u3.u0(0.5 - u)) < 1e-14);
  CHECK(u == doctest::Approx(picard(u3, 0.5, 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(backtrack_value(u3, 0.5, 1.0, law, 0.0), InvalidArgument);
}

TEST_CASE("property: backtracked values satisfy the characteristic equation") {
  Burgers law;
  testing::Gen gen(81);
  const SmoothInitialData u1 = sine(0.0, 1.0);
  const SmoothInitialData u3 = sine(1.0, 0.02);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = gen.uniform(0.0, 2.0);
    const double t1 = gen.uniform(0.0, 0.95 / pi);
    const double v1 = backtrack_value(u1, x, t1, law);
    REQUIRE(std::abs(v1 - u1.u0(x - v1 * t1)) < 10.0 * kBacktrackTol);
    const double t3 = gen.uniform(0.0, 0.95 * 50.0 / pi);
    const double v3 = backtrack_value(u3, x, t3, law);
    REQUIRE(std::abs(v3 - u3.u0(x - v3 * t3)) < 10.0 * kBacktrackTol);
  }
}

TEST_CASE("property: backtracking is continuous at t = 0") {
  Burgers law;
  testing::Gen gen(82);
  const SmoothInitialData u1 = sine(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = gen.uniform(0.0, 2.0);
    for (double t : {1e-4, 1e-6, 1e-8}) REQUIRE(std::abs(backtrack_value(u1, x, t, law) - u1.u0(x)) <= 4.0 * t);
  }
}

TEST_CASE("Burgers rarefaction fan") {
  CHECK(riemann_rarefaction_burgers(-1.0, 1.0, 1.0, 0.3, 1.0) == 0.0);
  CHECK(riemann_rarefaction_burgers(-1.0, 1.0, 1.1, 0.2, 1.0) == doctest::Approx(0.5));
  CHECK(riemann_rarefaction_burgers(-1.0, 1.0, 1.4, 0.2, 1.0) == 1.0);
  CHECK(riemann_rarefaction_burgers(-1.0, 1.0, 0.6, 0.2, 1.0) == -1.0);
  CHECK_THROWS_AS(riemann_rarefaction_burgers(1.0, -1.0, 0.0, 0.1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(riemann_rarefaction_burgers(-1.0, 1.0, 0.0, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("exact cell means") {
  const Grid1D g(0.0, 2.0, 50);
  const CellField c = exact_cell_means([](double) { return 2.5; }, g);
  CHECK(c[17] == doctest::Approx(2.5).epsilon(1e-15));
  const CellField lin = exact_cell_means([](double x) { return 3.0 * x; }, g);
  CHECK(lin[10] == doctest::Approx(3.0 * g.cell_center(10)).epsilon(1e-14));
  const CellField s = exact_cell_means([](double x) { return std::sin(pi * x); }, g);
  for (std::size_t k = 0; k < g.n_cells; ++k) {
    const double a = g.cell_left(k);
    const double b = g.cell_right(k);
    REQUIRE(std::abs(s[k] - (std::cos(pi * a) - std::cos(pi * b)) / (pi * (b - a))) < 1e-12);
  }
  // The fan's corners split the cells that hold them.
  const double kinks[] = {0.8, 1.2};
  auto fan = [](double x) { return riemann_rarefaction_burgers(-1.0, 1.0, x, 0.2, 1.0); };
  const CellField f = exact_cell_means(fan, Grid1D(0.5, 1.5, 3), kDefaultQuadNodes, kinks);
  // Cell [0.5, 5/6]: -1 on [0.5, 0.8], then the ramp (x-1)/0.2.
  const double b = 0.5 + 1.0 / 3.0;
  const double ramp = ((b - 1.0) * (b - 1.0) - 0.04) / 0.4;
  CHECK(f[0] == doctest::Approx((-0.3 + ramp) / (1.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("error norms") {
  const Grid1D g(0.0, 1.0, 4);
  const CellField a(g, {0.5, -1.0, 2.0, 0.0});
  CHECK(field_error(a, a, ErrorNorm::l1) == 0.0);
  CHECK(field_error(a, a, ErrorNorm::linf) == 0.0);
  const CellField b(g, {0.5, -1.0, 2.3, 0.0});
  CHECK(field_error(b, a, ErrorNorm::l1) == doctest::Approx(0.3 * 0.25));
  const CellField neg(g, {-0.5, 1.0, -2.0, 0.0});
  CHECK(field_error(neg, a, ErrorNorm::linf) == 4.0);
  CHECK_THROWS_AS(field_error(a, CellField(Grid1D(0.0, 1.0, 3), {0, 0, 0}), ErrorNorm::l1), InvalidArgument);
  CHECK(parse_norm("L1") == ErrorNorm::l1);
  CHECK(parse_norm("linf") == ErrorNorm::linf);
  CHECK_THROWS_AS(parse_norm("L2"), InvalidArgument);
}
