#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "ratefv/error.hpp"
#include "ratefv/flux.hpp"

using namespace ratefv;

namespace {

// Self-similar Burgers Riemann solution sampled at x/t = 0.
double riemann_state_at_origin(double ul, double ur) {
  if (ul <= ur) {
    if (ul >= 0.0) return ul;
    if (ur <= 0.0) return ur;
    return 0.0;
  }
  return 0.5 * (ul + ur) > 0.0 ? ul : ur;
}

AdmissibleInterval random_interval(testing::Gen& gen) {
  return AdmissibleInterval::from_center_radius(gen.uniform(-2.0, 2.0), gen.uniform(0.0, 1.5));
}

}  // namespace

TEST_CASE("flux names") {
  for (FluxKind k : {FluxKind::mlf, FluxKind::dafermos, FluxKind::godunov, FluxKind::llf}) {
    CHECK(parse_flux_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_flux_kind("roe"), InvalidArgument);
}

TEST_CASE("closed-form Dafermos flux for Burgers") {
  const auto adm = AdmissibleInterval::from_center_radius(0.25, 0.75);
  CHECK(dafermos_flux_burgers(adm, 0.0, 1.0) == 0.0);
  CHECK(dafermos_flux_burgers(adm, 1.0, 0.0) == 0.5);
  const auto point = AdmissibleInterval::from_center_radius(0.6, 0.0);
  CHECK(dafermos_flux_burgers(point, -1.0, 2.0) == doctest::Approx(0.18));
  CHECK(dafermos_flux_burgers(point, 2.0, -1.0) == doctest::Approx(0.18));
  CHECK(dafermos_flux_burgers(adm, 0.3, 0.3) == doctest::Approx(0.5 * 0.25 * 0.25));
}

TEST_CASE("Dafermos search oracle") {
  Burgers law;
  const auto adm = AdmissibleInterval::from_center_radius(0.0, 1.0);
  CHECK(dafermos_flux_search(law, adm, -1.0, 1.0, 201) == 0.0);
  CHECK(dafermos_flux_search(law, adm, 1.0, -1.0, 201) == 0.5);
  // Zero objective: the first sample, the left end, wins.
  CHECK(dafermos_flux_search(law, adm, 0.4, 0.4, 201) == 0.5);
  CHECK_THROWS_AS(dafermos_flux_search(law, adm, 0.0, 1.0, 1), InvalidArgument);
}

TEST_CASE("MLF flux") {
  Burgers law;
  const auto adm = AdmissibleInterval::from_center_radius(0.5, 0.5);
  CHECK(mlf_flux(law, adm, 1.0, 0.0) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(mlf_flux(law, adm, 0.0, 1.0) == doctest::Approx(0.125 - 0.5).epsilon(1e-15));
  CHECK(mlf_flux(law, adm, 0.3, 0.3) == 0.125);
  CHECK(mlf_flux(law, AdmissibleInterval::from_center_radius(0.5, 0.0), 1.0, 0.0) == 0.125);
  CHECK_THROWS_AS(mlf_flux(law, adm, 1.0, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("first-order baselines") {
  Burgers law;
  CHECK(godunov_flux(law, 1.0, -1.0) == 0.5);
  CHECK(godunov_flux(law, -1.0, 1.0) == 0.0);
  CHECK(godunov_flux(law, 0.7, 0.7) == doctest::Approx(0.245));
  // (f(u_l) + f(u_r))/2 + c_b (u_l - u_r)/2 with c_b = 1 in both cases.
  CHECK(llf_flux(law, 1.0, -1.0) == 1.5);
  CHECK(llf_flux(law, 0.0, 1.0) == -0.25);
  CHECK(llf_flux(law, 0.7, 0.7) == doctest::Approx(0.245));
}

TEST_CASE("dissipation rate") {
  CHECK(dissipation_rate(3.0, 0.2, 0.2) == 0.0);
  CHECK(dissipation_rate(0.5, 0.0, 1.0) == 0.5);
  CHECK(dissipation_rate(-0.5, 0.0, 1.0) == -0.5);
}

TEST_CASE("property: consistency of every flux") {
  Burgers law;
  testing::Gen gen(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const double c = gen.uniform(-3.0, 3.0);
    const auto point = AdmissibleInterval::from_center_radius(c, 0.0);
    const double f = law.flux(c);
    REQUIRE(dafermos_flux_burgers(point, c, c) == f);
    REQUIRE(dafermos_flux(law, point, c, c) == f);
    REQUIRE(mlf_flux(law, point, c, c) == f);
    REQUIRE(godunov_flux(law, c, c) == f);
    REQUIRE(llf_flux(law, c, c) == f);
  }
}

TEST_CASE("property: Godunov flux is the Riemann flux at the interface") {
  Burgers law;
  testing::Gen gen(52);
  for (int trial = 0; trial < 10000; ++trial) {
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    REQUIRE(godunov_flux(law, ul, ur) == law.flux(riemann_state_at_origin(ul, ur)));
  }
}

TEST_CASE("property: Godunov flux is the Dafermos flux over the hull") {
  Burgers law;
  testing::Gen gen(53);
  for (int trial = 0; trial < 10000; ++trial) {
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    REQUIRE(godunov_flux(law, ul, ur) == dafermos_flux_burgers(AdmissibleInterval::hull(ul, ur), ul, ur));
  }
}

TEST_CASE("property: generic Dafermos flux equals the Burgers closed form") {
  Burgers law;
  testing::Gen gen(54);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto adm = random_interval(gen);
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    REQUIRE(dafermos_flux(law, adm, ul, ur) == dafermos_flux_burgers(adm, ul, ur));
  }
}

TEST_CASE("property: search oracle agrees with the closed form within one sample spacing") {
  Burgers law;
  testing::Gen gen(55);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto adm = random_interval(gen);
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    if (ul == ur) continue;
    const double lipschitz = law.max_wave_speed(adm.lo(), adm.hi());
    const double width = adm.hi() - adm.lo();
    const double diff = std::abs(dafermos_flux_search(law, adm, ul, ur, 201) - dafermos_flux_burgers(adm, ul, ur));
    REQUIRE(diff <= lipschitz * width / 200.0 + 1e-15);
  }
}

TEST_CASE("property: MLF dissipates at least as much entropy as Dafermos") {
  Burgers law;
  testing::Gen gen(56);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto adm = random_interval(gen);
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    const double wl = law.entropy_vars(ul);
    const double wr = law.entropy_vars(ur);
    REQUIRE(dissipation_rate(mlf_flux(law, adm, ul, ur), wl, wr) <=
            dissipation_rate(dafermos_flux_burgers(adm, ul, ur), wl, wr) + 1e-12);
  }
}

TEST_CASE("property: Godunov and LLF are monotone") {
  Burgers law;
  testing::Gen gen(57);
  const double h = 1e-3;
  for (int trial = 0; trial < 5000; ++trial) {
    const double ul = gen.uniform(-2.0, 2.0);
    const double ur = gen.uniform(-2.0, 2.0);
    for (auto flux : {&godunov_flux, &llf_flux}) {
      REQUIRE(flux(law, ul + h, ur) >= flux(law, ul, ur) - 1e-15);
      REQUIRE(flux(law, ul, ur + h) <= flux(law, ul, ur) + 1e-15);
    }
  }
}
