#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ratefv/law.hpp"
#include "ratefv/radius.hpp"

namespace ratefv {

enum class FluxKind { mlf, dafermos, godunov, llf };

/// Accepts `mlf`, `dafermos`, `godunov`, `llf`.
FluxKind parse_flux_kind(std::string_view text);
std::string to_string(FluxKind kind);

/// Guard on |W(u_l) - W(u_r)| below which the MLF correction direction is undefined.
inline constexpr double kJumpEpsilon = 1e-12;

/// Closed-form entropy-rate optimal flux for Burgers' equation over U.
double dafermos_flux_burgers(const AdmissibleInterval& adm, double u_l, double u_r);

/// f(argmin_{u in U} (W(u_r) - W(u_l)) f(u)) for any law, through the law's
/// interval extremum queries. Coincides with dafermos_flux_burgers for Burgers.
double dafermos_flux(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r);

/// Brute-force version of the same optimization on n_samples uniform points of
/// U plus both ends and the center. The first minimizing sample wins.
double dafermos_flux_search(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r,
                            std::size_t n_samples);

/// f(u_c) + sign(W(u_l) - W(u_r)) * max_U |f'| * rad(U).
double mlf_flux(const ScalarLaw& law, const AdmissibleInterval& adm, double u_l, double u_r,
                double eps_jump = kJumpEpsilon);

double godunov_flux(const ScalarLaw& law, double u_l, double u_r);

/// Local Lax-Friedrichs with speed bound max |f'| over conv(u_l, u_r).
double llf_flux(const ScalarLaw& law, double u_l, double u_r);

/// Entropy production rate of an interface flux: (w_r - w_l) * flux.
inline double dissipation_rate(double flux, double w_l, double w_r) { return (w_r - w_l) * flux; }

}  // namespace ratefv
