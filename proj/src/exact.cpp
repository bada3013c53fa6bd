#include "ratefv/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ratefv/error.hpp"

namespace ratefv {

double shock_time(const SmoothInitialData& data, const ScalarLaw& law, double x_left, double x_right,
                  std::size_t samples) {
  double steepest = 0.0;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double x = x_left + (x_right - x_left) * static_cast<double>(i) / static_cast<double>(samples);
    const double rate = -data.du0(x) * law.wave_speed_derivative(data.u0(x));
    steepest = std::max(steepest, rate);
  }
  return steepest > 0.0 ? 1.0 / steepest : std::numeric_limits<double>::infinity();
}

double backtrack_value(const SmoothInitialData& data, double x, double t, const ScalarLaw& law, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("backtrack_value: tol must be positive");
  auto residual = [&](double u) { return u - data.u0(x - law.wave_speed(u) * t); };

  double u = data.u0(x);
  if (t == 0.0) return u;
  for (int iter = 0; iter < 100; ++iter) {
    const double g = residual(u);
    if (std::abs(g) < tol) return u;
    const double xi = x - law.wave_speed(u) * t;
    const double dg = 1.0 + data.du0(xi) * law.wave_speed_derivative(u) * t;
    if (!(std::abs(dg) > 1e-300) || !std::isfinite(dg)) break;
    const double next = u - g / dg;
    if (!std::isfinite(next)) break;
    u = next;
  }

  // Newton stalled: bracket a sign change around the starting value and bisect.
  double lo = data.u0(x);
  double hi = lo;
  double step = 1e-3 * std::max(1.0, std::abs(lo));
  double g_lo = residual(lo);
  double g_hi = g_lo;
  for (int expand = 0; expand < 60 && g_lo * g_hi > 0.0; ++expand) {
    lo -= step;
    hi += step;
    step *= 2.0;
    g_lo = residual(lo);
    g_hi = residual(hi);
  }
  if (g_lo * g_hi > 0.0) throw NumericalError("backtrack_value: no root bracketed (evaluation past shock time?)");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g = residual(mid);
    if (std::abs(g) < tol) return mid;
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid))) return mid;
  }
  throw NumericalError("backtrack_value: characteristic equation did not converge");
}

double riemann_rarefaction_burgers(double u_l, double u_r, double x, double t, double x0) {
  if (!(u_l < u_r)) throw InvalidArgument("riemann_rarefaction_burgers: needs u_l < u_r");
  if (!(t > 0.0)) throw InvalidArgument("riemann_rarefaction_burgers: needs t > 0");
  const double xi = (x - x0) / t;
  if (xi <= u_l) return u_l;
  if (xi >= u_r) return u_r;
  return xi;
}

CellField exact_cell_means(const ScalarFunction& exact, const Grid1D& grid, std::size_t quad_nodes,
                           std::span<const double> kinks) {
  const GaussLegendre rule = gauss_legendre(quad_nodes);
  std::vector<double> means(grid.n_cells);
  for (std::size_t k = 0; k < grid.n_cells; ++k) {
    means[k] = cell_average(exact, grid.cell_left(k), grid.cell_right(k), rule, kinks);
  }
  return {grid, std::move(means)};
}

ErrorNorm parse_norm(std::string_view text) {
  if (text == "L1" || text == "l1") return ErrorNorm::l1;
  if (text == "Linf" || text == "linf") return ErrorNorm::linf;
  throw InvalidArgument("unknown norm '" + std::string(text) + "'");
}

double field_error(const CellField& numeric, const CellField& reference, ErrorNorm norm) {
  if (!(numeric.grid() == reference.grid())) throw InvalidArgument("field_error: grids differ");
  double acc = 0.0;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double diff = std::abs(numeric[k] - reference[k]);
    acc = norm == ErrorNorm::l1 ? acc + diff : std::max(acc, diff);
  }
  return norm == ErrorNorm::l1 ? acc * numeric.grid().dx() : acc;
}

}  // namespace ratefv
