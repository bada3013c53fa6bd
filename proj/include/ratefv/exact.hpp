#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

#include "ratefv/grid.hpp"
#include "ratefv/law.hpp"

namespace ratefv {

using ScalarFunction = std::function<double(double)>;

/// Smooth initial data and its derivative, needed for characteristic tracing.
struct SmoothInitialData {
  ScalarFunction u0;
  ScalarFunction du0;
};

/// 1 / max(-u0' * f''(u0)) sampled over [x_left, x_right]; +inf if no
/// compressive region exists.
double shock_time(const SmoothInitialData& data, const ScalarLaw& law, double x_left, double x_right,
                  std::size_t samples = 4096);

inline constexpr double kBacktrackTol = 1e-14;

/// Solves u = u0(x - f'(u) t) by Newton, falling back to bisection when Newton
/// stalls. Throws NumericalError if neither converges (e.g. past the shock).
double backtrack_value(const SmoothInitialData& data, double x, double t, const ScalarLaw& law,
                       double tol = kBacktrackTol);

/// Entropy solution of the Burgers rarefaction Riemann problem, u_l < u_r,
/// centered at x0.
double riemann_rarefaction_burgers(double u_l, double u_r, double x, double t, double x0);

/// Gauss-Legendre cell means of `exact`, splitting cells at `kinks`.
CellField exact_cell_means(const ScalarFunction& exact, const Grid1D& grid, std::size_t quad_nodes = kDefaultQuadNodes,
                           std::span<const double> kinks = {});

enum class ErrorNorm { l1, linf };

ErrorNorm parse_norm(std::string_view text);

/// L1 = sum |diff| dx, Linf = max |diff|. Throws InvalidArgument if grids differ.
double field_error(const CellField& numeric, const CellField& reference, ErrorNorm norm);

}  // namespace ratefv
