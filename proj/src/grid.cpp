#include "ratefv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <utility>

#include "ratefv/error.hpp"
#include "ratefv/harness.hpp"

namespace ratefv {

Grid1D::Grid1D(double left, double right, std::size_t n) : x_left(left), x_right(right), n_cells(n) {
  if (n == 0) throw InvalidArgument("grid needs at least one cell");
  if (!(right > left)) throw InvalidArgument("grid needs x_right > x_left");
}

BoundaryCondition parse_boundary(std::string_view text) {
  if (text == "periodic") return {BoundaryKind::periodic};
  if (text == "outflow") return {BoundaryKind::outflow};
  throw InvalidArgument("unknown boundary condition '" + std::string(text) + "'");
}

std::string to_string(BoundaryCondition bc) { return bc.kind == BoundaryKind::periodic ? "periodic" : "outflow"; }

CellField::CellField(Grid1D grid, std::vector<double> means) : grid_(grid), means_(std::move(means)) {
  if (means_.size() != grid_.n_cells) throw InvalidArgument("cell field size does not match grid");
  for (double v : means_) {
    if (!std::isfinite(v)) throw NumericalError("cell field holds a non-finite mean");
  }
}

GaussLegendre gauss_legendre(std::size_t n_nodes) {
  if (n_nodes == 0) throw InvalidArgument("gauss_legendre: need at least one node");
  GaussLegendre rule;
  rule.nodes.assign(n_nodes, 0.0);
  rule.weights.assign(n_nodes, 0.0);
  const auto n = static_cast<double>(n_nodes);
  // Legendre P_n and its derivative at x by the three-term recurrence.
  auto legendre = [n_nodes, n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n_nodes; ++k) {
      const auto kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    if (n_nodes == 1) return std::pair{x, 1.0};
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  for (std::size_t i = 0; i < (n_nodes + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    if (2 * i + 1 == n_nodes) x = 0.0;
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n_nodes - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n_nodes - 1 - i] = w;
  }
  return rule;
}

namespace {

double integrate_piece(const std::function<double(double)>& u, double a, double b, const GaussLegendre& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * u(mid + half * rule.nodes[i]);
  return sum * half;
}

}  // namespace

double cell_average(const std::function<double(double)>& u, double a, double b, const GaussLegendre& rule,
                    std::span<const double> breaks) {
  std::vector<double> cuts{a};
  for (double x : breaks) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.push_back(b);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sum += integrate_piece(u, cuts[i], cuts[i + 1], rule);
  return sum / (b - a);
}

CellField project_initial_condition(const std::function<double(double)>& u0, const Grid1D& grid,
                                    std::size_t quad_nodes, std::span<const double> breaks) {
  if (quad_nodes < 5) throw InvalidArgument("project_initial_condition: need at least 5 quadrature nodes");
  const GaussLegendre rule = gauss_legendre(quad_nodes);
  std::vector<double> means(grid.n_cells);
  for (std::size_t k = 0; k < grid.n_cells; ++k) {
    means[k] = cell_average(u0, grid.cell_left(k), grid.cell_right(k), rule, breaks);
  }
  return {grid, std::move(means)};
}

std::vector<double> ghost_extend(std::span<const double> means, BoundaryCondition bc, std::size_t width) {
  const std::size_t n = means.size();
  if (width == 0) throw InvalidArgument("ghost_extend: width must be positive");
  if (n == 0) throw InvalidArgument("ghost_extend: empty field");
  if (bc.kind == BoundaryKind::periodic && width > n) {
    throw InvalidArgument("ghost_extend: periodic ghost width exceeds cell count");
  }
  std::vector<double> ext(n + 2 * width);
  std::copy(means.begin(), means.end(), ext.begin() + static_cast<std::ptrdiff_t>(width));
  for (std::size_t g = 0; g < width; ++g) {
    if (bc.kind == BoundaryKind::periodic) {
      ext[g] = means[n - width + g];
      ext[width + n + g] = means[g];
    } else {
      ext[g] = means.front();
      ext[width + n + g] = means.back();
    }
  }
  return ext;
}

std::vector<double> ghost_extend(const CellField& field, BoundaryCondition bc, std::size_t width) {
  return ghost_extend(field.means(), bc, width);
}

double total_entropy(std::span<const double> means, double dx, const ScalarLaw& law) {
  double sum = 0.0;
  for (double u : means) sum += law.entropy(u);
  return sum * dx;
}

double total_entropy(const CellField& field, const ScalarLaw& law) {
  return total_entropy(field.means(), field.grid().dx(), law);
}

double total_variation(std::span<const double> means, BoundaryCondition bc) {
  double tv = 0.0;
  for (std::size_t k = 0; k + 1 < means.size(); ++k) tv += std::abs(means[k + 1] - means[k]);
  if (bc.kind == BoundaryKind::periodic && means.size() > 1) tv += std::abs(means.front() - means.back());
  return tv;
}

double total_variation(const CellField& field, BoundaryCondition bc) { return total_variation(field.means(), bc); }

double total_mass(const CellField& field) {
  double sum = 0.0;
  for (double u : field.means()) sum += u;
  return sum * field.grid().dx();
}

void write_csv(std::ostream& os, const CellField& field) {
  os << "x,u\n";
  for (std::size_t k = 0; k < field.size(); ++k) {
    os << format_double(field.grid().cell_center(k)) << ',' << format_double(field[k]) << '\n';
  }
}

void write_csv(const std::string& path, const CellField& field) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_csv(os, field);
  if (!os) throw IoError("failed writing '" + path + "'");
}

}  // namespace ratefv
