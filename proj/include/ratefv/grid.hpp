#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratefv/law.hpp"

namespace ratefv {

/// Uniform partition of [x_left, x_right] into n_cells cells.
struct Grid1D {
  double x_left = 0.0;
  double x_right = 1.0;
  std::size_t n_cells = 1;

  Grid1D() = default;
  Grid1D(double left, double right, std::size_t n);

  double dx() const { return (x_right - x_left) / static_cast<double>(n_cells); }
  double cell_left(std::size_t k) const { return x_left + static_cast<double>(k) * dx(); }
  double cell_right(std::size_t k) const { return x_left + static_cast<double>(k + 1) * dx(); }
  double cell_center(std::size_t k) const { return x_left + (static_cast<double>(k) + 0.5) * dx(); }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

enum class BoundaryKind { periodic, outflow };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::periodic;
  friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;
};

BoundaryCondition parse_boundary(std::string_view text);
std::string to_string(BoundaryCondition bc);

/// Cell averages on a grid. Every entry is finite.
class CellField {
 public:
  CellField() = default;
  CellField(Grid1D grid, std::vector<double> means);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> means() const { return means_; }
  std::size_t size() const { return means_.size(); }
  double operator[](std::size_t k) const { return means_[k]; }

 private:
  Grid1D grid_;
  std::vector<double> means_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(std::size_t n_nodes);

/// Average of `u` over [a, b] with an n-node Gauss-Legendre rule. Points in
/// `breaks` that fall strictly inside (a, b) split the interval first.
double cell_average(const std::function<double(double)>& u, double a, double b,
                    const GaussLegendre& rule, std::span<const double> breaks = {});

inline constexpr std::size_t kDefaultQuadNodes = 10;

CellField project_initial_condition(const std::function<double(double)>& u0, const Grid1D& grid,
                                    std::size_t quad_nodes = kDefaultQuadNodes,
                                    std::span<const double> breaks = {});

/// Means with `width` ghost cells prepended and appended.
std::vector<double> ghost_extend(std::span<const double> means, BoundaryCondition bc, std::size_t width);
std::vector<double> ghost_extend(const CellField& field, BoundaryCondition bc, std::size_t width);

/// Sum_k U(u_k) dx.
double total_entropy(const CellField& field, const ScalarLaw& law);
double total_entropy(std::span<const double> means, double dx, const ScalarLaw& law);

/// Sum of |u_{k+1} - u_k|, closing the loop for periodic data.
double total_variation(std::span<const double> means, BoundaryCondition bc);
double total_variation(const CellField& field, BoundaryCondition bc);

/// Sum_k u_k dx.
double total_mass(const CellField& field);

/// `x,u` header then one row per cell center, 17 significant digits.
void write_csv(std::ostream& os, const CellField& field);
void write_csv(const std::string& path, const CellField& field);

}  // namespace ratefv
