#include "ratefv/recon.hpp"

#include <cassert>
#include <cmath>
#include <utility>

#include "ratefv/error.hpp"

namespace ratefv {

namespace {

// Solves A x = rhs in place by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    assert(a[pivot][col] != 0.0 && "singular mean-value system");
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double sum = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a[i][j] * x[j];
    x[i] = sum / a[i][i];
  }
  return x;
}

}  // namespace

std::vector<double> stencil_coefficients(int p, int shift) {
  if (p < 0) throw InvalidArgument("stencil_coefficients: negative order");
  if (shift < 0 || shift > p + 1) throw InvalidArgument("stencil_coefficients: shift out of range");
  const int r = p + 1;
  const auto n = static_cast<std::size_t>(r);
  // Unit cells, interface at x = 0: cell with offset i spans [i-1, i].
  // Column q of the transposed system is the mean of x^q over every cell.
  std::vector<std::vector<double>> mt(n, std::vector<double>(n));
  for (std::size_t cell = 0; cell < n; ++cell) {
    const double right = static_cast<double>(1 - r + shift + static_cast<int>(cell));
    const double left = right - 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      const auto e = static_cast<double>(q + 1);
      mt[q][cell] = (std::pow(right, e) - std::pow(left, e)) / e;
    }
  }
  std::vector<double> e0(n, 0.0);
  e0[0] = 1.0;
  return solve_dense(std::move(mt), std::move(e0));
}

StencilTable::StencilTable(int p) : p_(p) {
  if (p < 0) throw InvalidArgument("StencilTable: negative order");
  for (int shift = 0; shift <= p + 1; ++shift) rows_.push_back(stencil_coefficients(p, shift));
}

double StencilTable::operator_norm() const {
  double norm = 0.0;
  for (const auto& row : rows_) {
    double sum = 0.0;
    for (double c : row) sum += std::abs(c);
    norm = std::max(norm, sum);
  }
  return norm;
}

void StencilTable::recover(std::span<const double> window, std::span<double> out) const {
  if (window.size() != window_width()) throw InvalidArgument("StencilTable::recover: window has wrong width");
  if (out.size() != candidate_count()) throw InvalidArgument("StencilTable::recover: output has wrong size");
  const std::size_t r = stencil_width();
  for (std::size_t shift = 0; shift < rows_.size(); ++shift) {
    const double* row = rows_[shift].data();
    const double* w = window.data() + shift;
    double sum = 0.0;
    for (std::size_t i = 0; i < r; ++i) sum += row[i] * w[i];
    out[shift] = sum;
  }
}

RecoverySet StencilTable::recover(std::span<const double> window) const {
  RecoverySet set;
  set.candidates.resize(candidate_count());
  recover(window, set.candidates);
  return set;
}

RecoverySet recover_interface_values(std::span<const double> extended_means, const StencilTable& table,
                                     std::ptrdiff_t k, std::size_t ghost_width) {
  const auto r = static_cast<std::ptrdiff_t>(table.stencil_width());
  const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(ghost_width) + k + 1 - r;
  const std::ptrdiff_t last = first + 2 * r;  // one past
  if (first < 0 || last > static_cast<std::ptrdiff_t>(extended_means.size())) {
    throw InvalidArgument("recover_interface_values: stencil window leaves the extended field");
  }
  RecoverySet set = table.recover(extended_means.subspan(static_cast<std::size_t>(first), table.window_width()));
  set.interface_index = k;
  return set;
}

}  // namespace ratefv
