#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ratefv {

/// Linear weights turning the means of r = p+1 consecutive cells into the
/// point value of their mean-matching degree-p polynomial at x_{k+1/2}.
///
/// The stencil for `shift` covers cells k+1-r+shift ... k+shift, so shift 0 is
/// fully upwind of the interface and shift r fully downwind. The weights are
/// grid independent on uniform meshes.
std::vector<double> stencil_coefficients(int p, int shift);

/// The K = p+2 candidate point values at one interface.
struct RecoverySet {
  std::vector<double> candidates;
  std::ptrdiff_t interface_index = 0;
};

/// All shifted stencils of a given order, precomputed once.
class StencilTable {
 public:
  explicit StencilTable(int p);

  int order() const { return p_; }
  /// Cells per stencil.
  std::size_t stencil_width() const { return static_cast<std::size_t>(p_) + 1; }
  /// Number of candidates K.
  std::size_t candidate_count() const { return rows_.size(); }
  /// Cells touched by all stencils together, 2r.
  std::size_t window_width() const { return 2 * stencil_width(); }
  std::span<const double> row(std::size_t shift) const { return rows_[shift]; }
  /// Largest absolute row sum, the operator norm used by TV bounds.
  double operator_norm() const;

  /// `window` holds the means of cells k+1-r ... k+r. Writes K candidates to `out`.
  void recover(std::span<const double> window, std::span<double> out) const;
  RecoverySet recover(std::span<const double> window) const;

 private:
  int p_;
  std::vector<std::vector<double>> rows_;
};

/// Candidates at interface k+1/2 from extended means in which physical cell 0
/// sits at index `ghost_width`.
RecoverySet recover_interface_values(std::span<const double> extended_means, const StencilTable& table,
                                     std::ptrdiff_t k, std::size_t ghost_width);

}  // namespace ratefv
