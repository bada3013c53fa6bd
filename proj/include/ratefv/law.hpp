#pragma once

#include <memory>
#include <string>

namespace ratefv {

/// A scalar conservation law u_t + f(u)_x = 0 together with a convex entropy U.
///
/// Downstream kernels only talk to this interface. The interval queries
/// (max_wave_speed, flux_argmin, flux_argmax) are part of the interface because
/// every flux in the library needs them and most laws have closed forms.
class ScalarLaw {
 public:
  virtual ~ScalarLaw() = default;

  virtual std::string name() const = 0;

  virtual double flux(double u) const = 0;
  /// f'(u)
  virtual double wave_speed(double u) const = 0;
  /// f''(u), used by characteristic backtracking.
  virtual double wave_speed_derivative(double u) const = 0;
  virtual double entropy(double u) const = 0;
  /// Entropy variables W(u) = U'(u). Nondecreasing since U is convex.
  virtual double entropy_vars(double u) const = 0;

  /// max |f'(u)| over [lo, hi]. Throws InvalidArgument if lo > hi.
  virtual double max_wave_speed(double lo, double hi) const = 0;
  /// A minimizer of f over [lo, hi].
  virtual double flux_argmin(double lo, double hi) const = 0;
  /// A maximizer of f over [lo, hi].
  virtual double flux_argmax(double lo, double hi) const = 0;
};

/// Inviscid Burgers: f(u) = u^2/2 with the quadratic entropy U(u) = u^2/2.
class Burgers final : public ScalarLaw {
 public:
  std::string name() const override { return "burgers"; }

  double flux(double u) const override { return 0.5 * u * u; }
  double wave_speed(double u) const override { return u; }
  double wave_speed_derivative(double) const override { return 1.0; }
  double entropy(double u) const override { return 0.5 * u * u; }
  double entropy_vars(double u) const override { return u; }

  double max_wave_speed(double lo, double hi) const override;
  // Sonic point u = 0 is the unconstrained minimizer.
  double flux_argmin(double lo, double hi) const override;
  // Largest |u| endpoint.
  double flux_argmax(double lo, double hi) const override;
};

std::shared_ptr<const ScalarLaw> make_law(const std::string& name);

}  // namespace ratefv
