#pragma once

#include <span>
#include <string>
#include <string_view>

namespace ratefv {

/// The set U = [center - radius, center + radius] of admissible interface values.
///
/// The bounds are stored alongside center and radius so that an interval built
/// from two states keeps those states bit-exactly as its end points.
class AdmissibleInterval {
 public:
  AdmissibleInterval() = default;

  static AdmissibleInterval from_center_radius(double center, double radius);
  static AdmissibleInterval from_bounds(double lo, double hi);
  /// conv(a, b), the hull of two states in either order.
  static AdmissibleInterval hull(double a, double b);

  double center() const { return center_; }
  double radius() const { return radius_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double center_ = 0.0;
  double radius_ = 0.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

enum class PredictorType { variance, bounding_sphere, surface_discard };

struct PredictorKind {
  PredictorType type = PredictorType::bounding_sphere;
  int discard = 0;  // surface_discard only

  friend bool operator==(const PredictorKind&, const PredictorKind&) = default;
};

/// Accepts `variance`, `bsphere` and `bsphere-discard:<k>`.
PredictorKind parse_predictor(std::string_view text);
std::string to_string(PredictorKind kind);

/// Weighted mean of the candidates with radius sqrt(sum (c - R_k)^2) / K.
AdmissibleInterval variance_predictor(std::span<const double> candidates, std::span<const double> weights);
/// Trivial weights w_k = 1.
AdmissibleInterval variance_predictor(std::span<const double> candidates);

/// Smallest enclosing interval of the candidates.
AdmissibleInterval bounding_sphere_predictor(std::span<const double> candidates);

/// Drops `k_discard` extreme candidates, each time the extreme farther from
/// the median of the survivors (ties drop the maximum), then encloses the rest.
/// Requires at least two survivors.
AdmissibleInterval surface_discard_predictor(std::span<const double> candidates, int k_discard);

/// Dispatch on `kind`. `scratch` must hold candidates.size() values for the
/// surface discard path; it may be empty otherwise.
AdmissibleInterval predict(PredictorKind kind, std::span<const double> candidates, std::span<double> scratch);

}  // namespace ratefv
