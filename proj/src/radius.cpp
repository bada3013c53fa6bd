#include "ratefv/radius.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "ratefv/error.hpp"

namespace ratefv {

AdmissibleInterval AdmissibleInterval::from_center_radius(double center, double radius) {
  if (!(radius >= 0.0)) throw InvalidArgument("admissible interval needs a nonnegative radius");
  AdmissibleInterval adm;
  adm.center_ = center;
  adm.radius_ = radius;
  adm.lo_ = center - radius;
  adm.hi_ = center + radius;
  return adm;
}

AdmissibleInterval AdmissibleInterval::from_bounds(double lo, double hi) {
  if (!(lo <= hi)) throw InvalidArgument("admissible interval needs lo <= hi");
  AdmissibleInterval adm;
  adm.center_ = 0.5 * (lo + hi);
  adm.radius_ = 0.5 * (hi - lo);
  adm.lo_ = lo;
  adm.hi_ = hi;
  return adm;
}

AdmissibleInterval AdmissibleInterval::hull(double a, double b) {
  return a <= b ? from_bounds(a, b) : from_bounds(b, a);
}

PredictorKind parse_predictor(std::string_view text) {
  if (text == "variance") return {PredictorType::variance, 0};
  if (text == "bsphere") return {PredictorType::bounding_sphere, 0};
  constexpr std::string_view prefix = "bsphere-discard:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int k = -1;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 0) {
      return {PredictorType::surface_discard, k};
    }
  }
  throw InvalidArgument("unknown predictor '" + std::string(text) +
                        "' (expected variance, bsphere or bsphere-discard:<k>)");
}

std::string to_string(PredictorKind kind) {
  switch (kind.type) {
    case PredictorType::variance:
      return "variance";
    case PredictorType::bounding_sphere:
      return "bsphere";
    case PredictorType::surface_discard:
      return "bsphere-discard:" + std::to_string(kind.discard);
  }
  return "?";
}

AdmissibleInterval variance_predictor(std::span<const double> candidates, std::span<const double> weights) {
  if (candidates.empty()) throw InvalidArgument("variance_predictor: no candidates");
  if (weights.size() != candidates.size()) throw InvalidArgument("variance_predictor: weight count mismatch");
  double wsum = 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (weights[k] < 0.0) throw InvalidArgument("variance_predictor: negative weight");
    wsum += weights[k];
    acc += weights[k] * candidates[k];
  }
  if (!(wsum > 0.0)) throw InvalidArgument("variance_predictor: weights sum to zero");
  const double center = acc / wsum;
  double sq = 0.0;
  for (double r : candidates) sq += (center - r) * (center - r);
  const auto k = static_cast<double>(candidates.size());
  return AdmissibleInterval::from_center_radius(center, std::sqrt(sq) / k);
}

AdmissibleInterval variance_predictor(std::span<const double> candidates) {
  if (candidates.empty()) throw InvalidArgument("variance_predictor: no candidates");
  double acc = 0.0;
  for (double r : candidates) acc += r;
  const auto k = static_cast<double>(candidates.size());
  const double center = acc / k;
  double sq = 0.0;
  for (double r : candidates) sq += (center - r) * (center - r);
  return AdmissibleInterval::from_center_radius(center, std::sqrt(sq) / k);
}

AdmissibleInterval bounding_sphere_predictor(std::span<const double> candidates) {
  if (candidates.empty()) throw InvalidArgument("bounding_sphere_predictor: no candidates");
  const auto [lo, hi] = std::minmax_element(candidates.begin(), candidates.end());
  return AdmissibleInterval::from_bounds(*lo, *hi);
}

namespace {

// Survivors are sorted[first, last). Median of an even set is the mean of the
// two middle values.
AdmissibleInterval discard_sorted(std::span<double> sorted, int k_discard) {
  std::size_t first = 0;
  std::size_t last = sorted.size();
  for (int step = 0; step < k_discard; ++step) {
    const std::size_t count = last - first;
    const std::size_t mid = first + count / 2;
    const double median = count % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    const double below = median - sorted[first];
    const double above = sorted[last - 1] - median;
    if (above >= below) {
      --last;
    } else {
      ++first;
    }
  }
  return AdmissibleInterval::from_bounds(sorted[first], sorted[last - 1]);
}

}  // namespace

AdmissibleInterval surface_discard_predictor(std::span<const double> candidates, int k_discard) {
  std::vector<double> scratch(candidates.size());
  return predict({PredictorType::surface_discard, k_discard}, candidates, scratch);
}

AdmissibleInterval predict(PredictorKind kind, std::span<const double> candidates, std::span<double> scratch) {
  switch (kind.type) {
    case PredictorType::variance:
      return variance_predictor(candidates);
    case PredictorType::bounding_sphere:
      return bounding_sphere_predictor(candidates);
    case PredictorType::surface_discard: {
      if (kind.discard < 0) throw InvalidArgument("surface_discard_predictor: negative discard count");
      if (candidates.size() < static_cast<std::size_t>(kind.discard) + 2) {
        throw InvalidArgument("surface_discard_predictor: at least two candidates must survive");
      }
      if (kind.discard == 0) return bounding_sphere_predictor(candidates);
      if (scratch.size() < candidates.size()) throw InvalidArgument("predict: scratch too small");
      std::span<double> sorted = scratch.first(candidates.size());
      std::copy(candidates.begin(), candidates.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      return discard_sorted(sorted, kind.discard);
    }
  }
  throw InvalidArgument("predict: unknown predictor");
}

}  // namespace ratefv
