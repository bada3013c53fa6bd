#include "ratefv/law.hpp"

#include <cmath>

#include "ratefv/error.hpp"

namespace ratefv {

double Burgers::max_wave_speed(double lo, double hi) const {
  if (lo > hi) throw InvalidArgument("max_wave_speed: lo > hi");
  return std::max(std::abs(lo), std::abs(hi));
}

double Burgers::flux_argmin(double lo, double hi) const {
  if (lo <= 0.0 && 0.0 <= hi) return 0.0;
  return lo > 0.0 ? lo : hi;
}

double Burgers::flux_argmax(double lo, double hi) const {
  return std::abs(hi) > std::abs(lo) ? hi : lo;
}

std::shared_ptr<const ScalarLaw> make_law(const std::string& name) {
  if (name == "burgers") return std::make_shared<Burgers>();
  throw InvalidArgument("unknown conservation law '" + name + "'");
}

}  // namespace ratefv
