#include "fuzzn/generator.hpp"

#include <cmath>

#include "fuzzn/errors.hpp"

namespace fuzzn {

GeneratorF GeneratorF::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw InvalidGenerator("generator exponent must be a positive finite number");
  }
  return GeneratorF(exponent);
}

double GeneratorF::value(double t) const {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return std::pow(1.0 - t, exponent_);
}

double GeneratorF::derivative(double t) const {
  double s = 1.0 - t;
  if (s <= 0.0) {
    if (exponent_ < 1.0) return -std::numeric_limits<double>::infinity();
    if (exponent_ == 1.0) return -1.0;
    return 0.0;
  }
  return -exponent_ * std::pow(s, exponent_ - 1.0);
}

double GeneratorF::inverse(double s) const {
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return 0.0;
  return 1.0 - std::pow(s, 1.0 / exponent_);
}

}  // namespace fuzzn
