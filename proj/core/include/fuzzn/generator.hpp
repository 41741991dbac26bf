#pragma once

namespace fuzzn {

// Generator of the Z family of smoothers: a continuous strictly decreasing
// f : [0,1] -> [0,1] with f(0) = 1 and f(1) = 0. Represented in the power
// form f(t) = (1 - t)^e, e > 0, which covers every generator the library
// constructs (e = 1/2 reproduces the parabolic smoother).
class GeneratorF {
 public:
  static GeneratorF power(double exponent);

  double value(double t) const;       // f(t)
  double derivative(double t) const;  // f'(t), one-sided at the ends
  double inverse(double s) const;     // f^{-1}(s)

  double exponent() const { return exponent_; }
  bool differentiable() const { return true; }
  // True when lim_{t -> 1-} f'(t) = -infinity.
  bool slope_diverges_at_one() const { return exponent_ < 1.0; }

 private:
  explicit GeneratorF(double exponent) : exponent_(exponent) {}
  double exponent_;
};

}  // namespace fuzzn
