#pragma once

#include <vector>

#include "fuzzn/hermite.hpp"

namespace fuzzn {

// One closed-form term of a side-function segment, a function of alpha.
// Side functions of every supported membership piece flatten into sums of
// these, so alpha-cut arithmetic stays exact: adding two fuzzy numbers
// concatenates term lists instead of resampling.
struct SideTerm {
  enum class Kind { Affine, Power, HermiteInverse };

  Kind kind = Kind::Affine;

  // Affine: a0 + a1 * alpha.
  double a0 = 0.0;
  double a1 = 0.0;

  // Power: coef * (m * alpha + q)^e.
  double coef = 0.0;
  double m = 0.0;
  double q = 0.0;
  double e = 1.0;

  // HermiteInverse: coef * H^{-1}(alpha) for a monotone Hermite branch.
  std::vector<HermiteNode> nodes;

  static SideTerm affine(double a0, double a1);
  static SideTerm power(double coef, double m, double q, double e);
  static SideTerm hermite_inverse(double coef, std::vector<HermiteNode> nodes);

  double value(double alpha) const;
  double derivative(double alpha) const;  // may be +-infinity at an endpoint
  void scale(double c);
};

// Piecewise-analytic side function over one alpha interval (alpha_lo, alpha_hi].
struct SideSegment {
  double alpha_lo = 0.0;
  double alpha_hi = 1.0;
  std::vector<SideTerm> terms;

  double value(double alpha) const;
  double derivative(double alpha) const;
  SideSegment restricted(double lo, double hi) const;
  bool is_plateau() const;  // constant in alpha (membership jump)
};

// A full side function u^- or u^+ on (0,1], left-continuous, evaluated
// right-continuously at alpha = 0. Segments are ordered and cover (0,1];
// a value gap between consecutive segments is a jump of the side function
// (a constant stretch of the membership function).
class SideCurve {
 public:
  std::vector<SideSegment> segments;

  double value(double alpha) const;
  // Right limit at alpha (the value as levels decrease to alpha).
  double right_limit(double alpha) const;
  double value_at_zero() const { return right_limit(0.0); }

  // All interior segment boundaries plus 0 and 1.
  std::vector<double> breakpoints() const;

  const SideSegment& segment_at(double alpha) const;
};

// ca * a + cb * b with merged breakpoints; term lists concatenate.
SideCurve combine(const SideCurve& a, double ca, const SideCurve& b, double cb);

// Scaled/shifted copy: c * a + shift.
SideCurve affine_image(const SideCurve& a, double c, double shift);

struct SideFunctions {
  SideCurve minus;  // u^-(alpha), nondecreasing
  SideCurve plus;   // u^+(alpha), nonincreasing
};

}  // namespace fuzzn
