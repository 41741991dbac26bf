#pragma once

#include "fuzzn/fuzzy_number.hpp"

namespace fuzzn {

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber sub(const FuzzyNumber& u, const FuzzyNumber& v);
// Interval product per alpha level, materialized by monotone resampling.
FuzzyNumber mul(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scale(const FuzzyNumber& u, double c);

struct MetricBound {
  double value = 0.0;  // grid supremum (exact at breakpoints)
  double slack = 0.0;  // certified bound on what the grid may miss
};

// Supremum metric over alpha of the larger endpoint deviation. Evaluated on
// the union of both operands' alpha breakpoints (values and right limits)
// and a uniform grid, so piecewise-linear cases are exact.
double d_inf(const FuzzyNumber& u, const FuzzyNumber& v);
MetricBound d_inf_bound(const FuzzyNumber& u, const FuzzyNumber& v);

}  // namespace fuzzn
