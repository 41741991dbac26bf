#pragma once

#include <vector>

#include "fuzzn/analysis.hpp"
#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/generator.hpp"

namespace fuzzn {

// Recipe for a tailored smoother: radius, boundary membership values and the
// alpha levels where the smoother's membership derivative must vanish.
struct SmootherSpec {
  double p = 1.0;
  double c_l = 0.0;  // w(-p)
  double c_r = 0.0;  // w(p)
  std::vector<double> s_l;  // sorted, in (0,1]
  std::vector<double> s_r;
  // Levels added beyond the ones the construction strictly names (the upper
  // value of a jump); kept separately so callers can see them.
  std::vector<double> defensive_l;
  std::vector<double> defensive_r;
};

// The parabolic smoother: membership 1 - (x/p)^2 on [-p, p].
FuzzyNumber make_w_p(double p);

// The generator smoother: membership f^{-1}(|x|/p) on [-p, p].
FuzzyNumber make_Z_p_f(const GeneratorF& f, double p);

// The condition under which u nabla Z_p^f is differentiable for strictly
// monotone u: f differentiable with f' diverging to -infinity at 1.
bool generator_criterion(const GeneratorF& f);

// Builds a differentiable smoother from a spec: monotone C1 Hermite branches
// with slope exactly 0 at every constrained level (and at the core edge),
// strictly monotone in between.
FuzzyNumber synthesize(const SmootherSpec& spec);

// Derives the spec a target fuzzy number needs: boundary values from the
// support endpoints, stationarity levels from its kinks and jumps.
SmootherSpec spec_for(const FuzzyNumber& u, double p, const AnalysisReport& report);

}  // namespace fuzzn
