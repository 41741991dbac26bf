#pragma once

#include <vector>

#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

enum class BranchSide { Left, Right };
enum class SingularKind { Kink, Jump };

struct SingularPoint {
  double x = 0.0;
  BranchSide side = BranchSide::Left;
  SingularKind kind = SingularKind::Kink;
  double level = 0.0;       // u(x)
  double left_limit = 0.0;  // beta for jumps
  double right_limit = 0.0; // gamma for jumps
  double left_slope = 0.0;  // for kinks
  double right_slope = 0.0;
};

struct AnalysisReport {
  std::vector<SingularPoint> singulars;
  bool in_f_t = false;  // strictly monotone branches, differentiable off core
  bool in_f_n = false;  // differentiable off core
  bool in_f_c = false;  // continuous on the open support
  bool in_f_d = false;  // differentiable on the open support
};

struct ConvergenceRow {
  double p = 0.0;
  double d = 0.0;
  bool diff_ok = false;
};

struct DiffVerdict {
  double x = 0.0;
  bool pass = false;
  double final_gap = 0.0;   // |right - left| difference quotient at smallest h
  double derivative = 0.0;  // estimate (closed form when interior to a piece)
};

AnalysisReport analyze(const FuzzyNumber& u);

// Difference-quotient differentiability verdicts at the given points, using
// closed-form derivatives where a point is interior to a piece.
std::vector<DiffVerdict> check_differentiable(
    const FuzzyNumber& u, const std::vector<double>& points, double tolerance,
    const std::vector<double>& steps = {1e-3, 1e-4, 1e-5, 1e-6});

// Smoothing schedule: for each radius p builds the tailored smoother, forms
// u nabla w, and records the metric distance and a differentiability verdict.
std::vector<ConvergenceRow> approximate(const FuzzyNumber& u,
                                        const std::vector<double>& schedule,
                                        double tolerance = 1e-3);

}  // namespace fuzzn
