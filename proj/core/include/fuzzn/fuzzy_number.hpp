#pragma once

#include <vector>

#include "fuzzn/piece.hpp"
#include "fuzzn/side_curve.hpp"

namespace fuzzn {

struct AlphaCut {
  double alpha = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// A fuzzy number as piecewise-analytic membership branches. Immutable after
// validation; all operations are pure, so concurrent use is safe.
class FuzzyNumber {
 public:
  // Checks piece monotonicity, branch coverage, value range and the
  // side-function properties; throws ValidationError on failure.
  static FuzzyNumber validate(double s_lo, double s_hi, double c_lo, double c_hi,
                              std::vector<Piece> left, std::vector<Piece> right);

  static FuzzyNumber crisp(double x);
  static FuzzyNumber triangular(double a, double b, double c);
  static FuzzyNumber trapezoidal(double a, double b, double c, double d);

  double membership(double x) const;
  AlphaCut alpha_cut(double alpha) const;

  const SideFunctions& side_functions() const { return sides_; }

  double support_lo() const { return s_lo_; }
  double support_hi() const { return s_hi_; }
  double core_lo() const { return c_lo_; }
  double core_hi() const { return c_hi_; }
  double boundary_left() const { return v_l_; }    // u(s_lo)
  double boundary_right() const { return v_r_; }   // u(s_hi)

  const std::vector<Piece>& left() const { return left_; }
  const std::vector<Piece>& right() const { return right_; }

  bool is_crisp() const { return left_.empty() && right_.empty(); }

  // x coordinates of all piece boundaries (branch ends included).
  std::vector<double> breakpoints() const;

 private:
  FuzzyNumber() = default;

  double s_lo_ = 0.0, s_hi_ = 0.0, c_lo_ = 0.0, c_hi_ = 0.0;
  double v_l_ = 0.0, v_r_ = 0.0;
  std::vector<Piece> left_, right_;
  SideFunctions sides_;
};

SideFunctions to_side_functions(const FuzzyNumber& u);
// Inverse of to_side_functions up to representation normalization.
// Throws ValidationError{SideFunctionViolation} when the pair fails the
// side-function laws.
FuzzyNumber from_side_functions(const SideFunctions& s);

}  // namespace fuzzn
