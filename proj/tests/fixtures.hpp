#pragma once

#include <vector>

#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/generator.hpp"
#include "fuzzn/smooth.hpp"

namespace fixtures {

using fuzzn::FuzzyNumber;
using fuzzn::Piece;

// Left-branch slope change at level 0.5: slope 1 on [0, 0.5], slope 2 on
// [0.5, 0.75]; core {0.75..1}, linear right side.
inline FuzzyNumber kink() {
  std::vector<Piece> left{
      Piece::linear({0.0, 0.5}, 1.0, 0.0),
      Piece::linear({0.5, 0.75}, 2.0, -0.5),
  };
  std::vector<Piece> right{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
  return FuzzyNumber::validate(0.0, 2.0, 0.75, 1.0, std::move(left), std::move(right));
}

// Left branch jumps from 0.25 to 0.75 at x = 0.5.
inline FuzzyNumber jump() {
  std::vector<Piece> left{
      Piece::linear({0.0, 0.5}, 0.5, 0.0),
      Piece::linear({0.5, 1.0}, 0.5, 0.5),
  };
  std::vector<Piece> right{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
  return FuzzyNumber::validate(0.0, 2.0, 1.0, 1.0, std::move(left), std::move(right));
}

// u^- has a plateau on (0.25, 0.75]: a membership jump at x = 0.5 built the
// same way as jump() but phrased per side functions in tests.
inline FuzzyNumber tri() { return FuzzyNumber::triangular(0, 1, 2); }
inline FuzzyNumber trap() { return FuzzyNumber::trapezoidal(0, 1, 2, 3); }

inline FuzzyNumber z_linear(double p) {
  return fuzzn::make_Z_p_f(fuzzn::GeneratorF::power(1.0), p);
}

// The fixtures the convergence criteria iterate over.
inline std::vector<FuzzyNumber> corpus() {
  return {tri(), trap(), fuzzn::make_w_p(1.0), z_linear(1.0), kink(), jump()};
}

}  // namespace fixtures
