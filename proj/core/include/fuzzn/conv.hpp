#pragma once

#include <string>
#include <vector>

#include "fuzzn/fuzzy_number.hpp"

namespace fuzzn {

// Uniformly sampled membership function, the carrier of the grid oracle.
struct GridFunction {
  double x0 = 0.0;
  double h = 0.0;
  std::vector<double> values;

  double x_at(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
  std::string to_csv() const;  // two columns x,value
};

// Sup-min convolution via alpha-cut addition (the two coincide for fuzzy
// numbers).
FuzzyNumber nabla(const FuzzyNumber& u, const FuzzyNumber& v);

// Direct discretization of sup_y min(u(y), v(x - y)); independent of the
// alpha-cut path, used as ground truth. Throws StepTooCoarse when h exceeds
// an eighth of the wider support.
GridFunction sup_min_grid(const FuzzyNumber& u, const FuzzyNumber& v, double h);

// Max gap between the grid convolution and the exact one, skipping a kX
// neighborhood of the exact result's jump abscissae.
double oracle_gap(const FuzzyNumber& u, const FuzzyNumber& v, double h);

}  // namespace fuzzn
