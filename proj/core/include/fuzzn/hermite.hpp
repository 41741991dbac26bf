#pragma once

#include <span>
#include <vector>

namespace fuzzn {

// One knot of a monotone cubic Hermite membership branch.
// x strictly monotone across the node list; alpha is the membership value,
// slope the membership derivative d alpha / d x at the node.
struct HermiteNode {
  double x;
  double alpha;
  double slope;
};

double hermite_value(std::span<const HermiteNode> nodes, double x);
double hermite_derivative(std::span<const HermiteNode> nodes, double x);

// Fills unset (NaN) slopes with the harmonic mean of adjacent secants and
// secant slopes at the ends. Keeps any slope already set. The result is
// monotone whenever the alpha values are.
void fill_monotone_slopes(std::vector<HermiteNode>& nodes);

}  // namespace fuzzn
