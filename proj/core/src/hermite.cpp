#include "fuzzn/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fuzzn {

namespace {

// Locates the cell [i, i+1] containing x; clamps to the outer cells.
std::size_t cell_index(std::span<const HermiteNode> nodes, double x) {
  bool inc = nodes.front().x < nodes.back().x;
  std::size_t n = nodes.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    double b = nodes[i + 1].x;
    if (inc ? (x <= b) : (x >= b)) return i;
  }
  return n - 2;
}

}  // namespace

double hermite_value(std::span<const HermiteNode> nodes, double x) {
  if (nodes.size() == 1) return nodes.front().alpha;
  std::size_t i = cell_index(nodes, x);
  const HermiteNode& a = nodes[i];
  const HermiteNode& b = nodes[i + 1];
  double h = b.x - a.x;
  double t = (x - a.x) / h;
  double t2 = t * t;
  double t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1;
  double h10 = t3 - 2 * t2 + t;
  double h01 = -2 * t3 + 3 * t2;
  double h11 = t3 - t2;
  return h00 * a.alpha + h10 * h * a.slope + h01 * b.alpha + h11 * h * b.slope;
}

double hermite_derivative(std::span<const HermiteNode> nodes, double x) {
  if (nodes.size() == 1) return 0.0;
  std::size_t i = cell_index(nodes, x);
  const HermiteNode& a = nodes[i];
  const HermiteNode& b = nodes[i + 1];
  double h = b.x - a.x;
  double t = (x - a.x) / h;
  double t2 = t * t;
  double d00 = (6 * t2 - 6 * t) / h;
  double d10 = 3 * t2 - 4 * t + 1;
  double d01 = (-6 * t2 + 6 * t) / h;
  double d11 = 3 * t2 - 2 * t;
  return d00 * a.alpha + d10 * a.slope + d01 * b.alpha + d11 * b.slope;
}

void fill_monotone_slopes(std::vector<HermiteNode>& nodes) {
  std::size_t n = nodes.size();
  if (n < 2) return;
  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    secant[i] = (nodes[i + 1].alpha - nodes[i].alpha) / (nodes[i + 1].x - nodes[i].x);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isnan(nodes[i].slope)) continue;
    if (i == 0) {
      nodes[i].slope = secant.front();
    } else if (i + 1 == n) {
      nodes[i].slope = secant.back();
    } else {
      double s0 = secant[i - 1], s1 = secant[i];
      if (s0 * s1 <= 0.0 || s0 == 0.0 || s1 == 0.0) {
        nodes[i].slope = 0.0;
      } else {
        nodes[i].slope = 2.0 / (1.0 / s0 + 1.0 / s1);
      }
    }
  }
}

}  // namespace fuzzn
