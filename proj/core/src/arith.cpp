#include "fuzzn/arith.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzn/errors.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
  SideFunctions s;
  s.minus = combine(u.side_functions().minus, 1.0, v.side_functions().minus, 1.0);
  s.plus = combine(u.side_functions().plus, 1.0, v.side_functions().plus, 1.0);
  return from_side_functions(s);
}

FuzzyNumber sub(const FuzzyNumber& u, const FuzzyNumber& v) {
  SideFunctions s;
  s.minus = combine(u.side_functions().minus, 1.0, v.side_functions().plus, -1.0);
  s.plus = combine(u.side_functions().plus, 1.0, v.side_functions().minus, -1.0);
  return from_side_functions(s);
}

FuzzyNumber scale(const FuzzyNumber& u, double c) {
  if (c == 0.0) return FuzzyNumber::crisp(0.0);
  SideFunctions s;
  if (c > 0.0) {
    s.minus = affine_image(u.side_functions().minus, c, 0.0);
    s.plus = affine_image(u.side_functions().plus, c, 0.0);
  } else {
    s.minus = affine_image(u.side_functions().plus, c, 0.0);
    s.plus = affine_image(u.side_functions().minus, c, 0.0);
  }
  return from_side_functions(s);
}

namespace {

std::vector<double> alpha_nodes(const FuzzyNumber& u, const FuzzyNumber& v) {
  std::vector<double> a;
  a.reserve(tol::kResampleNodes + 16);
  for (int i = 0; i < tol::kResampleNodes; ++i) {
    a.push_back(static_cast<double>(i) / (tol::kResampleNodes - 1));
  }
  for (const FuzzyNumber* f : {&u, &v}) {
    for (const SideCurve* c :
         {&f->side_functions().minus, &f->side_functions().plus}) {
      for (double b : c->breakpoints()) a.push_back(b);
    }
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end(),
                      [](double x, double y) { return std::abs(x - y) < 1e-12; }),
          a.end());
  if (a.back() != 1.0) a.push_back(1.0);
  return a;
}

// Monotone Hermite pieces through (x_i, alpha_i) samples; plateau stretches
// (repeated x) become membership jumps. `increasing`: x grows with alpha.
std::vector<Piece> pieces_from_samples(const std::vector<double>& alphas,
                                       const std::vector<double>& xs,
                                       bool increasing) {
  std::size_t n = alphas.size();
  std::vector<Piece> out;
  std::size_t i = 0;
  double dir = increasing ? 1.0 : -1.0;
  while (i + 1 < n) {
    if (dir * (xs[i + 1] - xs[i]) < tol::kX) {
      ++i;
      continue;
    }
    std::vector<HermiteNode> nodes;
    nodes.push_back({xs[i], alphas[i], std::numeric_limits<double>::quiet_NaN()});
    std::size_t j = i;
    while (j + 1 < n && dir * (xs[j + 1] - xs[j]) >= tol::kX) {
      nodes.push_back({xs[j + 1], alphas[j + 1], std::numeric_limits<double>::quiet_NaN()});
      ++j;
    }
    fill_monotone_slopes(nodes);
    out.push_back(Piece::monotone_hermite(std::move(nodes)));
    i = j;
  }
  return out;
}

}  // namespace

FuzzyNumber mul(const FuzzyNumber& u, const FuzzyNumber& v) {
  std::vector<double> alphas = alpha_nodes(u, v);
  std::size_t n = alphas.size();
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    AlphaCut cu = u.alpha_cut(alphas[i]);
    AlphaCut cv = v.alpha_cut(alphas[i]);
    double c1 = cu.lo * cv.lo, c2 = cu.lo * cv.hi, c3 = cu.hi * cv.lo, c4 = cu.hi * cv.hi;
    lo[i] = std::min(std::min(c1, c2), std::min(c3, c4));
    hi[i] = std::max(std::max(c1, c2), std::max(c3, c4));
  }
  // nestedness can be marred by rounding; enforce it
  for (std::size_t i = 1; i < n; ++i) {
    lo[i] = std::max(lo[i], lo[i - 1]);
    hi[i] = std::min(hi[i], hi[i - 1]);
  }
  double s_lo = lo.front(), s_hi = hi.front();
  double c_lo = lo.back(), c_hi = hi.back();
  if (s_hi - s_lo < tol::kX) return FuzzyNumber::crisp(0.5 * (s_lo + s_hi));

  std::vector<Piece> left = pieces_from_samples(alphas, lo, /*increasing=*/true);
  std::vector<Piece> right = pieces_from_samples(alphas, hi, /*increasing=*/false);
  std::reverse(right.begin(), right.end());
  return FuzzyNumber::validate(s_lo, s_hi, c_lo, c_hi, std::move(left), std::move(right));
}

MetricBound d_inf_bound(const FuzzyNumber& u, const FuzzyNumber& v) {
  const SideCurve* curves[4] = {&u.side_functions().minus, &u.side_functions().plus,
                                &v.side_functions().minus, &v.side_functions().plus};
  std::vector<double> grid;
  grid.reserve(tol::kMetricGrid + 32);
  for (int i = 0; i < tol::kMetricGrid; ++i) {
    grid.push_back(static_cast<double>(i) / (tol::kMetricGrid - 1));
  }
  for (const SideCurve* c : curves) {
    for (double b : c->breakpoints()) grid.push_back(b);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto gap_at = [&](double a, bool right_limit) {
    double um = right_limit ? curves[0]->right_limit(a) : curves[0]->value(a);
    double vm = right_limit ? curves[2]->right_limit(a) : curves[2]->value(a);
    double up = right_limit ? curves[1]->right_limit(a) : curves[1]->value(a);
    double vp = right_limit ? curves[3]->right_limit(a) : curves[3]->value(a);
    return std::max(std::abs(um - vm), std::abs(up - vp));
  };

  double best = 0.0;
  for (double a : grid) {
    best = std::max(best, gap_at(a, false));
    best = std::max(best, gap_at(a, true));
  }

  // Certified slack: within each cell every curve is monotone, so the gap can
  // exceed the endpoint gaps by at most the smaller of the paired variations.
  double upper = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double a = grid[i], b = grid[i + 1];
    double ends = std::max(gap_at(a, true), gap_at(b, false));
    double var_m = std::min(std::abs(curves[0]->value(b) - curves[0]->right_limit(a)),
                            std::abs(curves[2]->value(b) - curves[2]->right_limit(a)));
    double var_p = std::min(std::abs(curves[1]->value(b) - curves[1]->right_limit(a)),
                            std::abs(curves[3]->value(b) - curves[3]->right_limit(a)));
    upper = std::max(upper, ends + std::max(var_m, var_p));
  }
  return {best, std::max(0.0, upper - best)};
}

double d_inf(const FuzzyNumber& u, const FuzzyNumber& v) {
  return d_inf_bound(u, v).value;
}

}  // namespace fuzzn
