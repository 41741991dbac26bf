#include "fuzzn/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzn/errors.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

FuzzyNumber make_w_p(double p) {
  if (!(p > 0.0)) throw NonPositiveRadius("smoother radius must be positive");
  double a = -1.0 / (p * p);
  std::vector<Piece> left{Piece::quadratic({-p, 0.0}, a, 0.0, 1.0)};
  std::vector<Piece> right{Piece::quadratic({0.0, p}, a, 0.0, 1.0)};
  return FuzzyNumber::validate(-p, p, 0.0, 0.0, std::move(left), std::move(right));
}

FuzzyNumber make_Z_p_f(const GeneratorF& f, double p) {
  if (!(p > 0.0)) throw NonPositiveRadius("smoother radius must be positive");
  // strict decrease check on a dense grid (the power form guarantees the
  // endpoint values)
  double prev = f.value(0.0);
  for (int k = 1; k <= 100; ++k) {
    double t = k / 100.0;
    double v = f.value(t);
    if (!(v < prev)) throw InvalidGenerator("generator is not strictly decreasing");
    prev = v;
  }
  std::vector<Piece> left{Piece::inverse_generator({-p, 0.0}, f, p, -1)};
  std::vector<Piece> right{Piece::inverse_generator({0.0, p}, f, p, 1)};
  return FuzzyNumber::validate(-p, p, 0.0, 0.0, std::move(left), std::move(right));
}

bool generator_criterion(const GeneratorF& f) {
  return f.differentiable() && f.slope_diverges_at_one();
}

namespace {

std::vector<double> clean_levels(const std::vector<double>& raw, double floor_level) {
  for (double s : raw) {
    if (!(s > 0.0) || s > 1.0) {
      throw LevelsOutOfRange("stationarity level " + std::to_string(s) +
                             " outside (0, 1]");
    }
  }
  std::vector<double> levels = raw;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               levels.end());
  // levels at or below the boundary value are met at the support endpoint
  std::erase_if(levels, [&](double s) { return s < floor_level - 1e-12; });
  return levels;
}

// One branch of a synthesized smoother as a Hermite piece over [x_lo, x_hi].
// `levels` ascending for the left branch, including the boundary value first
// and 1 last; zero slope at every node except possibly the boundary one.
Piece branch_piece(double x_lo, double x_hi, const std::vector<double>& levels,
                   bool left_branch, bool boundary_constrained) {
  std::size_t k = levels.size();
  std::vector<HermiteNode> nodes(k);
  for (std::size_t i = 0; i < k; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(k - 1);
    double x = x_lo + t * (x_hi - x_lo);
    double level = left_branch ? levels[i] : levels[k - 1 - i];
    nodes[i] = {x, level, 0.0};
  }
  // the support-end node is unconstrained unless its level was itself named
  std::size_t boundary = left_branch ? 0 : k - 1;
  if (!boundary_constrained) {
    nodes[boundary].slope = std::numeric_limits<double>::quiet_NaN();
  }
  fill_monotone_slopes(nodes);
  return Piece::monotone_hermite(std::move(nodes));
}

}  // namespace

FuzzyNumber synthesize(const SmootherSpec& spec) {
  if (!(spec.p > 0.0)) throw NonPositiveRadius("smoother radius must be positive");
  if (spec.c_l >= 1.0 || spec.c_r >= 1.0) {
    throw DegenerateSpec("boundary membership value must be below 1");
  }
  if (spec.c_l < 0.0 || spec.c_r < 0.0) {
    throw LevelsOutOfRange("boundary membership value must be nonnegative");
  }

  auto build = [&](double c_bound, const std::vector<double>& s, bool left) {
    std::vector<double> levels = clean_levels(s, c_bound);
    bool boundary_constrained =
        !levels.empty() && std::abs(levels.front() - c_bound) < 1e-12;
    if (boundary_constrained) {
      levels.front() = c_bound;
    } else {
      levels.insert(levels.begin(), c_bound);
    }
    if (levels.size() < 2 || std::abs(levels.back() - 1.0) > 1e-12) {
      levels.push_back(1.0);
    }
    levels.back() = 1.0;
    if (left) {
      return branch_piece(-spec.p, 0.0, levels, true, boundary_constrained);
    }
    return branch_piece(0.0, spec.p, levels, false, boundary_constrained);
  };

  std::vector<Piece> left{build(spec.c_l, spec.s_l, true)};
  std::vector<Piece> right{build(spec.c_r, spec.s_r, false)};
  return FuzzyNumber::validate(-spec.p, spec.p, 0.0, 0.0, std::move(left),
                               std::move(right));
}

SmootherSpec spec_for(const FuzzyNumber& u, double p, const AnalysisReport& report) {
  if (!(p > 0.0)) throw NonPositiveRadius("smoother radius must be positive");
  if (report.singulars.size() > 64) {
    throw InfinitelyManySingularities("singular point cap (64) exceeded");
  }
  SmootherSpec spec;
  spec.p = p;
  bool left_side = u.support_lo() < u.core_lo();
  bool right_side = u.core_hi() < u.support_hi();
  spec.c_l = left_side ? u.boundary_left() : 0.0;
  spec.c_r = right_side ? u.boundary_right() : 0.0;

  bool core_lo_interior = left_side && u.core_lo() < u.support_hi();
  bool core_hi_interior = right_side && u.core_hi() > u.support_lo();
  if (core_lo_interior) spec.s_l.push_back(1.0);
  if (core_hi_interior) spec.s_r.push_back(1.0);

  for (const SingularPoint& s : report.singulars) {
    if (s.side == BranchSide::Left) {
      spec.s_l.push_back(s.level);
      if (s.kind == SingularKind::Jump) {
        spec.s_l.push_back(s.left_limit);  // beta
        if (s.level < 1.0) spec.defensive_l.push_back(s.level);
      }
    } else {
      spec.s_r.push_back(s.level);
      if (s.kind == SingularKind::Jump) {
        spec.s_r.push_back(s.right_limit);  // gamma
        if (s.level < 1.0) spec.defensive_r.push_back(s.level);
      }
    }
  }
  auto tidy = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            v.end());
    std::erase_if(v, [](double s) { return !(s > 0.0) || s > 1.0; });
  };
  tidy(spec.s_l);
  tidy(spec.s_r);
  tidy(spec.defensive_l);
  tidy(spec.defensive_r);
  return spec;
}

}  // namespace fuzzn
