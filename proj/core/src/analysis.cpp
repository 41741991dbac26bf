#include "fuzzn/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzn/arith.hpp"
#include "fuzzn/conv.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/smooth.hpp"

namespace fuzzn {

namespace {

constexpr double kJumpTol = 1e-9;

bool finite(double v) { return std::isfinite(v); }

void scan_boundary(std::vector<SingularPoint>& out, BranchSide side, double x,
                   double lv, double rv, double ls, double rs) {
  if (rv - lv > kJumpTol || lv - rv > kJumpTol) {
    SingularPoint s;
    s.x = x;
    s.side = side;
    s.kind = SingularKind::Jump;
    s.left_limit = lv;
    s.right_limit = rv;
    s.level = std::max(lv, rv);  // membership convention: the upper value
    out.push_back(s);
    return;
  }
  double gap = (finite(ls) && finite(rs)) ? std::abs(ls - rs)
                                          : (ls == rs ? 0.0 : std::numeric_limits<double>::infinity());
  if (gap > tol::kKinkSlopeGap) {
    SingularPoint s;
    s.x = x;
    s.side = side;
    s.kind = SingularKind::Kink;
    s.level = 0.5 * (lv + rv);
    s.left_limit = lv;
    s.right_limit = rv;
    s.left_slope = ls;
    s.right_slope = rs;
    out.push_back(s);
  }
}

}  // namespace

AnalysisReport analyze(const FuzzyNumber& u) {
  AnalysisReport r;
  const auto& left = u.left();
  const auto& right = u.right();

  for (std::size_t i = 0; i + 1 < left.size(); ++i) {
    double x = left[i].domain().hi;
    scan_boundary(r.singulars, BranchSide::Left, x, left[i].value(x),
                  left[i + 1].value(x), left[i].derivative(x),
                  left[i + 1].derivative(x));
  }
  if (!left.empty()) {
    double x = u.core_lo();
    scan_boundary(r.singulars, BranchSide::Left, x, left.back().value(x), 1.0,
                  left.back().derivative(x), 0.0);
  }
  if (!right.empty()) {
    double x = u.core_hi();
    scan_boundary(r.singulars, BranchSide::Right, x, 1.0, right.front().value(x),
                  0.0, right.front().derivative(x));
  }
  for (std::size_t i = 0; i + 1 < right.size(); ++i) {
    double x = right[i].domain().hi;
    scan_boundary(r.singulars, BranchSide::Right, x, right[i].value(x),
                  right[i + 1].value(x), right[i].derivative(x),
                  right[i + 1].derivative(x));
  }

  bool any_jump = std::any_of(r.singulars.begin(), r.singulars.end(),
                              [](const SingularPoint& s) { return s.kind == SingularKind::Jump; });
  auto interior = [&](const SingularPoint& s) {
    if (s.side == BranchSide::Left) {
      return s.x > u.support_lo() + tol::kX && s.x < u.core_lo() - tol::kX;
    }
    return s.x > u.core_hi() + tol::kX && s.x < u.support_hi() - tol::kX;
  };
  bool any_interior = std::any_of(r.singulars.begin(), r.singulars.end(), interior);

  bool strictly_monotone = true;
  for (const Piece& p : left) {
    if (p.kind() == Piece::Kind::Constant ||
        p.value(p.domain().hi) <= p.value(p.domain().lo) + tol::kX) {
      strictly_monotone = false;
    }
  }
  for (const Piece& p : right) {
    if (p.kind() == Piece::Kind::Constant ||
        p.value(p.domain().lo) <= p.value(p.domain().hi) + tol::kX) {
      strictly_monotone = false;
    }
  }

  r.in_f_c = !any_jump;
  r.in_f_n = !any_interior;
  r.in_f_t = r.in_f_n && strictly_monotone;
  r.in_f_d = r.singulars.empty();
  return r;
}

std::vector<DiffVerdict> check_differentiable(const FuzzyNumber& u,
                                              const std::vector<double>& points,
                                              double tolerance,
                                              const std::vector<double>& steps) {
  std::vector<DiffVerdict> out;
  out.reserve(points.size());
  for (double x : points) {
    if (!(x > u.support_lo() && x < u.support_hi())) {
      throw PointOutsideSupport("probe point " + std::to_string(x) +
                                " outside the open support");
    }
    DiffVerdict v;
    v.x = x;

    // closed form when strictly interior to a piece or to the core
    if (x > u.core_lo() + kJumpTol && x < u.core_hi() - kJumpTol) {
      v.pass = true;
      v.derivative = 0.0;
      out.push_back(v);
      continue;
    }
    const Piece* host = nullptr;
    for (const auto* branch : {&u.left(), &u.right()}) {
      for (const Piece& p : *branch) {
        if (x > p.domain().lo + kJumpTol && x < p.domain().hi - kJumpTol) host = &p;
      }
    }
    if (host) {
      double d = host->derivative(x);
      v.pass = finite(d);
      v.derivative = finite(d) ? d : 0.0;
      out.push_back(v);
      continue;
    }

    // piece boundary: compare closed-form one-sided limits when both sides
    // provide them
    bool have_l = false, have_r = false;
    double lv = 0.0, rv = 0.0, ld = 0.0, rd = 0.0;
    bool wide_core = u.core_hi() - u.core_lo() > kJumpTol;
    if (wide_core && std::abs(x - u.core_lo()) <= kJumpTol) {
      have_r = true, rv = 1.0, rd = 0.0;  // core extends to the right
    }
    if (wide_core && std::abs(x - u.core_hi()) <= kJumpTol) {
      have_l = true, lv = 1.0, ld = 0.0;  // core extends to the left
    }
    for (const auto* branch : {&u.left(), &u.right()}) {
      for (const Piece& p : *branch) {
        if (std::abs(p.domain().hi - x) <= kJumpTol && !have_l) {
          have_l = true;
          lv = p.value(p.domain().hi);
          ld = p.derivative(p.domain().hi);
        }
        if (std::abs(p.domain().lo - x) <= kJumpTol && !have_r) {
          have_r = true;
          rv = p.value(p.domain().lo);
          rd = p.derivative(p.domain().lo);
        }
      }
    }
    if (have_l && have_r) {
      if (std::abs(lv - rv) > 1e-9 || !finite(ld) || !finite(rd)) {
        v.pass = false;
        v.final_gap = std::numeric_limits<double>::infinity();
        v.derivative = 0.0;
        out.push_back(v);
        continue;
      }
      v.final_gap = std::abs(ld - rd);
      v.derivative = 0.5 * (ld + rd);
      v.pass = v.final_gap <= tolerance;
      out.push_back(v);
      continue;
    }

    // no closed form: one-sided difference quotients over shrinking steps
    double prev_gap = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double lq = 0.0, rq = 0.0, gap = 0.0;
    for (double h : steps) {
      double f0 = u.membership(x);
      lq = (f0 - u.membership(x - h)) / h;
      rq = (u.membership(x + h) - f0) / h;
      gap = std::abs(rq - lq);
      if (gap > prev_gap + tolerance / 10.0) monotone = false;
      prev_gap = gap;
    }
    v.final_gap = gap;
    v.derivative = 0.5 * (lq + rq);
    v.pass = monotone && gap <= tolerance;
    out.push_back(v);
  }
  return out;
}

std::vector<ConvergenceRow> approximate(const FuzzyNumber& u,
                                        const std::vector<double>& schedule,
                                        double tolerance) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0)) throw NonPositiveRadius("schedule radius must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      throw Error("schedule must be strictly decreasing");
    }
  }
  AnalysisReport report = analyze(u);
  std::vector<ConvergenceRow> rows;
  rows.reserve(schedule.size());
  for (double p : schedule) {
    SmootherSpec spec = spec_for(u, p, report);
    FuzzyNumber w = synthesize(spec);
    FuzzyNumber v = nabla(u, w);

    std::vector<double> probes;
    const SideCurve& wm = w.side_functions().minus;
    const SideCurve& wp = w.side_functions().plus;
    for (const SingularPoint& s : report.singulars) {
      std::vector<double> levels{s.level};
      if (s.kind == SingularKind::Jump) {
        levels.push_back(s.side == BranchSide::Left ? s.left_limit : s.right_limit);
      }
      for (double level : levels) {
        double mapped = s.side == BranchSide::Left ? s.x + wm.value(level)
                                                   : s.x + wp.value(level);
        probes.push_back(mapped);
      }
    }
    probes.push_back(v.core_lo());
    probes.push_back(v.core_hi());
    // safety net against singularities the mapped set does not name
    for (int k = 1; k <= 17; ++k) {
      double t = static_cast<double>(k) / 18.0;
      probes.push_back(v.support_lo() + t * (v.core_lo() - v.support_lo()));
      probes.push_back(v.core_hi() + t * (v.support_hi() - v.core_hi()));
    }
    std::erase_if(probes, [&](double x) {
      return !(x > v.support_lo() + tol::kX && x < v.support_hi() - tol::kX);
    });
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end(),
                             [](double a, double b) { return std::abs(a - b) < tol::kX; }),
                 probes.end());

    auto verdicts = check_differentiable(v, probes, tolerance);
    bool ok = std::all_of(verdicts.begin(), verdicts.end(),
                          [](const DiffVerdict& d) { return d.pass; });
    rows.push_back({p, d_inf(u, v), ok});
  }
  return rows;
}

}  // namespace fuzzn
