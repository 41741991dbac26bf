#include "fuzzn/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzn/errors.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

namespace {

constexpr double kEps = 1e-9;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void append_plateau(SideCurve& curve, double a_lo, double a_hi, double x) {
  if (a_hi <= a_lo) return;
  SideSegment s;
  s.alpha_lo = a_lo;
  s.alpha_hi = a_hi;
  s.terms = {SideTerm::affine(x, 0.0)};
  curve.segments.push_back(std::move(s));
}

// Side curve of the left branch: alpha |-> u^-(alpha) on (0,1].
SideCurve build_minus(double s_lo, double c_lo, const std::vector<Piece>& left) {
  SideCurve curve;
  if (left.empty()) {
    append_plateau(curve, 0.0, 1.0, c_lo);
    return curve;
  }
  double alpha_cur = 0.0;
  for (const Piece& p : left) {
    double vlo = p.value(p.domain().lo);
    double vhi = p.value(p.domain().hi);
    if (vlo > alpha_cur + tol::kX) {
      // membership jump at the piece's left end
      append_plateau(curve, alpha_cur, vlo, p.domain().lo);
      alpha_cur = vlo;
    }
    if (p.kind() == Piece::Kind::Constant) {
      if (vhi > alpha_cur + tol::kX) {
        append_plateau(curve, alpha_cur, vhi, p.domain().lo);
        alpha_cur = vhi;
      }
      continue;
    }
    if (vhi > alpha_cur + tol::kX) {
      SideSegment s;
      s.alpha_lo = alpha_cur;
      s.alpha_hi = vhi;
      s.terms = p.side_terms();
      curve.segments.push_back(std::move(s));
      alpha_cur = vhi;
    }
  }
  if (alpha_cur < 1.0 - tol::kX) {
    append_plateau(curve, alpha_cur, 1.0, c_lo);
  } else {
    curve.segments.back().alpha_hi = 1.0;
  }
  (void)s_lo;
  return curve;
}

// Side curve of the right branch: alpha |-> u^+(alpha), nonincreasing.
SideCurve build_plus(double s_hi, double c_hi, const std::vector<Piece>& right) {
  SideCurve curve;
  if (right.empty()) {
    append_plateau(curve, 0.0, 1.0, c_hi);
    return curve;
  }
  double alpha_cur = 0.0;
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    const Piece& p = *it;
    double v_outer = p.value(p.domain().hi);
    double v_inner = p.value(p.domain().lo);
    if (v_outer > alpha_cur + tol::kX) {
      append_plateau(curve, alpha_cur, v_outer, p.domain().hi);
      alpha_cur = v_outer;
    }
    if (p.kind() == Piece::Kind::Constant) {
      if (v_inner > alpha_cur + tol::kX) {
        append_plateau(curve, alpha_cur, v_inner, p.domain().hi);
        alpha_cur = v_inner;
      }
      continue;
    }
    if (v_inner > alpha_cur + tol::kX) {
      SideSegment s;
      s.alpha_lo = alpha_cur;
      s.alpha_hi = v_inner;
      s.terms = p.side_terms();
      curve.segments.push_back(std::move(s));
      alpha_cur = v_inner;
    }
  }
  if (alpha_cur < 1.0 - tol::kX) {
    append_plateau(curve, alpha_cur, 1.0, c_hi);
  } else {
    curve.segments.back().alpha_hi = 1.0;
  }
  (void)s_hi;
  return curve;
}

std::string at(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_branch(const std::vector<Piece>& pieces, double from, double to,
                  bool increasing, const char* name) {
  if (from >= to - tol::kX) {
    if (!pieces.empty()) {
      throw ValidationError(ValidationError::Code::GapInBranch,
                            std::string(name) + " branch must be empty for a zero-width side");
    }
    return;
  }
  if (pieces.empty()) {
    throw ValidationError(ValidationError::Code::GapInBranch,
                          std::string(name) + " branch has no pieces over [" + at(from) +
                              ", " + at(to) + "]");
  }
  double cursor = from;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    const Interval& d = p.domain();
    if (!(d.lo < d.hi)) {
      throw ValidationError(ValidationError::Code::NonMonotonePiece,
                            std::string(name) + " piece " + std::to_string(i) +
                                " has an empty domain at x=" + at(d.lo));
    }
    if (std::abs(d.lo - cursor) > 1e-8) {
      throw ValidationError(ValidationError::Code::GapInBranch,
                            std::string(name) + " branch gap before piece " +
                                std::to_string(i) + " at x=" + at(cursor));
    }
    // range and monotonicity on a sample grid
    const int n = 33;
    double prev = 0.0;
    for (int k = 0; k <= n; ++k) {
      double x = d.lo + (d.hi - d.lo) * k / n;
      double v = p.value(x);
      if (v < -kEps || v > 1.0 + kEps) {
        throw ValidationError(ValidationError::Code::ValueOutOfRange,
                              std::string(name) + " piece " + std::to_string(i) +
                                  " value " + at(v) + " at x=" + at(x));
      }
      if (k > 0) {
        double step = v - prev;
        if (increasing ? step < -kEps : step > kEps) {
          throw ValidationError(ValidationError::Code::NonMonotonePiece,
                                std::string(name) + " piece " + std::to_string(i) +
                                    " not monotone at x=" + at(x));
        }
      }
      double dv = p.derivative(x);
      if (!std::isnan(dv) && !std::isinf(dv)) {
        if (increasing ? dv < -1e-6 : dv > 1e-6) {
          throw ValidationError(ValidationError::Code::NonMonotonePiece,
                                std::string(name) + " piece " + std::to_string(i) +
                                    " derivative sign flips at x=" + at(x));
        }
      }
      prev = v;
    }
    cursor = d.hi;
  }
  if (std::abs(cursor - to) > 1e-8) {
    throw ValidationError(ValidationError::Code::CoreNotReached,
                          std::string(name) + " branch ends at x=" + at(cursor) +
                              " instead of " + at(to));
  }
  // across-piece monotonicity (jumps must go toward the core)
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    double a = pieces[i].value(pieces[i].domain().hi);
    double b = pieces[i + 1].value(pieces[i + 1].domain().lo);
    double step = b - a;
    if (increasing ? step < -kEps : step > kEps) {
      throw ValidationError(ValidationError::Code::NonMonotonePiece,
                            std::string(name) + " branch decreases across pieces at x=" +
                                at(pieces[i].domain().hi));
    }
  }
}

}  // namespace

FuzzyNumber FuzzyNumber::validate(double s_lo, double s_hi, double c_lo, double c_hi,
                                  std::vector<Piece> left, std::vector<Piece> right) {
  if (!(s_lo <= c_lo && c_lo <= c_hi && c_hi <= s_hi)) {
    throw ValidationError(ValidationError::Code::SideFunctionViolation,
                          "support/core ordering violated");
  }
  check_branch(left, s_lo, c_lo, /*increasing=*/true, "left");
  check_branch(right, c_hi, s_hi, /*increasing=*/false, "right");

  FuzzyNumber u;
  u.s_lo_ = s_lo;
  u.s_hi_ = s_hi;
  u.c_lo_ = c_lo;
  u.c_hi_ = c_hi;
  u.left_ = std::move(left);
  u.right_ = std::move(right);
  u.sides_.minus = build_minus(s_lo, c_lo, u.left_);
  u.sides_.plus = build_plus(s_hi, c_hi, u.right_);
  u.v_l_ = u.left_.empty() ? 1.0 : clamp01(u.left_.front().value(s_lo));
  u.v_r_ = u.right_.empty() ? 1.0 : clamp01(u.right_.back().value(s_hi));

  // side-function laws on a dense level grid.
  const int n = tol::kValidationGrid - 1;
  double prev_m = u.sides_.minus.value_at_zero();
  double prev_p = u.sides_.plus.value_at_zero();
  for (int k = 1; k <= n; ++k) {
    double a = static_cast<double>(k) / n;
    double m = u.sides_.minus.value(a);
    double p = u.sides_.plus.value(a);
    if (m < prev_m - kEps) {
      throw ValidationError(ValidationError::Code::SideFunctionViolation,
                            "u^- decreases at alpha=" + at(a));
    }
    if (p > prev_p + kEps) {
      throw ValidationError(ValidationError::Code::SideFunctionViolation,
                            "u^+ increases at alpha=" + at(a));
    }
    prev_m = m;
    prev_p = p;
  }
  if (u.sides_.minus.value(1.0) > u.sides_.plus.value(1.0) + kEps) {
    throw ValidationError(ValidationError::Code::SideFunctionViolation,
                          "u^-(1) > u^+(1)");
  }
  return u;
}

FuzzyNumber FuzzyNumber::crisp(double x) {
  return validate(x, x, x, x, {}, {});
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
  std::vector<Piece> left, right;
  if (a < b) left.push_back(Piece::linear({a, b}, 1.0 / (b - a), -a / (b - a)));
  if (b < c) right.push_back(Piece::linear({b, c}, -1.0 / (c - b), c / (c - b)));
  return validate(a, c, b, b, std::move(left), std::move(right));
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d) {
  std::vector<Piece> left, right;
  if (a < b) left.push_back(Piece::linear({a, b}, 1.0 / (b - a), -a / (b - a)));
  if (c < d) right.push_back(Piece::linear({c, d}, -1.0 / (d - c), d / (d - c)));
  return validate(a, d, b, c, std::move(left), std::move(right));
}

double FuzzyNumber::membership(double x) const {
  if (x < s_lo_ || x > s_hi_) return 0.0;
  if (x >= c_lo_ && x <= c_hi_) return 1.0;
  if (x < c_lo_) {
    // a shared boundary point belongs to the piece on its right (upper value)
    for (auto it = left_.rbegin(); it != left_.rend(); ++it) {
      if (it->domain().contains(x)) return clamp01(it->value(x));
    }
  } else {
    // mirrored: the piece nearer the core wins at a shared boundary
    for (const Piece& p : right_) {
      if (p.domain().contains(x)) return clamp01(p.value(x));
    }
  }
  return 0.0;
}

AlphaCut FuzzyNumber::alpha_cut(double alpha) const {
  alpha = std::clamp(alpha, 0.0, 1.0);
  if (alpha == 0.0) return {0.0, s_lo_, s_hi_};
  return {alpha, sides_.minus.value(alpha), sides_.plus.value(alpha)};
}

std::vector<double> FuzzyNumber::breakpoints() const {
  std::vector<double> b{s_lo_, c_lo_, c_hi_, s_hi_};
  for (const Piece& p : left_) {
    b.push_back(p.domain().lo);
    b.push_back(p.domain().hi);
  }
  for (const Piece& p : right_) {
    b.push_back(p.domain().lo);
    b.push_back(p.domain().hi);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end(),
                      [](double x, double y) { return std::abs(x - y) < tol::kX; }),
          b.end());
  return b;
}

SideFunctions to_side_functions(const FuzzyNumber& u) { return u.side_functions(); }

namespace {

// Folds affine terms together and drops zero terms.
std::vector<SideTerm> normalized_terms(const std::vector<SideTerm>& in) {
  double a0 = 0.0, a1 = 0.0;
  std::vector<SideTerm> rest;
  for (const auto& t : in) {
    if (t.kind == SideTerm::Kind::Affine) {
      a0 += t.a0;
      a1 += t.a1;
    } else if (t.coef != 0.0) {
      rest.push_back(t);
    }
  }
  std::vector<SideTerm> out;
  if (a0 != 0.0 || a1 != 0.0 || rest.empty()) out.push_back(SideTerm::affine(a0, a1));
  for (auto& t : rest) out.push_back(std::move(t));
  return out;
}

Piece membership_piece(const SideSegment& seg, bool increasing_in_x) {
  SideSegment norm = seg;
  norm.terms = normalized_terms(seg.terms);
  const auto& ts = norm.terms;
  if (ts.size() == 1 && ts[0].kind == SideTerm::Kind::Affine && ts[0].a1 != 0.0) {
    double a1 = ts[0].a1, a0 = ts[0].a0;
    double x1 = norm.value(norm.alpha_lo), x2 = norm.value(norm.alpha_hi);
    return Piece::linear({std::min(x1, x2), std::max(x1, x2)}, 1.0 / a1, -a0 / a1);
  }
  if (ts.size() == 2 && ts[0].kind == SideTerm::Kind::Affine && ts[0].a1 == 0.0 &&
      ts[1].kind == SideTerm::Kind::Power) {
    const SideTerm& pw = ts[1];
    double x1 = norm.value(norm.alpha_lo), x2 = norm.value(norm.alpha_hi);
    Interval dom{std::min(x1, x2), std::max(x1, x2)};
    if (pw.e == 0.5) {
      // x = a0 + coef*sqrt(m*alpha + q)  =>  alpha quadratic in x
      double c2 = pw.coef * pw.coef;
      double A = 1.0 / (c2 * pw.m);
      double B = -2.0 * ts[0].a0 / (c2 * pw.m);
      double C = (ts[0].a0 * ts[0].a0 / c2 - pw.q) / pw.m;
      return Piece::quadratic(dom, A, B, C);
    }
    if (pw.m == -1.0 && pw.q == 1.0) {
      // x = center + sign*p*(1-alpha)^e: a generator branch
      double p = std::abs(pw.coef);
      int sign = pw.coef >= 0 ? 1 : -1;
      return Piece::inverse_generator(dom, GeneratorF::power(pw.e), p, sign, ts[0].a0);
    }
  }
  return Piece::side_inverse(std::move(norm), increasing_in_x);
}

void require(bool ok, const std::string& clause) {
  if (!ok) {
    throw ValidationError(ValidationError::Code::SideFunctionViolation,
                          "side functions violate " + clause);
  }
}

void check_curve(const SideCurve& c, bool nondecreasing, const char* name) {
  require(!c.segments.empty(), std::string("coverage of (0,1] (") + name + ")");
  require(std::abs(c.segments.front().alpha_lo) < tol::kX,
          std::string("coverage at alpha=0 (") + name + ")");
  require(std::abs(c.segments.back().alpha_hi - 1.0) < tol::kX,
          std::string("coverage at alpha=1 (") + name + ")");
  double prev_hi = c.segments.front().alpha_lo;
  double prev_val = c.segments.front().value(c.segments.front().alpha_lo);
  for (const auto& s : c.segments) {
    require(std::abs(s.alpha_lo - prev_hi) < tol::kX,
            std::string("contiguous alpha coverage (") + name + ")");
    double v1 = s.value(s.alpha_lo);
    double vm = s.value(0.5 * (s.alpha_lo + s.alpha_hi));
    double v2 = s.value(s.alpha_hi);
    bool mono = nondecreasing ? (prev_val <= v1 + kEps && v1 <= vm + kEps && vm <= v2 + kEps)
                              : (prev_val >= v1 - kEps && v1 >= vm - kEps && vm >= v2 - kEps);
    require(mono, std::string("monotonicity, clause (") +
                      (nondecreasing ? "i" : "ii") + ") near alpha=" + at(s.alpha_lo));
    prev_hi = s.alpha_hi;
    prev_val = v2;
  }
}

}  // namespace

FuzzyNumber from_side_functions(const SideFunctions& s) {
  check_curve(s.minus, /*nondecreasing=*/true, "u^-");
  check_curve(s.plus, /*nondecreasing=*/false, "u^+");
  require(s.minus.value(1.0) <= s.plus.value(1.0) + kEps, "clause (iv): u^-(1) <= u^+(1)");

  double s_lo = s.minus.value_at_zero();
  double c_lo = s.minus.value(1.0);
  double c_hi = s.plus.value(1.0);
  double s_hi = s.plus.value_at_zero();

  std::vector<Piece> left;
  double cur_x = s_lo;
  for (const auto& seg : s.minus.segments) {
    double x_start = seg.value(seg.alpha_lo);
    double x_end = seg.value(seg.alpha_hi);
    if (x_start > cur_x + tol::kX) {
      left.push_back(Piece::constant({cur_x, x_start}, seg.alpha_lo));
      cur_x = x_start;
    }
    if (!seg.is_plateau() && x_end > x_start + tol::kX) {
      left.push_back(membership_piece(seg, /*increasing_in_x=*/true));
      cur_x = x_end;
    }
  }
  if (c_lo > cur_x + tol::kX) {
    left.push_back(Piece::constant({cur_x, c_lo}, 1.0));
  }

  std::vector<Piece> right;
  cur_x = c_hi;
  for (auto it = s.plus.segments.rbegin(); it != s.plus.segments.rend(); ++it) {
    const auto& seg = *it;
    double x_inner = seg.value(seg.alpha_hi);
    double x_outer = seg.value(seg.alpha_lo);
    if (x_inner > cur_x + tol::kX) {
      right.push_back(Piece::constant({cur_x, x_inner}, seg.alpha_hi));
      cur_x = x_inner;
    }
    if (!seg.is_plateau() && x_outer > x_inner + tol::kX) {
      right.push_back(membership_piece(seg, /*increasing_in_x=*/false));
      cur_x = x_outer;
    }
  }

  return FuzzyNumber::validate(s_lo, s_hi, c_lo, c_hi, std::move(left), std::move(right));
}

}  // namespace fuzzn
