#include "fuzzn/side_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzn/errors.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

namespace {

double invert_hermite(std::span<const HermiteNode> nodes, double alpha) {
  double xlo = nodes.front().x;
  double xhi = nodes.back().x;
  if (nodes.size() == 1) return xlo;
  // orientation in x, not in node order (nodes may be stored x-descending)
  bool inc = (nodes.back().alpha - nodes.front().alpha) * (xhi - xlo) >= 0.0;
  double lo = std::min(xlo, xhi);
  double hi = std::max(xlo, xhi);
  for (int i = 0; i < 100 && hi - lo > 0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double v = hermite_value(nodes, mid);
    bool go_right = inc ? (v < alpha) : (v > alpha);
    if (go_right) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SideTerm SideTerm::affine(double a0, double a1) {
  SideTerm t;
  t.kind = Kind::Affine;
  t.a0 = a0;
  t.a1 = a1;
  return t;
}

SideTerm SideTerm::power(double coef, double m, double q, double e) {
  SideTerm t;
  t.kind = Kind::Power;
  t.coef = coef;
  t.m = m;
  t.q = q;
  t.e = e;
  return t;
}

SideTerm SideTerm::hermite_inverse(double coef, std::vector<HermiteNode> nodes) {
  SideTerm t;
  t.kind = Kind::HermiteInverse;
  t.coef = coef;
  t.nodes = std::move(nodes);
  return t;
}

double SideTerm::value(double alpha) const {
  switch (kind) {
    case Kind::Affine:
      return a0 + a1 * alpha;
    case Kind::Power: {
      double base = m * alpha + q;
      if (base < 0.0) base = 0.0;  // endpoint rounding
      return coef * std::pow(base, e);
    }
    case Kind::HermiteInverse:
      return coef * invert_hermite(nodes, alpha);
  }
  return 0.0;
}

double SideTerm::derivative(double alpha) const {
  switch (kind) {
    case Kind::Affine:
      return a1;
    case Kind::Power: {
      double base = m * alpha + q;
      if (base <= 0.0) {
        if (e > 1.0) return 0.0;
        if (e == 1.0) return coef * m;
        return coef * m > 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
      }
      return coef * e * m * std::pow(base, e - 1.0);
    }
    case Kind::HermiteInverse: {
      double x = invert_hermite(nodes, alpha);
      double d = hermite_derivative(nodes, x);
      if (d == 0.0) {
        return coef > 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
      }
      return coef / d;
    }
  }
  return 0.0;
}

void SideTerm::scale(double c) {
  switch (kind) {
    case Kind::Affine:
      a0 *= c;
      a1 *= c;
      break;
    case Kind::Power:
    case Kind::HermiteInverse:
      coef *= c;
      break;
  }
}

double SideSegment::value(double alpha) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.value(alpha);
  return s;
}

double SideSegment::derivative(double alpha) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.derivative(alpha);
  return s;
}

SideSegment SideSegment::restricted(double lo, double hi) const {
  SideSegment s = *this;
  s.alpha_lo = lo;
  s.alpha_hi = hi;
  return s;
}

bool SideSegment::is_plateau() const {
  for (const auto& t : terms) {
    switch (t.kind) {
      case SideTerm::Kind::Affine:
        if (t.a1 != 0.0) return false;
        break;
      default:
        if (t.coef != 0.0) return false;
        break;
    }
  }
  return true;
}

const SideSegment& SideCurve::segment_at(double alpha) const {
  for (const auto& s : segments) {
    if (alpha <= s.alpha_hi) return s;
  }
  return segments.back();
}

double SideCurve::value(double alpha) const {
  if (alpha <= segments.front().alpha_lo) return right_limit(alpha);
  return segment_at(alpha).value(alpha);
}

double SideCurve::right_limit(double alpha) const {
  for (const auto& s : segments) {
    if (alpha < s.alpha_hi) return s.value(std::max(alpha, s.alpha_lo));
  }
  return segments.back().value(segments.back().alpha_hi);
}

std::vector<double> SideCurve::breakpoints() const {
  std::vector<double> b;
  b.push_back(0.0);
  for (const auto& s : segments) b.push_back(s.alpha_hi);
  if (b.back() != 1.0) b.push_back(1.0);
  return b;
}

SideCurve combine(const SideCurve& a, double ca, const SideCurve& b, double cb) {
  std::vector<double> cuts;
  for (const auto& s : a.segments) {
    cuts.push_back(s.alpha_lo);
    cuts.push_back(s.alpha_hi);
  }
  for (const auto& s : b.segments) {
    cuts.push_back(s.alpha_lo);
    cuts.push_back(s.alpha_hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < tol::kX; }),
             cuts.end());

  SideCurve out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i];
    double hi = cuts[i + 1];
    double mid = 0.5 * (lo + hi);
    SideSegment seg;
    seg.alpha_lo = lo;
    seg.alpha_hi = hi;
    for (const SideTerm& t : a.segment_at(mid).terms) {
      SideTerm c = t;
      c.scale(ca);
      seg.terms.push_back(std::move(c));
    }
    for (const SideTerm& t : b.segment_at(mid).terms) {
      SideTerm c = t;
      c.scale(cb);
      seg.terms.push_back(std::move(c));
    }
    out.segments.push_back(std::move(seg));
  }
  return out;
}

SideCurve affine_image(const SideCurve& a, double c, double shift) {
  SideCurve out = a;
  for (auto& seg : out.segments) {
    for (auto& t : seg.terms) t.scale(c);
    seg.terms.push_back(SideTerm::affine(shift, 0.0));
  }
  return out;
}

}  // namespace fuzzn
