#include "fuzzn/piece.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzn/errors.hpp"

namespace fuzzn {

Piece Piece::constant(Interval d, double c) {
  Piece p;
  p.kind_ = Kind::Constant;
  p.domain_ = d;
  p.c_ = c;
  return p;
}

Piece Piece::linear(Interval d, double a, double b) {
  Piece p;
  p.kind_ = Kind::Linear;
  p.domain_ = d;
  p.a_ = a;
  p.b_ = b;
  return p;
}

Piece Piece::quadratic(Interval d, double a, double b, double c) {
  Piece p;
  p.kind_ = Kind::Quadratic;
  p.domain_ = d;
  p.a_ = a;
  p.b_ = b;
  p.c_ = c;
  return p;
}

Piece Piece::inverse_generator(Interval d, GeneratorF f, double p_radius, int sign,
                               double center) {
  Piece p;
  p.kind_ = Kind::InverseGenerator;
  p.domain_ = d;
  p.gen_ = f;
  p.p_ = p_radius;
  p.sign_ = sign;
  p.center_ = center;
  return p;
}

Piece Piece::monotone_hermite(std::vector<HermiteNode> nodes) {
  Piece p;
  p.kind_ = Kind::MonotoneHermite;
  p.domain_ = {std::min(nodes.front().x, nodes.back().x),
               std::max(nodes.front().x, nodes.back().x)};
  p.nodes_ = std::move(nodes);
  return p;
}

Piece Piece::side_inverse(SideSegment seg, bool increasing) {
  double x_at_lo = seg.value(seg.alpha_lo);
  double x_at_hi = seg.value(seg.alpha_hi);
  Piece p;
  p.kind_ = Kind::SideInverse;
  p.domain_ = {std::min(x_at_lo, x_at_hi), std::max(x_at_lo, x_at_hi)};
  p.seg_ = std::move(seg);
  p.side_increasing_ = increasing;
  return p;
}

double Piece::value(double x) const {
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::Linear:
      return a_ * x + b_;
    case Kind::Quadratic:
      return (a_ * x + b_) * x + c_;
    case Kind::InverseGenerator: {
      double s = sign_ * (x - center_) / p_;
      return gen_->inverse(std::clamp(s, 0.0, 1.0));
    }
    case Kind::MonotoneHermite:
      return hermite_value(nodes_, x);
    case Kind::SideInverse: {
      // Invert the side segment: find alpha with g(alpha) = x.
      double lo = seg_.alpha_lo;
      double hi = seg_.alpha_hi;
      bool g_inc = side_increasing_;
      for (int i = 0; i < 100 && hi - lo > 0; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double v = seg_.value(mid);
        bool go_up = g_inc ? (v < x) : (v > x);
        if (go_up) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

double Piece::derivative(double x) const {
  switch (kind_) {
    case Kind::Constant:
      return 0.0;
    case Kind::Linear:
      return a_;
    case Kind::Quadratic:
      return 2.0 * a_ * x + b_;
    case Kind::InverseGenerator: {
      double s = std::abs(x - center_) / p_;
      double e = gen_->exponent();
      double dinv;  // (f^{-1})'(s) = -(1/e) s^{1/e - 1}
      if (s <= 0.0) {
        if (e < 1.0) {
          dinv = 0.0;
        } else if (e == 1.0) {
          dinv = -1.0;
        } else {
          dinv = -std::numeric_limits<double>::infinity();
        }
      } else {
        dinv = -(1.0 / e) * std::pow(s, 1.0 / e - 1.0);
      }
      return dinv * sign_ / p_;
    }
    case Kind::MonotoneHermite:
      return hermite_derivative(nodes_, x);
    case Kind::SideInverse: {
      double alpha = value(x);
      double g = seg_.derivative(alpha);
      if (std::isinf(g)) return 0.0;
      if (g == 0.0) return std::numeric_limits<double>::infinity();
      return 1.0 / g;
    }
  }
  return 0.0;
}

bool Piece::increasing() const {
  return value(domain_.hi) >= value(domain_.lo);
}

std::vector<SideTerm> Piece::side_terms() const {
  switch (kind_) {
    case Kind::Constant:
      return {};
    case Kind::Linear:
      return {SideTerm::affine(-b_ / a_, 1.0 / a_)};
    case Kind::Quadratic: {
      if (a_ == 0.0) return {SideTerm::affine(-c_ / b_, 1.0 / b_)};
      double v = -b_ / (2.0 * a_);
      double k = c_ - b_ * b_ / (4.0 * a_);
      // alpha = a (x - v)^2 + k  =>  x = v +- sqrt((alpha - k)/a)
      double mid = 0.5 * (domain_.lo + domain_.hi);
      double coef = (mid >= v) ? 1.0 : -1.0;
      return {SideTerm::affine(v, 0.0), SideTerm::power(coef, 1.0 / a_, -k / a_, 0.5)};
    }
    case Kind::InverseGenerator:
      // x = center + sign * p * f(alpha)
      return {SideTerm::affine(center_, 0.0),
              SideTerm::power(sign_ * p_, -1.0, 1.0, gen_->exponent())};
    case Kind::MonotoneHermite:
      return {SideTerm::hermite_inverse(1.0, nodes_)};
    case Kind::SideInverse:
      return seg_.terms;
  }
  return {};
}

std::string Piece::kind_name(Kind k) {
  switch (k) {
    case Kind::Constant:
      return "constant";
    case Kind::Linear:
      return "linear";
    case Kind::Quadratic:
      return "quadratic";
    case Kind::InverseGenerator:
      return "inverse_generator";
    case Kind::MonotoneHermite:
      return "monotone_hermite";
    case Kind::SideInverse:
      return "side_inverse";
  }
  return "?";
}

}  // namespace fuzzn
