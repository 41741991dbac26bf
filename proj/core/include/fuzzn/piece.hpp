#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzn/generator.hpp"
#include "fuzzn/hermite.hpp"
#include "fuzzn/side_curve.hpp"

namespace fuzzn {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// One analytic branch segment of a membership function. Monotone on its
// domain; value and derivative are closed form.
class Piece {
 public:
  enum class Kind {
    Constant,         // c
    Linear,           // a*x + b
    Quadratic,        // a*x^2 + b*x + c
    InverseGenerator, // f^{-1}(sign * (x - center) / p)
    MonotoneHermite,  // cubic Hermite through (x, alpha, slope) nodes
    SideInverse,      // inverse of a closed-form side segment
  };

  static Piece constant(Interval d, double c);
  static Piece linear(Interval d, double a, double b);
  static Piece quadratic(Interval d, double a, double b, double c);
  static Piece inverse_generator(Interval d, GeneratorF f, double p, int sign,
                                 double center = 0.0);
  static Piece monotone_hermite(std::vector<HermiteNode> nodes);
  static Piece side_inverse(SideSegment seg, bool increasing);

  Kind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }

  double value(double x) const;
  double derivative(double x) const;

  // The side-function view of this piece: terms of alpha |-> x over the
  // piece's strictly monotone value range. Orientation is intrinsic.
  std::vector<SideTerm> side_terms() const;

  bool increasing() const;  // value nondecreasing over the domain

  // Parameter accessors for serialization.
  double const_c() const { return c_; }
  double lin_a() const { return a_; }
  double lin_b() const { return b_; }
  double quad_a() const { return a_; }
  double quad_b() const { return b_; }
  double quad_c() const { return c_; }
  const GeneratorF& generator() const { return *gen_; }
  double gen_p() const { return p_; }
  int gen_sign() const { return sign_; }
  double gen_center() const { return center_; }
  const std::vector<HermiteNode>& nodes() const { return nodes_; }
  const SideSegment& side_segment() const { return seg_; }
  bool side_increasing() const { return side_increasing_; }

  static std::string kind_name(Kind k);

 private:
  Piece() = default;

  Kind kind_ = Kind::Constant;
  Interval domain_;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;
  std::optional<GeneratorF> gen_;
  double p_ = 0.0;
  int sign_ = 1;
  double center_ = 0.0;
  std::vector<HermiteNode> nodes_;
  SideSegment seg_;
  bool side_increasing_ = true;
};

}  // namespace fuzzn
