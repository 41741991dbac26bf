#include "doctest.h"

#include <cmath>

#include "fuzzn/piece.hpp"

using namespace fuzzn;

TEST_CASE("linear piece evaluates and inverts") {
  Piece p = Piece::linear({0.0, 1.0}, 1.0, 0.0);
  CHECK(p.value(0.5) == doctest::Approx(0.5));
  CHECK(p.derivative(0.3) == doctest::Approx(1.0));
  auto terms = p.side_terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].value(0.25) == doctest::Approx(0.25));
}

TEST_CASE("quadratic piece side terms invert exactly") {
  // left branch of the parabolic smoother, p = 2
  Piece p = Piece::quadratic({-2.0, 0.0}, -0.25, 0.0, 1.0);
  CHECK(p.value(-1.0) == doctest::Approx(0.75));
  CHECK(p.derivative(-1.0) == doctest::Approx(0.5));
  SideSegment seg{0.0, 1.0, p.side_terms()};
  for (double a : {0.0, 0.3, 0.75, 0.99, 1.0}) {
    double x = seg.value(a);
    CHECK(p.value(x) == doctest::Approx(a).epsilon(1e-12));
  }
  // d x / d alpha = 1 / (d alpha / d x)
  double a = 0.4;
  double x = seg.value(a);
  CHECK(seg.derivative(a) == doctest::Approx(1.0 / p.derivative(x)));
}

TEST_CASE("inverse generator piece matches the closed form") {
  GeneratorF f = GeneratorF::power(0.5);  // sqrt(1 - t)
  Piece p = Piece::inverse_generator({-1.0, 0.0}, f, 1.0, -1);
  // f^{-1}(s) = 1 - s^2, so membership is 1 - x^2 on the left
  CHECK(p.value(-0.5) == doctest::Approx(0.75));
  CHECK(p.derivative(-0.5) == doctest::Approx(1.0));
  SideSegment seg{0.0, 1.0, p.side_terms()};
  CHECK(seg.value(0.75) == doctest::Approx(-0.5));
}

TEST_CASE("monotone hermite piece interpolates nodes with given slopes") {
  std::vector<HermiteNode> nodes{{-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
  Piece p = Piece::monotone_hermite(nodes);
  CHECK(p.value(-1.0) == doctest::Approx(0.0));
  CHECK(p.value(0.0) == doctest::Approx(1.0));
  CHECK(p.derivative(0.0) == doctest::Approx(0.0));
  CHECK(p.derivative(-1.0) == doctest::Approx(1.0));
  // strictly increasing inside
  double prev = -1e-12;
  for (int i = 0; i <= 20; ++i) {
    double v = p.value(-1.0 + i / 20.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("side-inverse piece round-trips through bisection") {
  SideSegment seg;
  seg.alpha_lo = 0.0;
  seg.alpha_hi = 1.0;
  // x = alpha - sqrt(1 - alpha): the left side of tri(0,1,2) + w_1
  seg.terms = {SideTerm::affine(0.0, 1.0), SideTerm::power(-1.0, -1.0, 1.0, 0.5)};
  Piece p = Piece::side_inverse(seg, true);
  CHECK(p.domain().lo == doctest::Approx(-1.0));
  CHECK(p.domain().hi == doctest::Approx(1.0));
  for (double a : {0.1, 0.5, 0.9}) {
    double x = seg.value(a);
    CHECK(p.value(x) == doctest::Approx(a).epsilon(1e-12));
  }
  // closed-form solution: alpha = 1 - s^2 with s = (-1 + sqrt(5 - 4x)) / 2
  double x = 0.25;
  double s = (-1.0 + std::sqrt(5.0 - 4.0 * x)) / 2.0;
  CHECK(p.value(x) == doctest::Approx(1.0 - s * s).epsilon(1e-12));
}
