#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/smooth.hpp"
#include "fuzzn/tolerances.hpp"

using namespace fuzzn;

TEST_CASE("validate accepts the triangular number") {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  CHECK(u.support_lo() == 0.0);
  CHECK(u.core_lo() == 1.0);
  CHECK(u.boundary_left() == doctest::Approx(0.0));
}

TEST_CASE("validate rejects values above 1") {
  std::vector<Piece> left{Piece::linear({0.0, 1.0}, 1.2, 0.0)};  // reaches 1.2
  std::vector<Piece> right{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
  CHECK_THROWS_AS(
      FuzzyNumber::validate(0, 2, 1, 1, std::move(left), std::move(right)),
      ValidationError);
  try {
    std::vector<Piece> l{Piece::linear({0.0, 1.0}, 1.2, 0.0)};
    std::vector<Piece> r{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
    FuzzyNumber::validate(0, 2, 1, 1, std::move(l), std::move(r));
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::ValueOutOfRange);
  }
}

TEST_CASE("validate accepts the parabolic smoother pieces") {
  std::vector<Piece> left{Piece::quadratic({-1.0, 0.0}, -1.0, 0.0, 1.0)};
  std::vector<Piece> right{Piece::quadratic({0.0, 1.0}, -1.0, 0.0, 1.0)};
  CHECK_NOTHROW(
      FuzzyNumber::validate(-1, 1, 0, 0, std::move(left), std::move(right)));
}

TEST_CASE("validate rejects gaps and non-monotone pieces") {
  SUBCASE("gap in branch") {
    std::vector<Piece> left{Piece::linear({0.0, 0.4}, 1.0, 0.0),
                            Piece::linear({0.6, 1.0}, 1.0, 0.0)};
    std::vector<Piece> right{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
    CHECK_THROWS_AS(
        FuzzyNumber::validate(0, 2, 1, 1, std::move(left), std::move(right)),
        ValidationError);
  }
  SUBCASE("decreasing piece on the left branch") {
    std::vector<Piece> left{Piece::linear({0.0, 1.0}, -0.5, 1.0)};
    std::vector<Piece> right{Piece::linear({1.0, 2.0}, -1.0, 2.0)};
    CHECK_THROWS_AS(
        FuzzyNumber::validate(0, 2, 1, 1, std::move(left), std::move(right)),
        ValidationError);
  }
}

TEST_CASE("membership examples") {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  CHECK(u.membership(0.5) == doctest::Approx(0.5));
  CHECK(u.membership(3.0) == 0.0);
  FuzzyNumber w = make_w_p(1.0);
  CHECK(w.membership(0.5) == doctest::Approx(0.75));
}

TEST_CASE("membership at a jump takes the upper value") {
  FuzzyNumber u = fixtures::jump();
  CHECK(u.membership(0.5) == doctest::Approx(0.75));
  CHECK(u.membership(0.5 - 1e-9) == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("alpha cut examples") {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  AlphaCut c = u.alpha_cut(0.5);
  CHECK(c.lo == doctest::Approx(0.5));
  CHECK(c.hi == doctest::Approx(1.5));
  AlphaCut top = u.alpha_cut(1.0);
  CHECK(top.lo == doctest::Approx(1.0));
  CHECK(top.hi == doctest::Approx(1.0));

  FuzzyNumber w = make_w_p(1.0);
  AlphaCut cw = w.alpha_cut(0.75);
  CHECK(cw.lo == doctest::Approx(-0.5));
  CHECK(cw.hi == doctest::Approx(0.5));
}

TEST_CASE("nested alpha cuts on the corpus") {
  for (const FuzzyNumber& u : fixtures::corpus()) {
    AlphaCut prev = u.alpha_cut(0.0);
    for (int k = 1; k <= 100; ++k) {
      AlphaCut cur = u.alpha_cut(k / 100.0);
      CHECK(cur.lo >= prev.lo - 1e-9);
      CHECK(cur.hi <= prev.hi + 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("cut endpoint consistency with membership") {
  for (const FuzzyNumber& u : fixtures::corpus()) {
    for (int k = 1; k < 100; ++k) {
      double a = k / 100.0;
      AlphaCut c = u.alpha_cut(a);
      CHECK(u.membership(c.lo) >= a - 1e-9);
      double left_of = c.lo - 1e-6;
      if (left_of > u.support_lo()) {
        // skip plateau levels where lo sits at a jump abscissa
        if (std::abs(u.membership(c.lo) - u.membership(left_of)) > 1e-9) {
          CHECK(u.membership(left_of) < a + 1e-5);
        }
      }
    }
  }
}

TEST_CASE("side functions of linear branches") {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  const SideFunctions& s = u.side_functions();
  for (double a : {0.0, 0.25, 0.5, 1.0}) {
    CHECK(s.minus.value(a) == doctest::Approx(a));
    CHECK(s.plus.value(a) == doctest::Approx(2.0 - a));
  }
}

TEST_CASE("from_side_functions reconstructs tri(0,1,2)") {
  SideFunctions s;
  SideSegment a{0.0, 1.0, {SideTerm::affine(0.0, 1.0)}};
  SideSegment b{0.0, 1.0, {SideTerm::affine(2.0, -1.0)}};
  s.minus.segments = {a};
  s.plus.segments = {b};
  FuzzyNumber u = from_side_functions(s);
  CHECK(u.support_lo() == doctest::Approx(0.0));
  CHECK(u.support_hi() == doctest::Approx(2.0));
  CHECK(u.core_lo() == doctest::Approx(1.0));
  CHECK(u.membership(0.5) == doctest::Approx(0.5));
}

TEST_CASE("from_side_functions handles the degenerate singleton") {
  SideFunctions s;
  s.minus.segments = {{0.0, 1.0, {SideTerm::affine(0.0, 0.0)}}};
  s.plus.segments = {{0.0, 1.0, {SideTerm::affine(0.0, 0.0)}}};
  FuzzyNumber u = from_side_functions(s);
  CHECK(u.is_crisp());
  CHECK(u.membership(0.0) == 1.0);
  CHECK(u.membership(0.1) == 0.0);
}

TEST_CASE("plateau in u^- becomes a membership jump") {
  SideFunctions s;
  s.minus.segments = {
      {0.0, 0.25, {SideTerm::affine(0.0, 2.0)}},   // x = 2 alpha, up to 0.5
      {0.25, 0.75, {SideTerm::affine(0.5, 0.0)}},  // plateau at x = 0.5
      {0.75, 1.0, {SideTerm::affine(-1.0, 2.0)}},  // x = 2 alpha - 1, to 1
  };
  s.plus.segments = {{0.0, 1.0, {SideTerm::affine(2.0, -1.0)}}};
  FuzzyNumber u = from_side_functions(s);
  CHECK(u.membership(0.5) == doctest::Approx(0.75));          // upper value
  CHECK(u.membership(0.5 - 1e-7) == doctest::Approx(0.25).epsilon(1e-5));
  CHECK(u.side_functions().minus.value(0.5) == doctest::Approx(0.5));
}

TEST_CASE("side-function round trip on the corpus") {
  for (const FuzzyNumber& u : fixtures::corpus()) {
    FuzzyNumber v = from_side_functions(to_side_functions(u));
    for (int k = 0; k <= 100; ++k) {
      double a = k / 100.0;
      CHECK(v.side_functions().minus.value(a) ==
            doctest::Approx(u.side_functions().minus.value(a)).epsilon(tol::kX).scale(1));
      CHECK(v.side_functions().plus.value(a) ==
            doctest::Approx(u.side_functions().plus.value(a)).epsilon(tol::kX).scale(1));
    }
  }
}

TEST_CASE("from_side_functions rejects a decreasing u^-") {
  SideFunctions s;
  s.minus.segments = {{0.0, 1.0, {SideTerm::affine(1.0, -1.0)}}};
  s.plus.segments = {{0.0, 1.0, {SideTerm::affine(2.0, 0.0)}}};
  CHECK_THROWS_AS(from_side_functions(s), ValidationError);
}
