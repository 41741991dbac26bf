#include "doctest.h"

#include "fixtures.hpp"
#include "fuzzn/arith.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/io.hpp"
#include "fuzzn/smooth.hpp"

using namespace fuzzn;

TEST_CASE("serialize / parse round trip on the corpus") {
  for (const FuzzyNumber& u : fixtures::corpus()) {
    FuzzyNumber v = io::parse_fuzzy(io::serialize_fuzzy(u));
    CHECK(d_inf(u, v) <= 1e-12);
    CHECK(v.support_lo() == doctest::Approx(u.support_lo()));
    CHECK(v.support_hi() == doctest::Approx(u.support_hi()));
    CHECK(v.core_lo() == doctest::Approx(u.core_lo()));
    CHECK(v.core_hi() == doctest::Approx(u.core_hi()));
    // serialization is stable: a second pass is byte identical
    CHECK(io::serialize_fuzzy(v) == io::serialize_fuzzy(u));
  }
}

TEST_CASE("round trip preserves derived sums exactly") {
  FuzzyNumber s = add(fixtures::tri(), make_w_p(0.5));
  FuzzyNumber v = io::parse_fuzzy(io::serialize_fuzzy(s));
  for (int k = 0; k <= 100; ++k) {
    double a = k / 100.0;
    CHECK(v.side_functions().minus.value(a) ==
          doctest::Approx(s.side_functions().minus.value(a)).epsilon(1e-12).scale(1));
  }
}

TEST_CASE("smoother spec round trip") {
  SmootherSpec spec;
  spec.p = 0.25;
  spec.c_l = 0.1;
  spec.s_l = {0.25, 0.5, 1.0};
  spec.s_r = {1.0};
  spec.defensive_l = {0.75};
  SmootherSpec back = io::parse_smoother_spec(io::serialize_smoother_spec(spec));
  CHECK(back.p == doctest::Approx(0.25));
  CHECK(back.c_l == doctest::Approx(0.1));
  REQUIRE(back.s_l.size() == 3);
  CHECK(back.s_l[1] == doctest::Approx(0.5));
  REQUIRE(back.defensive_l.size() == 1);
}

TEST_CASE("parse errors carry a message") {
  CHECK_THROWS_AS(io::parse_fuzzy("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_fuzzy("{}"), ParseError);
  CHECK_THROWS_AS(io::parse_fuzzy(R"({"fuzzy_number":{"support":[0,1]}})"),
                  ParseError);
  try {
    io::parse_fuzzy("{}");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).size() > 0);
  }
}

TEST_CASE("parsed numbers are validated") {
  // structurally fine JSON describing a non-monotone branch must be rejected
  std::string text = R"({"fuzzy_number":{
    "support":[0,2],"core":[1,1],
    "left":[{"kind":"linear","domain":[0,1],"params":{"a":-0.5,"b":1.0}}],
    "right":[{"kind":"linear","domain":[1,2],"params":{"a":-1.0,"b":2.0}}]}})";
  CHECK_THROWS_AS(io::parse_fuzzy(text), ValidationError);
}

TEST_CASE("csv emitters") {
  AnalysisReport r = analyze(fixtures::jump());
  std::string csv = io::analysis_csv(r);
  CHECK(csv.find("x,side,kind,level,beta,gamma,left_slope,right_slope") !=
        std::string::npos);
  CHECK(csv.find("jump") != std::string::npos);

  std::vector<ConvergenceRow> rows{{0.5, 0.5, true}, {0.25, 0.25, true}};
  std::string ccsv = io::convergence_csv(rows);
  CHECK(ccsv.find("p,d_inf,diff_ok") != std::string::npos);
  CHECK(ccsv.find("0.25") != std::string::npos);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-7, 123456.789}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
}
