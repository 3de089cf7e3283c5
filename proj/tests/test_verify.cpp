#include <doctest.h>

#include <json.hpp>

#include "kappa/intersection.hpp"
#include "kappa/pairing.hpp"
#include "kappa/verify.hpp"

using namespace kappa;

TEST_CASE("divisor relation small cases") {
  const auto three = check_divisor_relation(3);
  REQUIRE(three.cases.size() == 2);
  CHECK(three.cases[0].id == "n=3 p=2");
  CHECK(three.cases[0].expected == ratio(1, 24));
  CHECK(three.cases[1].expected == ratio(1, 4));
  CHECK(three.passed());
  CHECK(check_divisor_relation(2).passed());
  CHECK_THROWS_AS(check_divisor_relation(1), std::invalid_argument);
}

TEST_CASE("psi_matrix_M") {
  for (int m = 0; m <= 8; ++m) {
    const auto M = psi_matrix_M(m, 1);
    const Rational c2 = binomial(Rational(m), 2);
    CHECK(M == RationalMatrix({{Rational(1), c2}, {Rational(1), c2 - (m - 2)}}));
  }
  for (int g = 1; g <= 4; ++g) {
    const auto M = psi_matrix_M(2, g);
    for (std::size_t c = 0; c <= static_cast<std::size_t>(g); ++c) {
      CHECK(M(0, c) == M(1, c));
      CHECK(M(0, c) == (c <= 1 ? 1 : 0));
    }
  }
  CHECK(psi_matrix_M(5, 2)(2, 1) == ratio(29, 5));
}

TEST_CASE("determinant law") {
  CHECK(determinant_polynomial(1) == UniPoly::linear_root(2) * Rational(-1));
  CHECK(determinant_law(1) == determinant_polynomial(1));
  for (int g = 1; g <= 4; ++g) CHECK(det_law_check(g).passed());
  CHECK(determinant_polynomial(2)(5) == 0);
}

TEST_CASE("table 1 rows") {
  CHECK(table1_formula({2}, 1, 3) == 7);
  CHECK(table1_formula({2}, 2, 3) == ratio(29, 5));
  CHECK(table1_formula({}, 3, 11) == 1);
  CHECK(table1_rows().size() == 11);
  CHECK(table1_check(1, 5).passed());
  CHECK(table1_check(2, 9).passed());
  CHECK_THROWS_AS(table1_formula({7}, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(table1_check(3, 3), std::domain_error);
}

TEST_CASE("block of eleven") {
  const auto b = block11(2, 9);
  CHECK(b.rows.size() == 11);
  CHECK(b.points == 7);
  CHECK(block11(2, 10).det_large == b.det_large);
  CHECK(block11_printed(2) == ratio(101, 3200000));
  CHECK(block11_printed(1) == 0);
  CHECK_THROWS_AS(block11(3, 9), std::domain_error);
  CHECK_THROWS_AS(block11(1, 9), std::invalid_argument);
}

TEST_CASE("codimension one") {
  CHECK(codim1_check(1, 5).passed());
  CHECK(codim1_check(1, 5).cases[0].expected == 4);
  CHECK(codim1_check(2, 2).cases[0].expected == 4);
  CHECK(codim1_check(2, 4).cases[0].expected == 7);
  CHECK(codim1_check(2, 4).passed());
}

TEST_CASE("table 2 lookups") {
  CHECK(table2_printed(2, 2, 10) == 45u);
  CHECK(table2_printed(3, 1, 9) == 11u);
  CHECK(table2_printed(6, 2, 10) == 15u);
  CHECK_FALSE(table2_printed(7, 0, 1).has_value());
  CHECK(table2_rank(2, 0, 5) == 1);
  CHECK(table2_rank(2, 0, 2) == 0);
  const auto small = table2(2, 3, 1, 6, 2);
  CHECK(small.cells.size() == 2 * 2 * 6);
  CHECK(small.report.passed());
  CHECK(table2_csv({{2, 1, 6, 4, 5}}) == "codim,genus,points,degree,rank\n2,1,6,4,5\n");
  const auto j = nlohmann::json::parse(table2_json({{2, 1, 6, 4, 5}}));
  CHECK(j[0]["rank"] == 5);
}

TEST_CASE("partition sets") {
  CHECK(partition_set_check(2, 1, 3).passed());
  CHECK(partition_set_check(4, 2, 4).passed());
  CHECK(partition_set_check(5, 2, 2).passed());
}

TEST_CASE("report formatting") {
  CheckReport r;
  r.suite = "demo";
  r.add("one", ratio(1, 2), ratio(2, 4));
  r.add("two", 1, 2);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  const auto text = format_text(r);
  CHECK(text.find("ok   demo one expected=1/2 actual=1/2") != std::string::npos);
  CHECK(text.find("FAIL demo two") != std::string::npos);
  const auto j = nlohmann::json::parse(format_json({r}));
  CHECK(j[0]["suite"] == "demo");
  CHECK(j[0]["cases"][1]["pass"] == false);
  CHECK(j[0]["cases"][0]["expected"] == "1/2");
}
