#include <doctest.h>

#include <vector>

#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"
#include "kappa/unipoly.hpp"
#include "oracles.hpp"

using namespace kappa;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(ratio(2, 24)) == "1/12");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(Rational(-2), 3) == -4);
  CHECK(binomial(ratio(1, 2), 2) == ratio(-1, 8));
  CHECK(binomial(Rational(7), 0) == 1);
}

TEST_CASE("unipoly interpolation recovers a polynomial") {
  const UniPoly p({Rational(3), Rational(0), ratio(-1, 2), Rational(2)});
  std::vector<Rational> xs, ys;
  for (int x = -2; x <= 1; ++x) {
    xs.emplace_back(x);
    ys.push_back(p(x));
  }
  const UniPoly q = UniPoly::interpolate(xs, ys);
  CHECK(q == p);
  CHECK(q.degree() == 3);
  CHECK(q.leading() == 2);
  CHECK(UniPoly().degree() == -1);
  CHECK((UniPoly::linear_root(2) * UniPoly::linear_root(3))(Rational(4)) == 2);
  CHECK((p - p).is_zero());
}

TEST_CASE("exact_rank examples") {
  CHECK(exact_rank(RationalMatrix({{1, 0}, {1, 1}})) == 2);
  CHECK(exact_rank(RationalMatrix({{1, 4}, {1, 6}})) == 2);
  CHECK(exact_rank(RationalMatrix(3, 5)) == 0);
  CHECK(exact_rank(RationalMatrix({{ratio(1, 2), ratio(1, 3)}, {Rational(3), Rational(2)}})) == 1);
}

TEST_CASE("rank agrees with minor enumeration and is permutation invariant") {
  // Deterministic pseudo-random small matrices with planted dependencies.
  unsigned state = 12345;
  auto next = [&] {
    state = state * 1103515245u + 12345u;
    return static_cast<int>((state >> 16) % 7) - 3;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 6), cols = 1 + static_cast<std::size_t>((trial / 6) % 6);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = ratio(next(), 1 + (next() + 3) % 4);
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * ratio(2, 3) - m(1, c);
    const auto rank = exact_rank(m);
    CHECK(rank == oracle::minor_rank(m));
    std::vector<std::size_t> rr, cc;
    for (std::size_t r = rows; r-- > 0;) rr.push_back(r);
    for (std::size_t c = 0; c < cols; ++c) cc.push_back((c + 1) % cols);
    CHECK(exact_rank(m.submatrix(rr, cc)) == rank);
    CHECK(exact_rank(m.transpose()) == rank);
  }
}

TEST_CASE("determinant and inverse") {
  const RationalMatrix m({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == 18);
  CHECK(m * inverse(m) == RationalMatrix::identity(3));
  CHECK(determinant(RationalMatrix({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(inverse(RationalMatrix({{1, 2}, {2, 4}})), std::domain_error);
  CHECK(determinant(RationalMatrix({{0, 1}, {1, 0}})) == -1);
}
