#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>
#include <vector>

#include "kappa/intersection.hpp"
#include "oracles.hpp"

using namespace kappa;

namespace {

// Every sorted exponent vector with sum 3g-3+n, over all stable (g,n) with
// 3g-3+n <= max_dim.
void for_each_key(int max_dim, const std::function<void(int, const std::vector<int>&)>& visit) {
  for (int g = 0; 3 * g - 3 <= max_dim; ++g) {
    for (int n = 1; 3 * g - 3 + n <= max_dim; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const int dim = 3 * g - 3 + n;
      std::vector<int> a;
      std::function<void(int, int)> rec = [&](int left, int cap) {
        if (static_cast<int>(a.size()) == n) {
          if (left == 0) visit(g, a);
          return;
        }
        for (int x = std::min(left, cap); x >= 0; --x) {
          a.push_back(x);
          rec(left - x, x);
          a.pop_back();
        }
      };
      rec(dim, dim);
    }
  }
}

}  // namespace

TEST_CASE("known intersection numbers") {
  CHECK(psi_integral(0, {0, 0, 0}) == 1);
  CHECK(psi_integral(1, {1}) == ratio(1, 24));
  CHECK(psi_integral(1, {1, 1, 1}) == ratio(1, 12));
  CHECK(psi_integral(2, {4}) == ratio(1, 1152));
  CHECK(psi_integral(2, {3, 2}) == ratio(29, 5760));
  CHECK(psi_integral(3, {7}) == ratio(1, 82944));
  CHECK(psi_integral(1, {3, 0, 0}) == ratio(1, 24));
  CHECK(psi_integral(1, {2, 2, 0, 0}) == ratio(1, 6));
  CHECK(psi_integral(0, {2, 0, 0, 0, 0}) == 1);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(psi_integral(0, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(psi_integral(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(psi_integral(1, {-1, 2}), std::invalid_argument);
  CHECK(psi_integral(1, {2}) == 0);
  CHECK(psi_integral(2, {1, 1}) == 0);
}

TEST_CASE("table agrees with the plain DVV oracle") {
  for_each_key(9, [](int g, const std::vector<int>& a) {
    if (a.size() > 9) return;
    CAPTURE(g);
    CHECK(psi_integral(g, a) == oracle::wk(g, a));
  });
}

TEST_CASE("closed forms agree with the table") {
  for_each_key(10, [](int g, const std::vector<int>& a) {
    if (g == 0) CHECK(genus0_closed(a) == oracle::wk(0, a));
    if (g == 1) CHECK(genus1_closed(a) == oracle::wk(1, a));
  });
  CHECK(genus1_closed(std::vector<int>{2, 1}) == 0);
}

TEST_CASE("string and dilaton equations") {
  for_each_key(9, [](int g, const std::vector<int>& a) {
    std::vector<int> with0 = a;
    with0.push_back(0);
    Rational string = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      std::vector<int> b = a;
      --b[i];
      string += psi_integral(g, b);
    }
    CHECK(psi_integral(g, with0) == string);
    std::vector<int> with1 = a;
    with1.push_back(1);
    CHECK(psi_integral(g, with1) == Rational(2 * g - 2 + static_cast<long>(a.size())) * psi_integral(g, a));
  });
}

TEST_CASE("cold and warm tables give identical values") {
  IntersectionTable cold;
  const std::vector<int> a{5, 3, 2, 1, 0, 0};
  const Rational first = cold.psi(3, a);
  const Rational warm = cold.psi(3, a);
  CHECK(first == warm);
  cold.clear();
  CHECK(cold.size() == 0);
  CHECK(cold.psi(3, a) == first);
  CHECK(first == psi_integral(3, a));
}

TEST_CASE("concurrent readers see the same values") {
  IntersectionTable shared;
  std::vector<Rational> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < results.size(); ++t)
      pool.emplace_back([&, t] { results[t] = shared.psi(4, std::vector<int>{6, 4, 3, 1, 0}); });
  }
  for (const auto& r : results) CHECK(r == oracle::wk(4, {6, 4, 3, 1, 0}));
}

TEST_CASE("cache roundtrip and corrupt lines") {
  const auto dir = std::filesystem::temp_directory_path() / "kappa_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "memo.txt";

  IntersectionTable a;
  a.psi(1, std::vector<int>{1});
  a.psi(2, std::vector<int>{4, 1, 0});
  const auto written = a.save(path);
  CHECK(written == a.size());
  {
    std::ifstream in(path);
    std::string line;
    bool found = false;
    while (std::getline(in, line)) found = found || line == "1;1;1/24";
    CHECK(found);
  }

  IntersectionTable b;
  auto loaded = b.load(path);
  CHECK(loaded.opened);
  CHECK(loaded.loaded == written);
  CHECK(loaded.malformed == 0);
  CHECK(b.psi(2, std::vector<int>{4, 1, 0}) == a.psi(2, std::vector<int>{4, 1, 0}));

  {
    std::ofstream out(path, std::ios::app);
    out << "garbage\n2;4;1/0\n0;0,0;1\n1;2;7\n";
  }
  IntersectionTable c;
  loaded = c.load(path);
  CHECK(loaded.malformed == 4);
  CHECK(loaded.loaded == written);
  // Overlay never replaces a computed value.
  IntersectionTable d;
  const Rational truth = d.psi(2, std::vector<int>{4});
  {
    std::ofstream out(path);
    out << "2;4;5/7\n";
  }
  d.load(path);
  CHECK(d.psi(2, std::vector<int>{4}) == truth);

  IntersectionTable e;
  loaded = e.load(dir / "missing.txt");
  CHECK_FALSE(loaded.opened);
  CHECK(loaded.loaded == 0);
  {
    std::ofstream out(path, std::ios::trunc);
  }
  loaded = e.load(path);
  CHECK(loaded.opened);
  CHECK(loaded.loaded == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("two-point numbers") {
  CHECK(two_point(2, 5, 2) == ratio(29, 5));
  CHECK(two_point(0, 0, 0) == 1);
  CHECK(two_point(1, 2, 0) == 1);
  CHECK_THROWS_AS(two_point(2, 4, 1), std::domain_error);
  CHECK_THROWS_AS(two_point(1, 3, 4), std::domain_error);
  for (int h = 0; h <= 3; ++h) {
    for (int j = 0; j <= 5; ++j) {
      const UniPoly p = two_point_poly(h, j);
      CHECK(p.degree() <= j);
      for (long m = std::max(3L * h - 1, static_cast<long>(j)); m <= 3L * h + 8; ++m) CHECK(p(m) == two_point(h, m, j));
    }
  }
}

TEST_CASE("boundary recursion and q_sum") {
  for (int h = 1; h <= 3; ++h)
    for (int j = 0; j <= 3 * h - 1; ++j) CHECK(boundary_P(h, j) == two_point(h, 3 * h - 1, j));
  CHECK_THROWS_AS(boundary_P(1, 3), std::domain_error);
  CHECK(boundary_P_poly(0) == UniPoly::constant(1));
  CHECK(q_sum(1, 0, 5) == 1);
  CHECK(q_sum(0, 2, 4) == 6);
  CHECK(q_sum(1, 3, 4) == binomial(Rational(1), 3) + 1);
}
