#include "kappa/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "kappa/intersection.hpp"
#include "kappa/pairing.hpp"

namespace kappa {

namespace {

using Clock = std::chrono::steady_clock;

Integer power(long base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void CheckReport::add(std::string id, const Rational& expected, const Rational& actual) {
  cases.push_back({std::move(id), expected, actual, expected == actual});
}

bool CheckReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

std::string format_text(const CheckReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << (c.pass ? "ok   " : "FAIL ") << report.suite << ' ' << c.id << " expected=" << to_string(c.expected)
        << " actual=" << to_string(c.actual) << '\n';
  }
  for (const auto& note : report.notes) out << "note " << report.suite << ' ' << note << '\n';
  out << report.suite << ": " << report.cases.size() - report.failures() << '/' << report.cases.size() << " passed\n";
  return out.str();
}

std::string format_json(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"id", c.id}, {"expected", to_string(c.expected)}, {"actual", to_string(c.actual)}, {"pass", c.pass}});
    out.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"cases", cases}, {"notes", r.notes}});
  }
  return out.dump(2) + "\n";
}

CheckReport check_divisor_relation(int n) {
  if (n < 2) throw std::invalid_argument("divisor relation needs n >= 2");
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "divisor";
  std::vector<Profile> qs;
  for (int i = 1; i < n; ++i) qs.push_back(Profile({{1, n - i}, {0, i + 2}}));
  const Profile qn({{0, n + 2}});
  for (const auto& p : partitions(n - 1)) {
    const Rational lhs = pair(p, qn) / 24;
    Rational rhs = 0;
    for (int i = 1; i < n; ++i) rhs += Rational(binomial(n - 2, i - 1)) * pair(p, qs[static_cast<std::size_t>(i - 1)]);
    report.add("n=" + std::to_string(n) + " p=" + p.to_string(), lhs, rhs);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

RationalMatrix psi_matrix_M(const Rational& m, int g) {
  if (g < 1) throw std::invalid_argument("psi_matrix_M needs g >= 1");
  RationalMatrix out(static_cast<std::size_t>(g + 1), static_cast<std::size_t>(g + 1));
  for (int h = 0; h <= g; ++h) {
    for (int c = 0; c <= g; ++c) {
      const int j = c == 0 ? 0 : c + 1;
      out(static_cast<std::size_t>(h), static_cast<std::size_t>(c)) = two_point_poly(h, j)(m);
    }
  }
  return out;
}

UniPoly determinant_polynomial(int g) {
  const int nodes = (g + 1) * (g + 2) / 2;
  std::vector<Rational> xs, ys;
  for (int m = 0; m < nodes; ++m) {
    xs.emplace_back(m);
    ys.push_back(determinant(psi_matrix_M(Rational(m), g)));
  }
  return UniPoly::interpolate(xs, ys);
}

UniPoly determinant_law(int g) {
  Rational c = ratio(power(3, static_cast<unsigned long>(g * (g + 1) / 2)), double_factorial(2L * g + 1) * factorial(g));
  if ((g * (g + 1) / 2) % 2) c = -c;
  UniPoly law = UniPoly::constant(c) * UniPoly::linear_root(2);
  for (int i = g + 3; i <= 2 * g + 1; ++i) law *= UniPoly::linear_root(i);
  return law;
}

CheckReport det_law_check(int g) {
  if (g < 1) throw std::invalid_argument("det_law_check needs g >= 1");
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "detlaw";
  const std::string tag = "g=" + std::to_string(g);
  const UniPoly det = determinant_polynomial(g);
  const UniPoly law = determinant_law(g);
  report.add(tag + " degree", g, det.degree());
  report.add(tag + " root m=2", 0, det(2));
  for (int i = g + 3; i <= 2 * g + 1; ++i) report.add(tag + " root m=" + std::to_string(i), 0, det(i));
  report.add(tag + " leading", law.leading(), det.leading());
  for (int i = 0; i <= std::max(det.degree(), law.degree()); ++i)
    report.add(tag + " coeff m^" + std::to_string(i), law.coefficient(i), det.coefficient(i));
  report.notes.push_back(tag + " d(m) = " + det.to_string("m"));
  report.elapsed = Clock::now() - start;
  return report;
}

const std::vector<std::vector<int>>& table1_rows() {
  static const std::vector<std::vector<int>> rows = {{},     {2},       {3},          {4},    {5},    {2, 2},
                                                     {2, 2, 2}, {2, 2, 2, 2}, {3, 2}, {4, 2}, {3, 3}};
  return rows;
}

Rational table1_formula(const std::vector<int>& rest, int genus, int d) {
  const Rational g = genus;
  auto x = [&](int s) -> Rational { return Rational(d + s) - g; };
  auto B = [&](int s, long p) -> Rational { return binomial(x(s), p); };
  const Rational A = g * (2 * g + 3) / 5;
  const Rational Bc = g * (8 * g * g + 60 * g + 37) / 105;
  const Rational C = g * (g + 1) * (2 * g + 3) * (2 * g + 5) / 70;
  const Rational D = g * (2 * g + 3) * (8 * g * g * g + 84 * g * g + 55 * g + 84) / 1155;
  const Rational E = g * (4 * g * g * g - 4 * g * g - 41 * g - 9) / 25;
  const Rational G = g * (8 * g * g * g * g * g - 60 * g * g * g * g - 70 * g * g * g + 1275 * g * g + 1067 * g + 30) / 125;
  const Rational H = g * (2 * g + 3) * (8 * g * g * g + 12 * g * g - 467 * g - 78) / 525;

  if (rest.empty()) return 1;
  if (rest == std::vector<int>{2}) return B(2, 2) + A;
  if (rest == std::vector<int>{3}) return B(3, 3) + B(3, 1) * A - Bc;
  if (rest == std::vector<int>{4}) return B(4, 4) + B(4, 2) * A - B(4, 1) * Bc + C;
  if (rest == std::vector<int>{5}) return B(5, 5) + B(5, 3) * A - B(5, 2) * Bc + B(5, 1) * C - D;
  if (rest == std::vector<int>{2, 2}) return 6 * B(4, 4) + B(4, 2) * 2 * A + E;
  if (rest == std::vector<int>{2, 2, 2}) return 90 * B(6, 6) + B(6, 4) * 18 * A + B(6, 2) * 3 * E + G;
  if (rest == std::vector<int>{2, 2, 2, 2}) {
    const Rational tail = g *
                          (16 * g * g * g * g * g * g * g - 288 * g * g * g * g * g * g + 1192 * g * g * g * g * g +
                           7440 * g * g * g * g - 57671 * g * g * g - 120522 * g * g - 34677 * g - 20490) /
                          625;
    return 2520 * B(8, 8) + B(8, 6) * 360 * A + B(8, 4) * 36 * E + B(8, 2) * 4 * G + tail;
  }
  if (rest == std::vector<int>{3, 2}) return 10 * B(5, 5) + B(5, 3) * 4 * A - B(5, 2) * Bc + B(5, 1) * E - H;
  if (rest == std::vector<int>{4, 2}) {
    const Rational c2 = g * (76 * g * g * g + 44 * g * g - 419 * g - 51) / 350;
    const Rational tail = g * (g + 2) * (2 * g + 1) * (2 * g + 3) * (2 * g * g - 11 * g - 61) / 350;
    return 15 * B(6, 6) + B(6, 4) * 7 * A - B(6, 3) * 3 * Bc + B(6, 2) * c2 - B(6, 1) * H + tail;
  }
  if (rest == std::vector<int>{3, 3}) {
    const Rational tail =
        g * (64 * g * g * g * g * g + 384 * g * g * g * g - 13376 * g * g * g - 76224 * g * g - 71315 * g - 15933) / 11025;
    return 20 * B(6, 6) + B(6, 4) * 8 * A - B(6, 3) * 2 * Bc + B(6, 2) * 2 * E - B(6, 1) * 2 * H + tail;
  }
  throw std::invalid_argument("no printed row for (d," + join(rest, ',') + ")");
}

CheckReport table1_check(int g, int d) {
  if (g < 1 || d < 1) throw std::invalid_argument("table1_check needs g, d >= 1");
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "table1";
  const Rational scale(power(24, static_cast<unsigned long>(g)) * factorial(g));
  for (const auto& rest : table1_rows()) {
    std::vector<int> exps{d};
    exps.insert(exps.end(), rest.begin(), rest.end());
    const int degree = std::accumulate(exps.begin(), exps.end(), 0);
    const int points = degree + 3 - 3 * g;
    if (points < static_cast<int>(exps.size()))
      throw std::domain_error("table1_check: row outside the geometric range");
    exps.resize(static_cast<std::size_t>(points), 0);
    report.add("g=" + std::to_string(g) + " d=" + std::to_string(d) + " (d" + (rest.empty() ? "" : "," + join(rest, ',')) + ")",
               table1_formula(rest, g, d), scale * psi_integral(g, exps));
  }
  report.elapsed = Clock::now() - start;
  return report;
}

Block11 block11(int g, int d) {
  if (g < 2 || d < 9) throw std::invalid_argument("block11 needs g >= 2 and d >= 9");
  Block11 b;
  b.genus = g;
  b.degree = d;
  b.points = d - 3 * g + 4;
  std::set<Profile> rows;
  for (int a = 0; a <= 4; ++a) {
    const Partition p(a == 0 ? std::vector<int>{d} : std::vector<int>{d - a, a});
    for (auto& q : profiles(p, g, b.points)) rows.insert(std::move(q));
  }
  if (rows.size() != 11)
    throw std::domain_error("block11: expected 11 profiles, found " + std::to_string(rows.size()));
  b.rows.assign(rows.begin(), rows.end());
  for (const auto& parts : std::vector<std::vector<int>>{{d},
                                                         {d - 1, 1},
                                                         {d - 2, 2},
                                                         {d - 2, 1, 1},
                                                         {d - 3, 3},
                                                         {d - 3, 2, 1},
                                                         {d - 3, 1, 1, 1},
                                                         {d - 4, 4},
                                                         {d - 4, 3, 1},
                                                         {d - 4, 2, 2},
                                                         {d - 4, 1, 1, 1, 1}})
    b.cols.emplace_back(parts);

  b.lambda_normalized = RationalMatrix(11, 11);
  b.large_normalized = RationalMatrix(11, 11);
  for (std::size_t r = 0; r < 11; ++r) {
    const Profile& q = b.rows[r];
    const auto large = std::max_element(q.vertices.begin(), q.vertices.end(), [](const auto& u, const auto& v) {
      return u.dimension() < v.dimension();
    });
    const Rational large_scale(power(24, static_cast<unsigned long>(large->genus)) * factorial(large->genus));
    const Rational lambda = lambda_norm(q);
    for (std::size_t c = 0; c < 11; ++c) {
      const Rational v = pair(b.cols[c], q);
      b.lambda_normalized(r, c) = v / lambda;
      b.large_normalized(r, c) = v * large_scale;
    }
  }
  b.det_lambda = determinant(b.lambda_normalized);
  b.det_large = determinant(b.large_normalized);
  return b;
}

Rational block11_printed(int genus) {
  const Rational g = genus;
  const Rational poly = 4928 * g * g * g * g - 275516 * g * g * g - 437138 * g * g + 62924 * g - 334941;
  return -(g - 1) * (g - 1) * poly / Rational(Integer(12936) * power(10, 7));
}

CheckReport block11_check(int g, int d1, int d2) {
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "block11";
  const Rational printed = block11_printed(g);
  const Rational ratio(2 * power(24, 6));
  const std::string tag = "g=" + std::to_string(g);
  Rational first;
  for (int d : {d1, d2}) {
    const Block11 b = block11(g, d);
    const std::string id = tag + " d=" + std::to_string(d);
    report.add(id + " |det|", abs(printed), abs(b.det_large));
    report.add(id + " |det pair/lambda| / |printed|", ratio, abs(b.det_lambda) / abs(printed));
    report.notes.push_back(id + " det=" + to_string(b.det_large) + " det pair/lambda=" + to_string(b.det_lambda) +
                           (sgn(b.det_large) == sgn(printed) ? " sign agrees" : " sign differs"));
    if (d == d1)
      first = b.det_large;
    else
      report.add(tag + " d-independence", first, b.det_large);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

CheckReport codim1_check(int g, int n) {
  if (g < 1 || n < 2) throw std::invalid_argument("codim1_check needs g >= 1, n >= 2");
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "codim1";
  const long expected = g == 1 ? n - 1 : ((n + 1) * (g + 1) + 1) / 2 - 1;
  const auto actual = kappa_rank(3 * g - 4 + n, g, n);
  report.add("g=" + std::to_string(g) + " n=" + std::to_string(n), expected, static_cast<long>(actual));
  report.elapsed = Clock::now() - start;
  return report;
}

namespace {

// [codim - 2][genus][points - 1]
constexpr std::array<std::array<std::array<int, 10>, 3>, 5> kTable2{{
    {{{0, 0, 0, 0, 1, 1, 2, 3, 4, 5}, {0, 1, 1, 2, 3, 5, 7, 10, 13, 17}, {2, 3, 5, 7, 11, 15, 21, 28, 36, 45}}},
    {{{0, 0, 0, 0, 0, 1, 1, 2, 3, 5}, {0, 0, 1, 1, 2, 3, 5, 7, 11, 15}, {1, 2, 3, 5, 7, 11, 15, 22, 30, 42}}},
    {{{0, 0, 0, 0, 0, 0, 1, 1, 2, 3}, {0, 0, 0, 1, 1, 2, 3, 5, 7, 11}, {1, 1, 2, 3, 5, 7, 11, 15, 22, 30}}},
    {{{0, 0, 0, 0, 0, 0, 0, 1, 1, 2}, {0, 0, 0, 0, 1, 1, 2, 3, 5, 7}, {0, 1, 1, 2, 3, 5, 7, 11, 15, 22}}},
    {{{0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 1, 2, 3, 5}, {0, 0, 1, 1, 2, 3, 5, 7, 11, 15}}},
}};

}  // namespace

std::optional<std::size_t> table2_printed(int codim, int genus, int points) {
  if (codim < 2 || codim > 6 || genus < 0 || genus > 2 || points < 1 || points > 10) return std::nullopt;
  return static_cast<std::size_t>(
      kTable2[static_cast<std::size_t>(codim - 2)][static_cast<std::size_t>(genus)][static_cast<std::size_t>(points - 1)]);
}

std::size_t table2_rank(int codim, int genus, int points) {
  if (2 * genus - 2 + points <= 0) return 0;
  return kappa_rank(3 * genus - 3 + points - codim, genus, points);
}

Table2Result table2(int e_min, int e_max, int g_max, int n_max, unsigned threads) {
  const auto start = Clock::now();
  Table2Result result;
  for (int e = e_min; e <= e_max; ++e)
    for (int g = 0; g <= g_max; ++g)
      for (int n = 1; n <= n_max; ++n) result.cells.push_back({e, g, n, 3 * g - 3 + n - e, 0});

  // Largest cells first so the pool drains evenly.
  std::vector<std::size_t> order(result.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = result.cells[a];
    const auto& y = result.cells[b];
    return std::pair(x.genus, x.degree) > std::pair(y.genus, y.degree);
  });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      auto& cell = result.cells[order[i]];
      cell.rank = table2_rank(cell.codim, cell.genus, cell.points);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
  }

  auto& report = result.report;
  report.suite = "table2";
  for (const auto& cell : result.cells) {
    if (auto printed = table2_printed(cell.codim, cell.genus, cell.points))
      report.add("e=" + std::to_string(cell.codim) + " g=" + std::to_string(cell.genus) + " n=" + std::to_string(cell.points),
                 static_cast<long>(*printed), static_cast<long>(cell.rank));
  }
  for (std::size_t i = 1; i < result.cells.size(); ++i) {
    const auto& prev = result.cells[i - 1];
    const auto& cell = result.cells[i];
    if (prev.codim == cell.codim && prev.genus == cell.genus && cell.rank < prev.rank)
      report.notes.push_back("rank decreases in n at e=" + std::to_string(cell.codim) + " g=" + std::to_string(cell.genus) +
                             " n=" + std::to_string(cell.points));
  }
  report.elapsed = Clock::now() - start;
  return result;
}

std::string table2_csv(const std::vector<Table2Cell>& cells) {
  std::ostringstream out;
  out << "codim,genus,points,degree,rank\n";
  for (const auto& c : cells) out << c.codim << ',' << c.genus << ',' << c.points << ',' << c.degree << ',' << c.rank << '\n';
  return out.str();
}

std::string table2_json(const std::vector<Table2Cell>& cells) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cells)
    out.push_back({{"codim", c.codim}, {"genus", c.genus}, {"points", c.points}, {"degree", c.degree}, {"rank", c.rank}});
  return out.dump(2) + "\n";
}

CheckReport partition_set_check(int d, int g, int n) {
  const auto start = Clock::now();
  CheckReport report;
  report.suite = "partition-sets";
  const auto achieved = profiles_all(d, g, n).achieved;
  const auto bound = partitions(d, 3 * g - 2 + n - d);
  const std::set<Partition> a(achieved.begin(), achieved.end()), b(bound.begin(), bound.end());
  long missing = 0, extra = 0;
  for (const auto& p : b) missing += !a.contains(p);
  for (const auto& p : a) extra += !b.contains(p);
  const std::string tag = "d=" + std::to_string(d) + " g=" + std::to_string(g) + " n=" + std::to_string(n);
  report.add(tag + " missing", 0, missing);
  report.add(tag + " extra", 0, extra);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace kappa
