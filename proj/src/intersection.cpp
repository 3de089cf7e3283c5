#include "kappa/intersection.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kappa {

TauKey TauKey::make(int genus, std::span<const int> exponents) {
  TauKey key{genus, std::vector<int>(exponents.begin(), exponents.end())};
  std::sort(key.exponents.begin(), key.exponents.end());
  return key;
}

long TauKey::exponent_sum() const { return std::accumulate(exponents.begin(), exponents.end(), 0L); }

std::size_t TauKeyHash::operator()(const TauKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.genus) * 0x9e3779b97f4a7c15ULL;
  for (int a : key.exponents) h ^= std::hash<int>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

struct Run {
  int value;
  int count;
};

std::vector<Run> runs_of(const std::vector<int>& sorted) {
  std::vector<Run> runs;
  for (int a : sorted) {
    if (!runs.empty() && runs.back().value == a)
      ++runs.back().count;
    else
      runs.push_back({a, 1});
  }
  return runs;
}

std::vector<int> with_extra(std::vector<int> v, std::initializer_list<int> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

}  // namespace

Rational IntersectionTable::psi(int genus, std::span<const int> exponents) {
  if (exponents.empty()) throw std::invalid_argument("empty exponent list");
  if (genus < 0) throw std::invalid_argument("negative genus");
  for (int a : exponents)
    if (a < 0) throw std::invalid_argument("negative exponent");
  return psi(TauKey::make(genus, exponents));
}

Rational IntersectionTable::psi(const TauKey& key) {
  if (!key.stable()) throw std::domain_error("unstable moduli space");
  return lookup(key);
}

Rational IntersectionTable::lookup(const TauKey& key) {
  if (key.exponent_sum() != key.dimension()) return 0;
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Rational value = compute(key);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

Rational IntersectionTable::compute(const TauKey& key) {
  if (key.genus == 0) return genus0_closed(key.exponents);
  if (key.genus == 1) return genus1_closed(key.exponents);
  const auto& e = key.exponents;
  if (e.size() > 1 && e.front() == 0) {
    // String equation.
    std::vector<int> rest(e.begin() + 1, e.end());
    Rational total = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0 || (i > 0 && rest[i] == rest[i - 1])) continue;
      const auto count = std::count(rest.begin(), rest.end(), rest[i]);
      std::vector<int> lowered = rest;
      --lowered[i];
      total += Rational(static_cast<long>(count)) * lookup(TauKey::make(key.genus, lowered));
    }
    return total;
  }
  if (e.size() > 1) {
    if (auto it = std::find(e.begin(), e.end(), 1); it != e.end()) {
      // Dilaton equation.
      std::vector<int> rest(e.begin(), e.end());
      rest.erase(rest.begin() + (it - e.begin()));
      return Rational(2L * key.genus - 3 + static_cast<long>(e.size())) * lookup(TauKey::make(key.genus, rest));
    }
  }
  return dvv(key);
}

// (2k+3)!! <tau_{k+1} prod tau_{b_i}>_g
//   = sum_j (2k+2b_j+1)!!/(2b_j-1)!! <tau_{k+b_j} prod_{i!=j} tau_{b_i}>_g
//   + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! [ <tau_r tau_s prod tau_{b_i}>_{g-1}
//         + sum_{g1+g2=g, I+J} <tau_r prod_I>_{g1} <tau_s prod_J>_{g2} ]
// Labeled subsets I are enumerated as sub-multisets weighted by binomials.
Rational IntersectionTable::dvv(const TauKey& key) {
  const int g = key.genus;
  const int k = key.exponents.back() - 1;
  const std::vector<int> rest(key.exponents.begin(), key.exponents.end() - 1);
  const auto runs = runs_of(rest);
  const int rest_size = static_cast<int>(rest.size());

  Rational total = 0;
  for (std::size_t r = 0, offset = 0; r < runs.size(); offset += static_cast<std::size_t>(runs[r].count), ++r) {
    const int b = runs[r].value;
    std::vector<int> e = rest;
    e[offset] = k + b;
    Integer coeff = double_factorial(2L * (k + b) + 1) / double_factorial(2L * b - 1) * runs[r].count;
    total += Rational(coeff) * lookup(TauKey::make(g, e));
  }

  std::vector<int> chosen(runs.size(), 0);
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    Rational inner = lookup(TauKey::make(g - 1, with_extra(rest, {r, s})));

    // Depth-first over how many copies of each run go into I.
    std::function<void(std::size_t, const Integer&, long, int)> split = [&](std::size_t idx, const Integer& mult,
                                                                             long sum_i, int size_i) {
      if (idx == runs.size()) {
        const long three_g1 = r + sum_i + 2 - size_i;
        if (three_g1 < 0 || three_g1 % 3 != 0) return;
        const int g1 = static_cast<int>(three_g1 / 3);
        const int g2 = g - g1;
        if (g1 > g || g2 < 0) return;
        const int size_j = rest_size - size_i;
        if (2 * g1 - 1 + size_i <= 0 || 2 * g2 - 1 + size_j <= 0) return;
        std::vector<int> left{r}, right{s};
        for (std::size_t t = 0; t < runs.size(); ++t) {
          left.insert(left.end(), static_cast<std::size_t>(chosen[t]), runs[t].value);
          right.insert(right.end(), static_cast<std::size_t>(runs[t].count - chosen[t]), runs[t].value);
        }
        Rational a = lookup(TauKey::make(g1, left));
        if (a == 0) return;
        inner += Rational(mult) * a * lookup(TauKey::make(g2, right));
        return;
      }
      for (int c = 0; c <= runs[idx].count; ++c) {
        chosen[idx] = c;
        split(idx + 1, mult * binomial(runs[idx].count, c), sum_i + static_cast<long>(c) * runs[idx].value,
              size_i + c);
      }
      chosen[idx] = 0;
    };
    split(0, Integer(1), 0, 0);

    total += ratio(double_factorial(2L * r + 1) * double_factorial(2L * s + 1), 2) * inner;
  }
  total /= Rational(double_factorial(2L * k + 3));
  return total;
}

std::size_t IntersectionTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void IntersectionTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

namespace {

std::string format_entry(const TauKey& key, const Rational& value) {
  std::string line = std::to_string(key.genus) + ';';
  for (std::size_t i = 0; i < key.exponents.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(key.exponents[i]);
  }
  line += ';';
  line += to_string(value);
  return line;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && out >= 0;
}

bool parse_entry(std::string_view line, TauKey& key, Rational& value) {
  const auto first = line.find(';');
  if (first == std::string_view::npos) return false;
  const auto second = line.find(';', first + 1);
  if (second == std::string_view::npos) return false;
  int genus = 0;
  if (!parse_int(line.substr(0, first), genus)) return false;
  std::vector<int> exps;
  std::string_view list = line.substr(first + 1, second - first - 1);
  while (true) {
    const auto comma = list.find(',');
    int a = 0;
    if (!parse_int(list.substr(0, comma), a)) return false;
    exps.push_back(a);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  try {
    value = parse_rational(line.substr(second + 1));
  } catch (const std::invalid_argument&) {
    return false;
  }
  key = TauKey::make(genus, exps);
  return key.stable() && key.exponent_sum() == key.dimension();
}

}  // namespace

std::size_t IntersectionTable::save(const std::filesystem::path& path) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lock(mutex_);
    lines.reserve(memo_.size());
    for (const auto& [key, value] : memo_) lines.push_back(format_entry(key, value));
  }
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  for (const auto& line : lines) out << line << '\n';
  return lines.size();
}

CacheLoadResult IntersectionTable::load(const std::filesystem::path& path) {
  CacheLoadResult result;
  std::ifstream in(path);
  if (!in) return result;
  result.opened = true;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TauKey key;
    Rational value;
    if (!parse_entry(line, key, value)) {
      ++result.malformed;
      continue;
    }
    std::unique_lock lock(mutex_);
    if (memo_.try_emplace(std::move(key), std::move(value)).second) ++result.loaded;
  }
  return result;
}

IntersectionTable& default_table() {
  static IntersectionTable table;
  return table;
}

Rational psi_integral(int genus, std::span<const int> exponents) { return default_table().psi(genus, exponents); }

Rational genus0_closed(std::span<const int> exponents) {
  const long n = static_cast<long>(exponents.size());
  if (n < 3) throw std::domain_error("unstable moduli space");
  if (std::accumulate(exponents.begin(), exponents.end(), 0L) != n - 3) return 0;
  Integer denom = 1;
  for (int a : exponents) denom *= factorial(a);
  return ratio(factorial(n - 3), denom);
}

Rational genus1_closed(std::span<const int> exponents) {
  const long n = static_cast<long>(exponents.size());
  if (n < 1) throw std::domain_error("unstable moduli space");
  if (std::accumulate(exponents.begin(), exponents.end(), 0L) != n) return 0;

  // sigma[i] = i-th elementary symmetric function, from prod (1 + a_t x).
  std::vector<Integer> sigma(static_cast<std::size_t>(n) + 1, 0);
  sigma[0] = 1;
  for (long t = 0; t < n; ++t)
    for (long i = t + 1; i >= 1; --i) sigma[static_cast<std::size_t>(i)] += sigma[static_cast<std::size_t>(i - 1)] * exponents[static_cast<std::size_t>(t)];

  Rational correction = 1;
  for (long i = 2; i <= n; ++i)
    correction -= ratio(sigma[static_cast<std::size_t>(i)], Integer(i * (i - 1)) * binomial(n, i));

  Integer multinomial = factorial(n);
  for (int a : exponents) multinomial /= factorial(a);
  return ratio(multinomial, 24) * correction;
}

Rational two_point(int h, long m, int j) {
  if (h < 0 || j < 0) throw std::domain_error("two_point: negative genus or index");
  if (m < std::max(3L * h - 1, 0L) || j > m)
    throw std::domain_error("two_point: m outside the geometric range; use two_point_poly");
  std::vector<int> exps(static_cast<std::size_t>(m - 3L * h + 3), 0);
  exps[0] = static_cast<int>(m - j);
  exps[1] = j;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 24, static_cast<unsigned long>(h));
  scale *= factorial(h);
  return Rational(scale) * psi_integral(h, exps);
}

UniPoly two_point_poly(int h, int j) {
  if (h < 0 || j < 0) throw std::domain_error("two_point_poly: negative genus or index");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, UniPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({h, j}); it != cache.end()) return it->second;
  }
  const long start = std::max(3L * h - 1, static_cast<long>(j));
  std::vector<Rational> xs, ys;
  for (long m = start; m <= start + j; ++m) {
    xs.emplace_back(m);
    ys.push_back(two_point(h, m, j));
  }
  UniPoly poly = UniPoly::interpolate(xs, ys);
  std::lock_guard lock(mutex);
  return cache.try_emplace({h, j}, std::move(poly)).first->second;
}

namespace {

Rational binomial_third(int h, int numerator) {
  if (numerator < 0 || numerator % 3 != 0) return 0;
  return binomial(Rational(h), numerator / 3);
}

// Unrestricted recursion; agrees with P_j(h) = n_j(h,3h-1) wherever the
// latter is defined and is polynomial in h everywhere.
Rational boundary_recursion(int h, int j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Rational> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({h, j}); it != memo.end()) return it->second;
  }
  const Rational inv = ratio(1, 2 * j + 1);
  Rational value = (inv - 2) * boundary_recursion(h, j - 1) + (inv - 1) * boundary_recursion(h, j - 2) +
                   inv * (binomial_third(h, j) + 2 * binomial_third(h, j - 1));
  if (h > 0) {
    Rational lower = 0;
    for (int k = 0; k <= 4; ++k) lower += Rational(binomial(4, k)) * boundary_recursion(h - 1, j - 1 - k);
    value += Rational(6 * h) * inv * lower;
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace({h, j}, std::move(value)).first->second;
}

}  // namespace

Rational boundary_P(int h, int j) {
  if (h < 1 || j < 0 || j > 3 * h - 1) throw std::domain_error("boundary_P: index out of range");
  return boundary_recursion(h, j);
}

UniPoly boundary_P_poly(int j) {
  if (j < 0) throw std::domain_error("boundary_P_poly: negative index");
  const int start = std::max(1, (j + 3) / 3);
  std::vector<Rational> xs, ys;
  for (int h = start; h <= start + j; ++h) {
    xs.emplace_back(h);
    ys.push_back(boundary_P(h, j));
  }
  return UniPoly::interpolate(xs, ys);
}

Rational q_sum(int h, int j, long m) {
  Rational total = 0;
  const Rational top(m - 3L * h);
  for (int p = 0; p <= j; ++p) {
    Rational second = binomial_third(h, j - p);
    if (second == 0) continue;
    total += binomial(top, p) * second;
  }
  return total;
}

}  // namespace kappa
