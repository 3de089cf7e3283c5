#include "kappa/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kappa/intersection.hpp"

namespace kappa {

Rational pair(const Partition& p, const Profile& q) {
  const auto& vs = q.vertices;
  std::vector<int> residual;
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].dimension() > 0) {
      positive.push_back(i);
      residual.push_back(vs[i].dimension());
    }
  }
  if (p.degree() != std::accumulate(residual.begin(), residual.end(), 0)) return 0;

  // Distinct part values with multiplicities; the labeled functions that put
  // c_i copies of a value on vertex i number c! / prod c_i!.
  std::vector<std::pair<int, int>> groups;
  for (int a : p.parts) {
    if (!groups.empty() && groups.back().first == a)
      ++groups.back().second;
    else
      groups.emplace_back(a, 1);
  }

  const std::size_t nv = positive.size();
  std::vector<std::vector<int>> exps(nv);
  Rational total = 0;

  std::function<void(std::size_t, std::size_t, int, const Integer&)> assign;
  assign = [&](std::size_t gi, std::size_t vi, int left, const Integer& weight) {
    if (gi == groups.size()) {
      Rational product = Rational(weight);
      for (std::size_t i = 0; i < nv; ++i) {
        const auto& v = vs[positive[i]];
        std::vector<int> e = exps[i];
        e.insert(e.end(), static_cast<std::size_t>(v.points), 0);
        product *= psi_integral(v.genus, e);
        if (product == 0) return;
      }
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].dimension() > 0) continue;
        std::vector<int> e(static_cast<std::size_t>(vs[i].points), 0);
        product *= psi_integral(vs[i].genus, e);
      }
      total += product;
      return;
    }
    const auto [value, count] = groups[gi];
    if (vi == nv) {
      if (left == 0) assign(gi + 1, 0, groups.size() > gi + 1 ? groups[gi + 1].second : 0, weight);
      return;
    }
    if (vi + 1 == nv) {
      if (residual[vi] < left * value) return;
      residual[vi] -= left * value;
      exps[vi].insert(exps[vi].end(), static_cast<std::size_t>(left), value + 1);
      assign(gi, nv, 0, weight);
      exps[vi].resize(exps[vi].size() - static_cast<std::size_t>(left));
      residual[vi] += left * value;
      return;
    }
    for (int c = std::min(left, residual[vi] / value); c >= 0; --c) {
      residual[vi] -= c * value;
      exps[vi].insert(exps[vi].end(), static_cast<std::size_t>(c), value + 1);
      assign(gi, vi + 1, left - c, weight * binomial(left, c));
      exps[vi].resize(exps[vi].size() - static_cast<std::size_t>(c));
      residual[vi] += c * value;
    }
  };
  assign(0, 0, groups.empty() ? 0 : groups.front().second, Integer(1));
  return total;
}

Rational lambda_norm(const Profile& q) {
  Integer denom = 1;
  for (const auto& v : q.vertices) {
    Integer pow24;
    mpz_ui_pow_ui(pow24.get_mpz_t(), 24, static_cast<unsigned long>(v.genus));
    denom *= pow24 * factorial(v.genus);
  }
  return ratio(1, denom);
}

PairingMatrix pairing_matrix(int d, int g, int n, unsigned threads) {
  if (g < 0 || n < 0 || d < 1 || d > 3 * g - 3 + n)
    throw std::invalid_argument("pairing_matrix requires 1 <= d <= 3g-3+n");
  PairingMatrix m;
  m.degree = d;
  m.genus = g;
  m.points = n;
  auto set = profiles_all(d, g, n);
  m.row_labels = std::move(set.profiles);
  m.col_labels = partitions(d);
  m.entries = RationalMatrix(m.row_labels.size(), m.col_labels.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < m.row_labels.size(); r = next++) {
      const Profile& q = m.row_labels[r];
      const Partition shape = q.shape();
      const Rational scale = 1 / lambda_norm(q);
      for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
        if (!refines(m.col_labels[c], shape)) continue;
        m.entries(r, c) = pair(m.col_labels[c], q) * scale;
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m.row_labels.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return m;
}

std::size_t kappa_rank(int d, int g, int n, unsigned threads) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::domain_error("unstable moduli space");
  if (d < 0 || d > 3 * g - 3 + n) return 0;
  if (d == 0) return 1;
  return exact_rank(pairing_matrix(d, g, n, threads).entries);
}

std::string dump(const PairingMatrix& m) {
  std::ostringstream out;
  out << "R(" << m.degree << ';' << m.genus << ',' << m.points << ") rows=" << m.row_labels.size()
      << " cols=" << m.col_labels.size() << '\n';
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    out << m.row_labels[r].to_string();
    for (std::size_t c = 0; c < m.col_labels.size(); ++c) out << '\t' << to_string(m.entries(r, c));
    out << '\n';
  }
  return out.str();
}

}  // namespace kappa
