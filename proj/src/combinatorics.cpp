#include "kappa/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kappa {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int a : parts)
    if (a <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

namespace {

int parse_positive(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 9) throw std::invalid_argument("malformed " + std::string(context));
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed " + std::string(context));
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (true) {
    const auto plus = text.find('+');
    const int a = parse_positive(text.substr(0, plus), "partition");
    if (a == 0) throw std::invalid_argument("partition parts must be positive");
    parts.push_back(a);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return Partition(std::move(parts));
}

Profile::Profile(std::vector<ProfileVertex> vs) : vertices(std::move(vs)) {
  for (const auto& v : vertices)
    if (v.genus < 0 || v.points < 1 || 2 * v.genus + v.points <= 2)
      throw std::invalid_argument("profile vertex outside Q");
  std::sort(vertices.begin(), vertices.end());
}

Partition Profile::shape() const {
  std::vector<int> dims;
  for (const auto& v : vertices)
    if (v.dimension() > 0) dims.push_back(v.dimension());
  return Partition(std::move(dims));
}

int Profile::total_points() const {
  int total = 0;
  for (const auto& v : vertices) total += v.points;
  return total;
}

std::string Profile::to_string() const {
  std::string out;
  for (const auto& v : vertices) out += "(" + std::to_string(v.genus) + "," + std::to_string(v.points) + ")";
  return out;
}

Profile Profile::parse(std::string_view text) {
  std::vector<ProfileVertex> vs;
  if (text.empty()) throw std::invalid_argument("malformed profile");
  while (!text.empty()) {
    if (text.front() != '(') throw std::invalid_argument("malformed profile");
    const auto close = text.find(')');
    if (close == std::string_view::npos) throw std::invalid_argument("malformed profile");
    const auto body = text.substr(1, close - 1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("malformed profile");
    vs.push_back({parse_positive(body.substr(0, comma), "profile"), parse_positive(body.substr(comma + 1), "profile")});
    text.remove_prefix(close + 1);
  }
  return Profile(std::move(vs));
}

int StableWeightedGraph::degree(int i) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == i) + (b == i);
  return d;
}

std::vector<Partition> partitions(int d, std::optional<int> max_len) {
  std::vector<Partition> out;
  if (d < 0) return out;
  const int limit = max_len.value_or(d);
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      Partition p;
      p.parts = current;
      out.push_back(std::move(p));
      return;
    }
    if (static_cast<int>(current.size()) >= limit) return;
    for (int a = std::min(remaining, largest); a >= 1; --a) {
      current.push_back(a);
      rec(remaining - a, a);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.degree() != coarse.degree()) throw std::invalid_argument("refines: degree mismatch");
  std::vector<int> residual = coarse.parts;
  std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == fine.parts.size()) return true;
    const int a = fine.parts[idx];
    for (std::size_t b = 0; b < residual.size(); ++b) {
      if (residual[b] < a) continue;
      bool seen = false;  // blocks with equal residual are interchangeable
      for (std::size_t c = 0; c < b; ++c) seen = seen || residual[c] == residual[b];
      if (seen) continue;
      residual[b] -= a;
      if (place(idx + 1)) return true;
      residual[b] += a;
    }
    return false;
  };
  return place(0);
}

KappaCombo faber_expand(const Partition& p) {
  // A permutation is a set partition of the indices together with a cyclic
  // order on each block; a block of size b carries (b-1)! cyclic orders.
  KappaCombo combo;
  const std::size_t k = p.parts.size();
  std::vector<int> block_of(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int blocks) {
    if (idx == k) {
      std::vector<int> sums(static_cast<std::size_t>(blocks), 0), sizes(static_cast<std::size_t>(blocks), 0);
      for (std::size_t t = 0; t < k; ++t) {
        sums[static_cast<std::size_t>(block_of[t])] += p.parts[t];
        ++sizes[static_cast<std::size_t>(block_of[t])];
      }
      Integer weight = 1;
      for (int s : sizes) weight *= factorial(s - 1);
      std::sort(sums.begin(), sums.end(), std::greater<>());
      combo.terms[sums] += Rational(weight);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block_of[idx] = b;
      rec(idx + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return combo;
}

FaberMatrix faber_matrix(int d) {
  FaberMatrix fm;
  fm.order = partitions(d);
  std::stable_sort(fm.order.begin(), fm.order.end(),
                   [](const Partition& a, const Partition& b) { return a.length() > b.length(); });
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < fm.order.size(); ++i) index[fm.order[i].parts] = i;
  fm.matrix = RationalMatrix(fm.order.size(), fm.order.size());
  for (std::size_t r = 0; r < fm.order.size(); ++r)
    for (const auto& [monomial, coeff] : faber_expand(fm.order[r]).terms) fm.matrix(r, index.at(monomial)) = coeff;
  return fm;
}

std::vector<Profile> profiles(const Partition& p, int g, int n) {
  const int d = p.degree();
  const int k = p.length();
  const int lower = d + k + 2 - (2 * g + n);
  std::set<Profile> found;
  std::vector<int> genera(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int idx, int sum) {
    if (sum > g) return;
    if (idx == k) {
      if (sum < lower) return;
      const int m = 2 * g - 2 + n + sum - d;
      if (m < k) return;
      std::vector<ProfileVertex> vs;
      for (int i = 0; i < k; ++i) {
        const int gi = genera[static_cast<std::size_t>(i)];
        vs.push_back({gi, p.parts[static_cast<std::size_t>(i)] + 3 - 3 * gi});
      }
      vs.insert(vs.end(), static_cast<std::size_t>(m - k), ProfileVertex{0, 3});
      found.insert(Profile(std::move(vs)));
      return;
    }
    for (int gi = 0; gi <= (p.parts[static_cast<std::size_t>(idx)] + 2) / 3; ++gi) {
      genera[static_cast<std::size_t>(idx)] = gi;
      rec(idx + 1, sum + gi);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

ProfileSet profiles_all(int d, int g, int n) {
  ProfileSet out;
  std::set<Profile> all;
  for (const auto& p : partitions(d)) {
    auto qs = profiles(p, g, n);
    if (qs.empty()) continue;
    out.achieved.push_back(p);
    all.insert(qs.begin(), qs.end());
  }
  out.profiles.assign(all.begin(), all.end());
  return out;
}

namespace {

StableWeightedGraph build_witness(const std::vector<ProfileVertex>& vs, int e) {
  StableWeightedGraph g;
  const int count = static_cast<int>(vs.size());
  if (vs.front().points == 1) {
    if (count == 1) {
      g.vertices.push_back({vs.front().genus, 1});
      return g;
    }
    // Hang the one-pointed vertex off a vertex of the remainder that still
    // has a free marking.
    StableWeightedGraph rest = build_witness(std::vector<ProfileVertex>(vs.begin() + 1, vs.end()), e - 1);
    g.vertices.push_back({vs.front().genus, 0});
    g.vertices.insert(g.vertices.end(), rest.vertices.begin(), rest.vertices.end());
    for (const auto& [a, b] : rest.edges) g.edges.emplace_back(a + 1, b + 1);
    for (int i = 1; i <= count - 1; ++i) {
      if (g.vertices[static_cast<std::size_t>(i)].legs > 0) {
        --g.vertices[static_cast<std::size_t>(i)].legs;
        g.edges.emplace_back(0, i);
        return g;
      }
    }
    throw std::logic_error("witness_graph: no free marking to attach to");
  }

  // Slots (i, s) for s = 1..m_i; a path uses ((i,2),(i+1,1)), further edges
  // pair the lexicographically smallest free slots.
  std::vector<std::vector<bool>> used(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) used[i].assign(static_cast<std::size_t>(vs[i].points) + 1, false);
  for (int i = 0; i + 1 < count; ++i) {
    g.edges.emplace_back(i, i + 1);
    used[static_cast<std::size_t>(i)][2] = true;
    used[static_cast<std::size_t>(i + 1)][1] = true;
  }
  std::vector<int> free_slots;
  for (int i = 0; i < count; ++i)
    for (int s = 1; s <= vs[static_cast<std::size_t>(i)].points; ++s)
      if (!used[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) free_slots.push_back(i);
  for (int extra = 0; extra < e - (count - 1); ++extra)
    g.edges.emplace_back(free_slots[static_cast<std::size_t>(2 * extra)],
                         free_slots[static_cast<std::size_t>(2 * extra + 1)]);
  for (int i = 0; i < count; ++i)
    g.vertices.push_back({vs[static_cast<std::size_t>(i)].genus, vs[static_cast<std::size_t>(i)].points - g.degree(i)});
  return g;
}

}  // namespace

StableWeightedGraph witness_graph(const Profile& q, int edges) {
  const int count = static_cast<int>(q.vertices.size());
  if (count == 0 || edges < count - 1 || q.total_points() < 2 * edges)
    throw std::invalid_argument("no witness graph: needs |q| - 1 <= edges and 2 * edges <= total points");
  std::vector<ProfileVertex> vs = q.vertices;
  std::stable_sort(vs.begin(), vs.end(), [](const ProfileVertex& a, const ProfileVertex& b) {
    return a.points != b.points ? a.points < b.points : a.genus < b.genus;
  });
  StableWeightedGraph g = build_witness(vs, edges);
  validate_graph(g);
  if (profile_of(g) != q || static_cast<int>(g.edges.size()) != edges)
    throw std::logic_error("witness_graph: construction does not realize the profile");
  return g;
}

GraphInvariants validate_graph(const StableWeightedGraph& graph) {
  const int count = static_cast<int>(graph.vertices.size());
  if (count == 0) throw std::invalid_argument("empty graph");
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= count || b >= count) throw std::invalid_argument("edge endpoint out of range");
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  for (int i = 1; i < count; ++i)
    if (find(i) != find(0)) throw std::invalid_argument("disconnected");

  GraphInvariants inv;
  int genus_sum = 0;
  for (int i = 0; i < count; ++i) {
    const auto& v = graph.vertices[static_cast<std::size_t>(i)];
    if (v.genus < 0 || v.legs < 0) throw std::invalid_argument("negative vertex weight at " + std::to_string(i));
    if (2 * v.genus + v.legs + graph.degree(i) <= 2) throw std::invalid_argument("unstable vertex " + std::to_string(i));
    genus_sum += v.genus;
    inv.points += v.legs;
  }
  inv.genus = genus_sum + static_cast<int>(graph.edges.size()) - count + 1;
  return inv;
}

Profile profile_of(const StableWeightedGraph& graph) {
  std::vector<ProfileVertex> vs;
  for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i) {
    const auto& v = graph.vertices[static_cast<std::size_t>(i)];
    vs.push_back({v.genus, v.legs + graph.degree(i)});
  }
  return Profile(std::move(vs));
}

}  // namespace kappa
