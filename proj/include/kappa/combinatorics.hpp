#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"

namespace kappa {

// Weakly decreasing list of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts into non-increasing order; throws std::invalid_argument on a
  /// non-positive part.
  explicit Partition(std::vector<int> parts);

  int degree() const;
  int length() const { return static_cast<int>(parts.size()); }

  /// "a1+a2+...+ak"
  std::string to_string() const;
  /// Accepts "a1+a2+..." in any order. Throws std::invalid_argument.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// A vertex of a profile: genus and total special points (markings plus
// half-edges). Lies in Q = {(g,m) : m >= 1, 2g + m > 2}.
struct ProfileVertex {
  int genus = 0;
  int points = 0;

  /// 3g - 3 + m
  int dimension() const { return 3 * genus - 3 + points; }

  friend bool operator==(const ProfileVertex&, const ProfileVertex&) = default;
  friend auto operator<=>(const ProfileVertex&, const ProfileVertex&) = default;
};

// Canonical multiset of vertices (sorted ascending). All the pairing data a
// stable graph carries.
struct Profile {
  std::vector<ProfileVertex> vertices;

  Profile() = default;
  /// Sorts; throws std::invalid_argument when a vertex lies outside Q.
  explicit Profile(std::vector<ProfileVertex> vertices);

  /// Partition of the positive vertex dimensions.
  Partition shape() const;
  int total_points() const;

  /// "(g1,m1)(g2,m2)..."
  std::string to_string() const;
  static Profile parse(std::string_view text);

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

struct StableWeightedGraph {
  struct Vertex {
    int genus = 0;
    int legs = 0;  // marked points n_i
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // loops allowed

  /// Edge-ends at vertex i; a loop counts twice.
  int degree(int i) const;
};

struct GraphInvariants {
  int genus = 0;
  int points = 0;
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

// Linear combination of kappa monomials. The key lists the kappa indices in
// non-increasing order.
struct KappaCombo {
  std::map<std::vector<int>, Rational> terms;
};

/// All partitions of d, optionally with at most max_len parts, in
/// reverse-lexicographic order: (d), (d-1,1), ..., (1,...,1).
std::vector<Partition> partitions(int d, std::optional<int> max_len = std::nullopt);

/// True when the parts of `fine` group into blocks summing to the parts of
/// `coarse`. Throws std::invalid_argument when the degrees differ.
bool refines(const Partition& fine, const Partition& coarse);

/// psi(p) = sum over sigma in S_k of kappa_{sigma(p)}.
KappaCombo faber_expand(const Partition& p);

struct FaberMatrix {
  std::vector<Partition> order;  // row/column labels
  RationalMatrix matrix;         // row p: coefficients of psi(p) in the kappa basis
};

/// Labels are partitions(d) regrouped by decreasing length, which makes the
/// matrix unit upper triangular.
FaberMatrix faber_matrix(int d);

/// Q(p; g, n): profiles with shape p realized by a stable graph of genus g
/// with n markings, one per admissible choice of vertex genera.
std::vector<Profile> profiles(const Partition& p, int g, int n);

struct ProfileSet {
  std::vector<Profile> profiles;     // Q(d;g,n), sorted
  std::vector<Partition> achieved;  // P(d;g,n), in partitions(d) order
};

ProfileSet profiles_all(int d, int g, int n);

/// Connected stable weighted graph with `edges` edges whose profile is q,
/// built by the path-plus-pairing construction. Throws std::invalid_argument
/// when edges < |q| - 1 or sum m_i < 2 * edges.
StableWeightedGraph witness_graph(const Profile& q, int edges);

/// Checks connectivity and vertex stability and returns (g(G), n(G)).
/// Throws std::invalid_argument("disconnected") or
/// ("unstable vertex <i>").
GraphInvariants validate_graph(const StableWeightedGraph& graph);

Profile profile_of(const StableWeightedGraph& graph);

}  // namespace kappa
