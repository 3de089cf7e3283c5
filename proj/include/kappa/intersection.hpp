#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "kappa/rational.hpp"
#include "kappa/unipoly.hpp"

namespace kappa {

// Canonical integrand of <tau_{a_1} ... tau_{a_n}>_g: exponents sorted
// ascending with zero exponents kept, so relabeled marked points share a key.
struct TauKey {
  int genus = 0;
  std::vector<int> exponents;

  static TauKey make(int genus, std::span<const int> exponents);

  std::size_t points() const { return exponents.size(); }
  long exponent_sum() const;
  /// 3g - 3 + n
  long dimension() const { return 3L * genus - 3 + static_cast<long>(exponents.size()); }
  bool stable() const { return 2L * genus - 2 + static_cast<long>(exponents.size()) > 0; }

  friend bool operator==(const TauKey&, const TauKey&) = default;
  friend auto operator<=>(const TauKey&, const TauKey&) = default;
};

struct TauKeyHash {
  std::size_t operator()(const TauKey& key) const noexcept;
};

struct CacheLoadResult {
  std::size_t loaded = 0;     // entries added to the table
  std::size_t malformed = 0;  // lines skipped
  bool opened = false;
};

// Memo table of Witten-Kontsevich intersection numbers.
//
// Genus 0 and genus 1 values come from their closed forms, genus >= 2 from
// the DVV recursion on the largest exponent. Readers share the table; inserts
// are serialized and idempotent, so two threads computing the same key race
// benignly.
class IntersectionTable {
 public:
  IntersectionTable() = default;
  IntersectionTable(const IntersectionTable&) = delete;
  IntersectionTable& operator=(const IntersectionTable&) = delete;

  /// <prod tau_{a_i}>_g. Throws std::invalid_argument for an empty or negative
  /// exponent list and std::domain_error("unstable moduli space") when
  /// 2g - 2 + n <= 0. Returns 0 when sum(a_i) != 3g - 3 + n.
  Rational psi(int genus, std::span<const int> exponents);
  Rational psi(const TauKey& key);

  std::size_t size() const;
  void clear();

  /// Writes `g;a_1,...,a_n;num/den` lines, sorted lexicographically.
  /// Returns the number of entries written.
  std::size_t save(const std::filesystem::path& path) const;
  /// Overlays entries from `path`; existing entries are never replaced.
  /// Malformed lines are skipped and counted.
  CacheLoadResult load(const std::filesystem::path& path);

 private:
  Rational lookup(const TauKey& key);
  Rational compute(const TauKey& key);
  Rational dvv(const TauKey& key);

  mutable std::shared_mutex mutex_;
  std::unordered_map<TauKey, Rational, TauKeyHash> memo_;
};

/// Process-wide table used by the free functions below.
IntersectionTable& default_table();

Rational psi_integral(int genus, std::span<const int> exponents);
inline Rational psi_integral(int genus, std::initializer_list<int> exponents) {
  return psi_integral(genus, std::span<const int>(exponents.begin(), exponents.size()));
}

/// (n-3)! / prod a_i!, or 0 when sum(a) != n - 3. Requires n >= 3.
Rational genus0_closed(std::span<const int> exponents);

/// Closed genus-one formula
///   (1/24) multinomial(n; a) (1 - sum_{i>=2} sigma_i(a) / (i (i-1) C(n,i)))
/// with sigma_i the elementary symmetric functions; 0 when sum(a) != n.
Rational genus1_closed(std::span<const int> exponents);

/// n_j(h,m) = 24^h h! <tau_{m-j} tau_j tau_0^{m-3h+1}>_h.
/// Requires m >= max(3h-1, 0) and 0 <= j <= m; throws std::domain_error
/// otherwise (use two_point_poly outside that range).
Rational two_point(int h, long m, int j);

/// The degree-<=j polynomial in m extending n_j(h, .), interpolated at
/// m = max(3h-1, j), ..., max(3h-1, j) + j. Results are cached.
UniPoly two_point_poly(int h, int j);

/// P_j(h) = n_j(h, 3h-1) through the two-point KdV recursion alone, without
/// touching the intersection table. Requires h >= 1 and 0 <= j <= 3h-1.
Rational boundary_P(int h, int j);

/// P_j as a polynomial in h, interpolated from the recursion over j+1
/// consecutive h in the range where j <= 3h-1.
UniPoly boundary_P_poly(int j);

/// q_j(h,m) = sum_{p=0}^{j} C(m-3h, p) C(h, (j-p)/3), the second factor
/// being zero unless 3 | (j-p); C(x, p) is the falling-factorial binomial.
Rational q_sum(int h, int j, long m);

}  // namespace kappa
