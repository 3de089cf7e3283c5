#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kappa/combinatorics.hpp"
#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"

namespace kappa {

struct PairingMatrix {
  int degree = 0;
  int genus = 0;
  int points = 0;
  std::vector<Profile> row_labels;
  std::vector<Partition> col_labels;
  RationalMatrix entries;
};

/// <psi(p), [G]> for any stable graph G with profile q: sum over labeled
/// functions from the parts of p to the vertices of q that fill every
/// positive-dimensional vertex exactly, of prod_i <tau_{a+1}... tau_0^{m_i}>_{g_i}.
Rational pair(const Partition& p, const Profile& q);

/// prod_i 1 / (24^{g_i} g_i!)
Rational lambda_norm(const Profile& q);

/// R(d;g,n): rows profiles_all(d,g,n), columns partitions(d), entries
/// pair/lambda_norm. Requires 1 <= d <= 3g-3+n; throws std::invalid_argument.
/// Rows are filled by up to `threads` workers; the result does not depend on it.
PairingMatrix pairing_matrix(int d, int g, int n, unsigned threads = 1);

/// Rank of the degree-d combinatorial kappa ring of M_{g,n}-bar. Out of range
/// degrees give 0, d = 0 gives 1. Throws std::domain_error when 2g-2+n <= 0.
std::size_t kappa_rank(int d, int g, int n, unsigned threads = 1);

/// "R(d;g,n) rows=R cols=C" header, then one tab-separated line per row.
std::string dump(const PairingMatrix& m);

}  // namespace kappa
