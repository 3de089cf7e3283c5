#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kappa/combinatorics.hpp"
#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"
#include "kappa/unipoly.hpp"

namespace kappa {

struct CheckCase {
  std::string id;
  Rational expected;
  Rational actual;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;
  std::vector<std::string> notes;  // informational, never affects passed()
  std::chrono::duration<double> elapsed{};

  void add(std::string id, const Rational& expected, const Rational& actual);
  bool passed() const;
  std::size_t failures() const;
};

/// Human-readable report: one line per case plus a summary line.
std::string format_text(const CheckReport& report);
/// JSON array of {suite, passed, cases: [{id, expected, actual, pass}], notes}.
std::string format_json(const std::vector<CheckReport>& reports);

/// (1/24) pair(p, q_n) = sum_i C(n-2, i-1) pair(p, q_i) for all p in P(n-1),
/// with q_i = ((1,n-i),(0,i+2)) and q_n = ((0,n+2)).
CheckReport check_divisor_relation(int n);

/// Rows h = 0..g, columns j = 0,2,3,...,g+1, entries n_j(h,m) extended
/// polynomially in m.
RationalMatrix psi_matrix_M(const Rational& m, int g);

/// det M(m;g) as a polynomial in m.
UniPoly determinant_polynomial(int g);

/// (-3)^C(g+1,2) / ((2g+1)!! g!) (m-2) prod_{i=g+3}^{2g+1} (m-i)
UniPoly determinant_law(int g);

CheckReport det_law_check(int g);

/// The eleven small-integral rows, keyed by the parts after the leading d.
const std::vector<std::vector<int>>& table1_rows();
/// Printed closed form for g! 24^g <tau_d tau_rest tau_0^...>_g.
Rational table1_formula(const std::vector<int>& rest, int g, int d);
CheckReport table1_check(int g, int d);

struct Block11 {
  int genus = 0;
  int degree = 0;
  int points = 0;
  std::vector<Profile> rows;
  std::vector<Partition> cols;
  RationalMatrix lambda_normalized;  // pair / lambda_norm
  RationalMatrix large_normalized;   // pair * 24^{g_L} g_L!, g_L on the largest vertex
  Rational det_lambda;
  Rational det_large;
};

/// Codimension-one block with columns (d), (d-1,1), ..., (d-4,1,1,1,1) and the
/// profiles of shape (d), (d-1,1), ..., (d-4,4). Requires g >= 2, d >= 9;
/// throws std::domain_error when the profile count is not 11.
Block11 block11(int g, int d);

/// -(g-1)^2 (4928g^4 - 275516g^3 - 437138g^2 + 62924g - 334941) / (12936 * 10^7)
Rational block11_printed(int g);

CheckReport block11_check(int g, int d1, int d2);

/// kappa_rank(3g-4+n, g, n) against n-1 (g = 1) or ceil((n+1)(g+1)/2) - 1.
CheckReport codim1_check(int g, int n);

struct Table2Cell {
  int codim = 0;
  int genus = 0;
  int points = 0;
  int degree = 0;
  std::size_t rank = 0;
};

/// Printed rank for codimension 2..6, genus 0..2, points 1..10.
std::optional<std::size_t> table2_printed(int codim, int genus, int points);

/// Rank of the codimension-e part; 0 when (g,n) is unstable or d < 0.
std::size_t table2_rank(int codim, int genus, int points);

struct Table2Result {
  std::vector<Table2Cell> cells;  // ordered by (codim, genus, points)
  CheckReport report;
};

/// Cells for codimensions in [e_min, e_max], genus 0..g_max, points 1..n_max,
/// computed by up to `threads` workers.
Table2Result table2(int e_min, int e_max, int g_max, int n_max, unsigned threads = 1);

std::string table2_csv(const std::vector<Table2Cell>& cells);
std::string table2_json(const std::vector<Table2Cell>& cells);

/// achieved partitions of Q(d;g,n) against P(d, 3g-2+n-d).
CheckReport partition_set_check(int d, int g, int n);

}  // namespace kappa
