#pragma once

#include <span>
#include <string>
#include <vector>

#include "kappa/rational.hpp"

namespace kappa {

// Dense univariate polynomial over Q. coefficient(i) multiplies x^i; the
// stored vector never has a trailing zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  /// x - root
  static UniPoly linear_root(const Rational& root);

  /// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
  /// Nodes must be distinct.
  static UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "1/2*m^2 - 3/2*m + 2"
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace kappa
