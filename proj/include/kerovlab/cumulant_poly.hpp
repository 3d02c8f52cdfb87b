#pragma once

#include <map>
#include <string>
#include <vector>

#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"

namespace kerovlab {

/// Polynomial in the commuting symbols R_1, R_2, ... with exact rational
/// coefficients. A monomial R_{a_1} ... R_{a_l} is keyed by the integer
/// partition (a_1, ..., a_l); the empty partition is the constant monomial.
/// Zero coefficients are never stored.
class CumulantPolynomial {
 public:
  using Terms = std::map<IntegerPartition, Rational>;

  CumulantPolynomial() = default;
  CumulantPolynomial(long constant) : CumulantPolynomial(Rational(constant)) {}  // NOLINT
  CumulantPolynomial(const Rational& constant);                                 // NOLINT
  /// The symbol R_i.
  static CumulantPolynomial symbol(int i);
  static CumulantPolynomial monomial(const IntegerPartition& key, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const IntegerPartition& key) const;
  void add_term(const IntegerPartition& key, const Rational& coeff);

  /// All terms have the same weight (sum of indices).
  bool is_homogeneous(int weight) const;
  /// Substitutes R_i -> values[i]; values[0] is ignored. Missing symbols
  /// evaluate to zero.
  Rational evaluate(const std::vector<Rational>& values) const;
  /// Drops every monomial containing R_1.
  CumulantPolynomial without_r1() const;

  CumulantPolynomial& operator+=(const CumulantPolynomial& other);
  CumulantPolynomial& operator-=(const CumulantPolynomial& other);
  CumulantPolynomial& operator*=(const Rational& scalar);
  friend CumulantPolynomial operator+(CumulantPolynomial a, const CumulantPolynomial& b) {
    return a += b;
  }
  friend CumulantPolynomial operator-(CumulantPolynomial a, const CumulantPolynomial& b) {
    return a -= b;
  }
  friend CumulantPolynomial operator-(CumulantPolynomial a) { return a *= Rational(-1); }
  friend CumulantPolynomial operator*(const CumulantPolynomial& a, const CumulantPolynomial& b);
  friend CumulantPolynomial operator*(CumulantPolynomial a, const Rational& s) { return a *= s; }
  friend CumulantPolynomial operator*(const Rational& s, CumulantPolynomial a) { return a *= s; }
  friend bool operator==(const CumulantPolynomial&, const CumulantPolynomial&) = default;

  /// "R_3 + 3·R_2·R_1 + R_1^3"; terms by decreasing weight, then decreasing key.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Multiplicative inverse of a unit of the coefficient ring.
Rational unit_inverse(const Rational& q);
CumulantPolynomial unit_inverse(const CumulantPolynomial& p);

/// Renders c·R_a·R_b... with exponents aggregated (R_2^2); shared with the
/// Kerov polynomial printer.
std::string render_monomial(const IntegerPartition& key);
/// Joins signed terms with " + " and " − ".
std::string render_sum(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace kerovlab
