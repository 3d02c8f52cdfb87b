#pragma once

#include <map>
#include <string>
#include <vector>

#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"

namespace kerovlab {

enum class Basis { m, e, h, p, s };

char basis_letter(Basis b);
Basis parse_basis(const std::string& text);

/// Homogeneous symmetric function of a fixed degree written in one of the
/// classical bases. Zero coefficients are not stored.
class SymFunction {
 public:
  SymFunction(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::map<IntegerPartition, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const IntegerPartition& lambda) const;
  /// Throws std::domain_error if |lambda| differs from the degree.
  void add(const IntegerPartition& lambda, const Rational& coeff);

  /// Value at (x_0, ..., x_{k-1}).
  Rational evaluate(const std::vector<Rational>& xs) const;

  /// "4/5·m_{1,1,1} − 3/5·m_{2,1} + 4/5·m_{3}", keys ascending.
  std::string to_string() const;

  friend bool operator==(const SymFunction&, const SymFunction&) = default;

 private:
  Basis basis_;
  int degree_;
  std::map<IntegerPartition, Rational> coeffs_;
};

/// m_lambda(xs): sum over distinct monomials with exponent multiset lambda.
/// Zero when lambda has more parts than there are variables.
Rational specialize_monomial(const IntegerPartition& lambda, const std::vector<Rational>& xs);

inline constexpr int kMaxBasisDegree = 8;

/// Row lambda holds the m-expansion of b_lambda; rows and columns indexed by
/// integer_partitions(degree) order. degree <= 8.
std::vector<std::vector<Rational>> monomial_transition(Basis from, int degree);

/// Exact change of basis. degree <= 8.
SymFunction convert_basis(const SymFunction& f, Basis target);

/// g_mu in the monomial basis, for mu of size k+1 with at most k parts.
/// Its specialization at (0, 1, ..., k-1) is the coefficient of R_{mu-dot}
/// in the k-th Kerov polynomial.
SymFunction g_mu(const IntegerPartition& mu);

}  // namespace kerovlab
