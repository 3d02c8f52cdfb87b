#pragma once

#include <map>
#include <string>
#include <vector>

#include "kerovlab/cumulant_poly.hpp"
#include "kerovlab/ncpart.hpp"
#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"

namespace kerovlab {

/// Sigma_k as a polynomial in the free cumulants R_2, ..., R_{k+1}. Keys are
/// the partitions mu of k+1 with their 1-parts stripped; coefficients are
/// nonzero integers.
class KerovPolynomial {
 public:
  KerovPolynomial(int k, std::map<IntegerPartition, Integer> terms);

  /// Converts an exact result, enforcing integrality, positivity and the
  /// key shape. Throws ConsistencyError naming `route` otherwise.
  static KerovPolynomial from_exact(int k, const CumulantPolynomial& poly, const std::string& route);

  int k() const { return k_; }
  const std::map<IntegerPartition, Integer>& terms() const { return terms_; }
  Integer coefficient(const IntegerPartition& mu_dot) const;
  /// values[i] = R_i; missing entries count as zero.
  Rational evaluate(const std::vector<Rational>& values) const;
  CumulantPolynomial as_polynomial() const;

  /// Terms ordered by decreasing weight, then decreasing key:
  /// "R_7 + 35·R_5 + 35·R_3·R_2 + 84·R_3".
  std::vector<std::pair<IntegerPartition, Integer>> sorted_terms() const;
  std::string to_string() const;

  friend bool operator==(const KerovPolynomial&, const KerovPolynomial&) = default;

 private:
  int k_;
  std::map<IntegerPartition, Integer> terms_;
};

enum class KerovMethod { irr, nc, stanley, boolean };

const char* method_name(KerovMethod m);
KerovMethod parse_method(const std::string& text);

inline constexpr int kMaxSigmaK = 9;
inline constexpr int kMaxBooleanK = 8;
inline constexpr int kMaxOmegaK = 8;
inline constexpr int kMaxCumulantN = 10;

/// The weight of the pair tau <=^irr pi for the main formula, evaluated at
/// xs = (x_0, ..., x_{k-1}) where tau, pi are partitions of {1..k+1}:
/// m(lambda)! (k - l(lambda))! m_lambda(xs) / k!, lambda the type of pi
/// restricted to the singletons of tau.
Rational weight_W(const NoncrossingPartition& tau, const NoncrossingPartition& pi,
                  const std::vector<Rational>& xs);

/// Main formula: sum over tau in NC_{k+1}^irr and its upper set. 1 <= k <= 9.
KerovPolynomial sigma_irr(int k);

/// Weight of the whole-lattice formula for tau in NC_{k+1}.
Rational weight_V(const NoncrossingPartition& tau, int k);
/// Whole-lattice formula over NC_{k+1} with irreducible components. 1 <= k <= 9.
KerovPolynomial sigma_nc(int k);

/// Stanley's series formula in the shifted-moment form. 1 <= k <= 9.
KerovPolynomial sigma_stanley(int k);

/// B_n(j) = sum over NC_n^irr of j^{u(pi)} R_{pi-dot}, as polynomials in R
/// indexed by the exponent u: result[u] multiplies j^u.
std::vector<CumulantPolynomial> shifted_boolean_cumulant(int n);
/// Boolean-cumulant route of the main formula. 1 <= k <= 8.
KerovPolynomial sigma_boolean(int k);

KerovPolynomial sigma(int k, KerovMethod method);
/// Computes every route (boolean only for k <= 8) and throws
/// ConsistencyError on any disagreement.
KerovPolynomial sigma_cross_checked(int k);

/// M_n = sum over NC_n of R_pi (R_1 kept). 1 <= n <= 10.
CumulantPolynomial moments_from_free(int n);
/// B_n = sum over NC_n^irr of R_pi. 1 <= n <= 10.
CumulantPolynomial boolean_from_free(int n);

/// Checks M(z) = R(z M(z)) and M(z) = 1/(1 - B(z)) coefficient-wise up to
/// `order` with symbolic R_i. Throws ConsistencyError on mismatch. order <= 10.
bool series_identities_check(int order);

/// Omega_k(xs) from the main formula with (0..k-1) replaced by xs; the
/// coefficient of R_{mu-dot} is g_mu(xs). k = |xs| <= 8.
CumulantPolynomial omega(const std::vector<Rational>& xs);
/// The same polynomial from the shifted-moment series product.
CumulantPolynomial omega_series(const std::vector<Rational>& xs);

/// (0, 1, ..., k-1).
std::vector<Rational> content_points(int k);

}  // namespace kerovlab
