#pragma once

#include <vector>

#include "kerovlab/kerov.hpp"
#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"
#include "kerovlab/series.hpp"

namespace kerovlab {

/// Interlacing local minima x_0 < y_1 < x_1 < ... < y_m < x_m of the
/// diagram's profile, as contents (column - row): minima are the addable
/// cells, maxima the removable ones.
struct Profile {
  std::vector<long> minima;
  std::vector<long> maxima;

  /// Translates every coordinate by j (the diagram lambda shifted by j).
  Profile shifted(long j) const;
};

Profile profile(const IntegerPartition& lambda);

/// Moment series M(w) = prod(1 - y_i w) / prod(1 - x_i w) to order N.
RationalSeries moment_series(const Profile& p, int order);
/// Free cumulant series R with M(z) = R(z M(z)).
RationalSeries free_cumulant_series(const RationalSeries& moments);

/// Largest order accepted by the sequences below: max(2|lambda| + 4, 10).
int max_cumulant_order(const IntegerPartition& lambda);

/// Sequences are indexed by n: element 0 is the constant term (1 for
/// moments and free cumulants, 0 for boolean cumulants).
std::vector<Integer> moments(const IntegerPartition& lambda, int order);
std::vector<Integer> free_cumulants(const IntegerPartition& lambda, int order);
std::vector<Integer> boolean_cumulants(const IntegerPartition& lambda, int order);
/// Free cumulants of the diagram translated by j.
std::vector<Integer> shifted_free_cumulants(const IntegerPartition& lambda, long j, int order);

inline constexpr int kMaxCharacterSize = 14;

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. |lambda| = |mu| <= 14.
Integer mn_character(const IntegerPartition& lambda, const IntegerPartition& mu);
/// n! / prod of hook lengths.
Integer hook_length_dimension(const IntegerPartition& lambda);
/// (n)_k chi^lambda(k, 1^{n-k}) / chi^lambda(1^n), n = |lambda|, 1 <= k <= n.
Rational normalized_character(const IntegerPartition& lambda, int k);

struct KerovCheck {
  Rational lhs;  ///< Sigma_k(R_2(lambda), ..., R_{k+1}(lambda))
  Rational rhs;  ///< normalized character on k-cycles
  bool ok() const { return lhs == rhs; }
};

KerovCheck check_kerov(const IntegerPartition& lambda, const KerovPolynomial& sigma);
/// Uses the main formula for Sigma_k.
bool verify_kerov(const IntegerPartition& lambda, int k);

}  // namespace kerovlab
