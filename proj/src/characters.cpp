#include "kerovlab/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "kerovlab/errors.hpp"

namespace kerovlab {

int max_cumulant_order(const IntegerPartition& lambda) {
  return std::max(2 * lambda.size() + 4, kMaxCumulantN);
}

namespace {

void check_order(const IntegerPartition& lambda, int order) {
  if (order < 0) throw std::domain_error("negative cumulant order");
  const int cap = max_cumulant_order(lambda);
  if (order > cap) throw SizeLimitError("cumulant order must be at most " + std::to_string(cap));
}

std::vector<Integer> to_integers(const RationalSeries& s, const char* what) {
  std::vector<Integer> out;
  for (const auto& c : s.coefficients()) {
    if (!is_integer(c)) throw ConsistencyError(std::string(what) + " is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

// Beta-set (first-column hook lengths) of lambda padded to `length` rows.
std::vector<int> beta_set(const IntegerPartition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta;
  for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + (l - 1 - i));
  return beta;
}

IntegerPartition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return IntegerPartition(std::move(parts));
}

}  // namespace

Profile Profile::shifted(long j) const {
  Profile out = *this;
  for (auto& x : out.minima) x += j;
  for (auto& y : out.maxima) y += j;
  return out;
}

Profile profile(const IntegerPartition& lambda) {
  Profile p;
  const int l = lambda.length();
  // Row r (1-based) has length lambda_r; lambda_{l+1} = 0.
  auto row = [&](int r) { return r <= l ? lambda[r - 1] : 0; };
  for (int r = 1; r <= l + 1; ++r) {
    if (r == 1 || row(r - 1) > row(r)) p.minima.push_back(row(r) + 1 - r);
    if (r <= l && row(r) > row(r + 1)) p.maxima.push_back(row(r) - r);
  }
  std::sort(p.minima.begin(), p.minima.end());
  std::sort(p.maxima.begin(), p.maxima.end());
  return p;
}

RationalSeries moment_series(const Profile& p, int order) {
  auto numerator = RationalSeries::constant(1, order);
  auto denominator = RationalSeries::constant(1, order);
  for (long y : p.maxima) {
    auto f = RationalSeries::constant(1, order);
    if (order >= 1) f[1] = Rational(-y);
    numerator = numerator * f;
  }
  for (long x : p.minima) {
    auto f = RationalSeries::constant(1, order);
    if (order >= 1) f[1] = Rational(-x);
    denominator = denominator * f;
  }
  return numerator / denominator;
}

RationalSeries free_cumulant_series(const RationalSeries& moments) {
  if (moments.order() == 0) return moments;
  // R(u) = M(z(u)) where z(u) inverts u = z M(z).
  const RationalSeries u = shift_up(moments).truncated(moments.order());
  return compose(moments, revert(u));
}

std::vector<Integer> moments(const IntegerPartition& lambda, int order) {
  check_order(lambda, order);
  return to_integers(moment_series(profile(lambda), order), "moment");
}

std::vector<Integer> free_cumulants(const IntegerPartition& lambda, int order) {
  check_order(lambda, order);
  return to_integers(free_cumulant_series(moment_series(profile(lambda), order)), "free cumulant");
}

std::vector<Integer> boolean_cumulants(const IntegerPartition& lambda, int order) {
  check_order(lambda, order);
  const auto m = moment_series(profile(lambda), order);
  return to_integers(RationalSeries::constant(1, order) - inverse(m), "boolean cumulant");
}

std::vector<Integer> shifted_free_cumulants(const IntegerPartition& lambda, long j, int order) {
  check_order(lambda, order);
  const auto m = moment_series(profile(lambda).shifted(j), order);
  return to_integers(free_cumulant_series(m), "shifted free cumulant");
}

Integer mn_character(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.size() != mu.size())
    throw std::domain_error("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                            " but |mu| = " + std::to_string(mu.size()));
  if (lambda.size() > kMaxCharacterSize)
    throw SizeLimitError("mn_character supports sizes up to " + std::to_string(kMaxCharacterSize));
  std::map<std::pair<IntegerPartition, int>, Integer> memo;
  // Strip rim hooks of length mu[i], largest first.
  std::function<Integer(const IntegerPartition&, int)> chi = [&](const IntegerPartition& shape,
                                                                int i) -> Integer {
    if (i == mu.length()) return 1;
    const auto key = std::make_pair(shape, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[i];
    const auto beta = beta_set(shape);
    Integer total = 0;
    for (std::size_t b = 0; b < beta.size(); ++b) {
      const int target = beta[b] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int v : beta)
        if (v > target && v < beta[b]) ++between;
      auto moved = beta;
      moved[b] = target;
      const Integer sub = chi(from_beta_set(moved), i + 1);
      total += between % 2 == 0 ? sub : Integer(-sub);
    }
    memo.emplace(key, total);
    return total;
  };
  return chi(lambda, 0);
}

Integer hook_length_dimension(const IntegerPartition& lambda) {
  const IntegerPartition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

Rational normalized_character(const IntegerPartition& lambda, int k) {
  const int n = lambda.size();
  if (k < 1 || k > n) throw std::domain_error("normalized_character needs 1 <= k <= |lambda|");
  std::vector<int> cycle_type(static_cast<std::size_t>(n - k), 1);
  cycle_type.insert(cycle_type.begin(), k);
  const Integer chi = mn_character(lambda, IntegerPartition(cycle_type));
  const Integer dim = mn_character(lambda, IntegerPartition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  return make_rational(falling_factorial(n, k) * chi, dim);
}

KerovCheck check_kerov(const IntegerPartition& lambda, const KerovPolynomial& sigma) {
  const int k = sigma.k();
  const auto r = free_cumulants(lambda, std::min(k + 1, max_cumulant_order(lambda)));
  std::vector<Rational> values;
  for (const auto& v : r) values.emplace_back(v);
  return {sigma.evaluate(values), normalized_character(lambda, k)};
}

bool verify_kerov(const IntegerPartition& lambda, int k) {
  return check_kerov(lambda, sigma_irr(k)).ok();
}

}  // namespace kerovlab
