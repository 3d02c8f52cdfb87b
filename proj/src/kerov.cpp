#include "kerovlab/kerov.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kerovlab/errors.hpp"
#include "kerovlab/irrorder.hpp"
#include "kerovlab/series.hpp"
#include "kerovlab/symfunc.hpp"

namespace kerovlab {

namespace {

void check_k(int k, int limit, const char* what) {
  if (k < 1) throw std::domain_error(std::string(what) + " requires k >= 1, got " + std::to_string(k));
  if (k > limit)
    throw SizeLimitError(std::string(what) + " requires 1 <= k <= " + std::to_string(limit) +
                         ", got " + std::to_string(k));
}

// R_{tau-dot}: one symbol per block of size >= 2.
IntegerPartition nontrivial_type(const NoncrossingPartition& tau) {
  return type_of(tau).without_ones();
}

Rational sign(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

// W depends on (tau, pi) only through lambda; memoized per evaluation point.
class WeightTable {
 public:
  explicit WeightTable(const std::vector<Rational>& xs)
      : xs_(xs), k_(static_cast<int>(xs.size())), k_fact_(factorial(k_)) {}

  const Rational& operator()(const IntegerPartition& lambda) {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    if (lambda.length() > k_) return cache_.emplace(lambda, Rational(0)).first->second;
    Rational w = specialize_monomial(lambda, xs_);
    w *= Rational(lambda.multiplicity_factorial() * factorial(k_ - lambda.length()));
    w /= Rational(k_fact_);
    return cache_.emplace(lambda, w).first->second;
  }

 private:
  std::vector<Rational> xs_;
  int k_;
  Integer k_fact_;
  std::map<IntegerPartition, Rational> cache_;
};

CumulantPolynomial main_formula(const std::vector<Rational>& xs) {
  const int k = static_cast<int>(xs.size());
  WeightTable weight(xs);
  CumulantPolynomial out;
  for (const auto& tau : enumerate_nc_irr(k + 1)) {
    const auto fixed = singletons(tau);
    Rational bracket = 0;
    for (const auto& pi : upper_set(tau)) {
      const Rational& w = weight(type_of(restrict(pi, fixed)));
      if ((pi.num_blocks() - 1) % 2 == 0) {
        bracket += w;
      } else {
        bracket -= w;
      }
    }
    out.add_term(nontrivial_type(tau), bracket);
  }
  return out;
}

// M(z) = 1 + sum M_n z^n with R_1 = 0.
Series<CumulantPolynomial> symbolic_moment_series(int order) {
  Series<CumulantPolynomial> m(order);
  m[0] = CumulantPolynomial(1);
  for (int n = 1; n <= order; ++n) m[n] = moments_from_free(n).without_r1();
  return m;
}

CumulantPolynomial series_formula(const std::vector<Rational>& xs) {
  const int k = static_cast<int>(xs.size());
  const int order = k + 1;
  const auto m = symbolic_moment_series(order);
  auto product = Series<CumulantPolynomial>::constant(CumulantPolynomial(1), order);
  for (const auto& x : xs) {
    auto linear = Series<CumulantPolynomial>::constant(CumulantPolynomial(1), order);
    linear[1] = CumulantPolynomial(-x);
    product = product * (linear * inverse(mobius_sub(m, x)));
  }
  return product[order] * Rational(-1, k);
}

}  // namespace

KerovPolynomial::KerovPolynomial(int k, std::map<IntegerPartition, Integer> terms)
    : k_(k), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

KerovPolynomial KerovPolynomial::from_exact(int k, const CumulantPolynomial& poly,
                                            const std::string& route) {
  std::map<IntegerPartition, Integer> terms;
  for (const auto& [key, coeff] : poly.terms()) {
    const std::string where = "Sigma_" + std::to_string(k) + " (" + route + "), R_{" +
                              key.to_string() + "}: ";
    if (key.empty() || key.multiplicity(1) != 0 || key.size() > k + 1)
      throw ConsistencyError(where + "monomial outside the Kerov support");
    if (!is_integer(coeff)) throw ConsistencyError(where + "non-integer coefficient " + coeff.get_str());
    if (coeff < 0) throw ConsistencyError(where + "negative coefficient " + coeff.get_str());
    terms.emplace(key, coeff.get_num());
  }
  return KerovPolynomial(k, std::move(terms));
}

Integer KerovPolynomial::coefficient(const IntegerPartition& mu_dot) const {
  auto it = terms_.find(mu_dot);
  return it == terms_.end() ? Integer(0) : it->second;
}

Rational KerovPolynomial::evaluate(const std::vector<Rational>& values) const {
  return as_polynomial().evaluate(values);
}

CumulantPolynomial KerovPolynomial::as_polynomial() const {
  CumulantPolynomial out;
  for (const auto& [key, coeff] : terms_) out.add_term(key, Rational(coeff));
  return out;
}

std::vector<std::pair<IntegerPartition, Integer>> KerovPolynomial::sorted_terms() const {
  std::vector<std::pair<IntegerPartition, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first > b.first;
  });
  return out;
}

std::string KerovPolynomial::to_string() const {
  std::vector<std::pair<Rational, std::string>> rendered;
  for (const auto& [key, coeff] : sorted_terms()) rendered.emplace_back(Rational(coeff), render_monomial(key));
  return render_sum(rendered);
}

const char* method_name(KerovMethod m) {
  switch (m) {
    case KerovMethod::irr: return "irr";
    case KerovMethod::nc: return "nc";
    case KerovMethod::stanley: return "stanley";
    case KerovMethod::boolean: return "boolean";
  }
  return "?";
}

KerovMethod parse_method(const std::string& text) {
  for (auto m : {KerovMethod::irr, KerovMethod::nc, KerovMethod::stanley, KerovMethod::boolean})
    if (text == method_name(m)) return m;
  throw std::domain_error("unknown method '" + text + "'");
}

std::vector<Rational> content_points(int k) {
  std::vector<Rational> xs;
  for (int i = 0; i < k; ++i) xs.emplace_back(i);
  return xs;
}

Rational weight_W(const NoncrossingPartition& tau, const NoncrossingPartition& pi,
                  const std::vector<Rational>& xs) {
  if (!is_irreducible(tau) || !is_irreducible(pi) || !leq_irr(tau, pi))
    throw std::domain_error("weight_W requires irreducible tau <=^irr pi");
  const int k = tau.ground_size() - 1;
  if (static_cast<int>(xs.size()) != k)
    throw std::domain_error("weight_W needs exactly k = " + std::to_string(k) + " points");
  WeightTable table(xs);
  return table(type_of(restrict(pi, singletons(tau))));
}

KerovPolynomial sigma_irr(int k) {
  check_k(k, kMaxSigmaK, "sigma_irr");
  return KerovPolynomial::from_exact(k, main_formula(content_points(k)), "irr");
}

Rational weight_V(const NoncrossingPartition& tau, int k) {
  if (k < 1) throw std::domain_error("weight_V requires k >= 1");
  const auto components = irreducible_components(tau);
  std::vector<int> exps;
  for (const auto& c : components) exps.push_back(static_cast<int>(singletons(c).size()));
  const std::size_t d = exps.size();
  // ways[j] = sum over increasing i_1 < ... < i_j < (current point) of the
  // product of the first j factors.
  std::vector<Rational> ways(d + 1, Rational(0));
  ways[0] = 1;
  for (int point = 0; point < k; ++point) {
    for (std::size_t j = d; j >= 1; --j)
      ways[j] += ways[j - 1] * pow(Rational(point), static_cast<unsigned>(exps[j - 1]));
  }
  return ways[d] / k;
}

KerovPolynomial sigma_nc(int k) {
  check_k(k, kMaxSigmaK, "sigma_nc");
  CumulantPolynomial out;
  for_each_nc(k + 1, [&](const NoncrossingPartition& tau) {
    const int d = static_cast<int>(irreducible_components(tau).size());
    out.add_term(nontrivial_type(tau), sign(d - 1) * weight_V(tau, k));
  });
  return KerovPolynomial::from_exact(k, out, "nc");
}

KerovPolynomial sigma_stanley(int k) {
  check_k(k, kMaxSigmaK, "sigma_stanley");
  return KerovPolynomial::from_exact(k, series_formula(content_points(k)), "stanley");
}

std::vector<CumulantPolynomial> shifted_boolean_cumulant(int n) {
  if (n < 1 || n > kMaxCumulantN) throw SizeLimitError("boolean cumulants need 1 <= n <= 10");
  std::vector<CumulantPolynomial> out(static_cast<std::size_t>(n) + 1);
  for (const auto& pi : enumerate_nc_irr(n))
    out[singletons(pi).size()].add_term(nontrivial_type(pi), 1);
  return out;
}

KerovPolynomial sigma_boolean(int k) {
  check_k(k, kMaxBooleanK, "sigma_boolean");
  // B_n(j) for every block size and every evaluation point j in 0..k-1.
  std::vector<std::vector<CumulantPolynomial>> b_at(static_cast<std::size_t>(k) + 2);
  for (int n = 1; n <= k + 1; ++n) {
    const auto by_u = shifted_boolean_cumulant(n);
    for (int j = 0; j < k; ++j) {
      CumulantPolynomial value;
      for (std::size_t u = 0; u < by_u.size(); ++u)
        if (!by_u[u].is_zero()) value += by_u[u] * pow(Rational(j), static_cast<unsigned>(u));
      b_at[static_cast<std::size_t>(n)].push_back(std::move(value));
    }
  }

  // The permutation sum depends on pi only through its type.
  std::map<IntegerPartition, long> type_counts;
  for (const auto& pi : enumerate_nc_irr(k + 1)) ++type_counts[type_of(pi)];

  CumulantPolynomial total;
  const std::size_t masks = std::size_t{1} << k;
  for (const auto& [mu, count] : type_counts) {
    // Sum over injective placements of the blocks on distinct points,
    // processed block by block over subsets of used points.
    std::vector<CumulantPolynomial> placed(masks);
    placed[0] = CumulantPolynomial(1);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const int block = std::popcount(mask);
      if (placed[mask].is_zero() || block >= mu.length()) continue;
      const auto& values = b_at[static_cast<std::size_t>(mu[block])];
      for (int j = 0; j < k; ++j) {
        if (mask >> j & 1U) continue;
        placed[mask | (std::size_t{1} << j)] += placed[mask] * values[static_cast<std::size_t>(j)];
      }
    }
    CumulantPolynomial injective;
    for (std::size_t mask = 0; mask < masks; ++mask)
      if (std::popcount(mask) == mu.length()) injective += placed[mask];
    const Rational scale = sign(mu.length() - 1) * Rational(count) *
                           Rational(factorial(k - mu.length())) / Rational(factorial(k));
    total += injective * scale;
  }
  return KerovPolynomial::from_exact(k, total, "boolean");
}

KerovPolynomial sigma(int k, KerovMethod method) {
  switch (method) {
    case KerovMethod::irr: return sigma_irr(k);
    case KerovMethod::nc: return sigma_nc(k);
    case KerovMethod::stanley: return sigma_stanley(k);
    case KerovMethod::boolean: return sigma_boolean(k);
  }
  throw std::domain_error("unknown method");
}

KerovPolynomial sigma_cross_checked(int k) {
  check_k(k, kMaxSigmaK, "sigma_cross_checked");
  const KerovPolynomial reference = sigma_irr(k);
  std::vector<KerovMethod> others{KerovMethod::nc, KerovMethod::stanley};
  if (k <= kMaxBooleanK) others.push_back(KerovMethod::boolean);
  for (auto m : others) {
    const KerovPolynomial other = sigma(k, m);
    if (other != reference)
      throw ConsistencyError("Sigma_" + std::to_string(k) + ": irr gives " + reference.to_string() +
                             " but " + method_name(m) + " gives " + other.to_string());
  }
  return reference;
}

CumulantPolynomial moments_from_free(int n) {
  if (n < 1 || n > kMaxCumulantN) throw SizeLimitError("moments_from_free needs 1 <= n <= 10");
  CumulantPolynomial out;
  for_each_nc(n, [&](const NoncrossingPartition& pi) { out.add_term(type_of(pi), 1); });
  return out;
}

CumulantPolynomial boolean_from_free(int n) {
  if (n < 1 || n > kMaxCumulantN) throw SizeLimitError("boolean_from_free needs 1 <= n <= 10");
  CumulantPolynomial out;
  for (const auto& pi : enumerate_nc_irr(n)) out.add_term(type_of(pi), 1);
  return out;
}

bool series_identities_check(int order) {
  if (order < 1 || order > kMaxCumulantN)
    throw SizeLimitError("series_identities_check needs 1 <= order <= 10");
  using S = Series<CumulantPolynomial>;
  S m(order);
  S r(order);
  S b(order);
  m[0] = CumulantPolynomial(1);
  r[0] = CumulantPolynomial(1);
  for (int n = 1; n <= order; ++n) {
    m[n] = moments_from_free(n);
    r[n] = CumulantPolynomial::symbol(n);
    b[n] = boolean_from_free(n);
  }
  const S via_cumulants = compose(r, shift_up(m).truncated(order));
  const S via_boolean = inverse(S::constant(CumulantPolynomial(1), order) - b);
  for (int n = 0; n <= order; ++n) {
    if (via_cumulants[n] != m[n])
      throw ConsistencyError("M = R(zM) fails at z^" + std::to_string(n) + ": " +
                             via_cumulants[n].to_string() + " vs " + m[n].to_string());
    if (via_boolean[n] != m[n])
      throw ConsistencyError("M = 1/(1-B) fails at z^" + std::to_string(n) + ": " +
                             via_boolean[n].to_string() + " vs " + m[n].to_string());
  }
  return true;
}

CumulantPolynomial omega(const std::vector<Rational>& xs) {
  check_k(static_cast<int>(xs.size()), kMaxOmegaK, "omega");
  return main_formula(xs);
}

CumulantPolynomial omega_series(const std::vector<Rational>& xs) {
  check_k(static_cast<int>(xs.size()), kMaxOmegaK, "omega_series");
  return series_formula(xs);
}

}  // namespace kerovlab
