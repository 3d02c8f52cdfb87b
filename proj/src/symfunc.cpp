#include "kerovlab/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "kerovlab/cumulant_poly.hpp"
#include "kerovlab/errors.hpp"
#include "kerovlab/irrorder.hpp"
#include "kerovlab/ncpart.hpp"

namespace kerovlab {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

// Number of matrices with row sums `rows` and column sums `cols` whose
// entries lie in [0, cap] (cap < 0: unbounded).
Integer count_matrices(const std::vector<int>& rows, std::vector<int> cols, int cap) {
  std::function<Integer(std::size_t, std::size_t, int)> fill =
      [&](std::size_t r, std::size_t c, int left) -> Integer {
    if (r == rows.size()) return all_zero(cols) ? 1 : 0;
    if (c == cols.size()) {
      if (left != 0) return 0;
      return fill(r + 1, 0, r + 1 < rows.size() ? rows[r + 1] : 0);
    }
    Integer total = 0;
    int most = std::min(left, cols[c]);
    if (cap >= 0) most = std::min(most, cap);
    for (int v = 0; v <= most; ++v) {
      cols[c] -= v;
      total += fill(r, c + 1, left - v);
      cols[c] += v;
    }
    return total;
  };
  return fill(0, 0, rows.empty() ? 0 : rows[0]);
}

// Ways to send each part of lambda (parts distinguishable) to a column so
// that column j receives exactly cols[j].
Integer count_power_sum(const std::vector<int>& parts, std::vector<int> cols) {
  std::function<Integer(std::size_t)> place = [&](std::size_t i) -> Integer {
    if (i == parts.size()) return all_zero(cols) ? 1 : 0;
    Integer total = 0;
    for (auto& c : cols) {
      if (c < parts[i]) continue;
      c -= parts[i];
      total += place(i + 1);
      c += parts[i];
    }
    return total;
  };
  return place(0);
}

// Kostka number K_{lambda,nu}: semistandard tableaux of shape lambda and
// content nu, grown one horizontal strip per letter.
Integer kostka(const IntegerPartition& lambda, const IntegerPartition& nu) {
  const auto& target = lambda.parts();
  const std::size_t rows = target.size();
  std::function<Integer(const std::vector<int>&, int)> grow =
      [&](const std::vector<int>& shape, int letter) -> Integer {
    if (letter == nu.length()) return shape == target ? 1 : 0;
    Integer total = 0;
    std::vector<int> next = shape;
    std::function<void(std::size_t, int)> strip = [&](std::size_t row, int left) {
      if (row == rows) {
        if (left == 0) total += grow(next, letter + 1);
        return;
      }
      // Strip cells in a row sit below cells already present in the row above.
      const int ceiling = row == 0 ? target[0] : std::min(target[row], shape[row - 1]);
      const int room = std::min(left, ceiling - shape[row]);
      for (int add = 0; add <= room; ++add) {
        next[row] = shape[row] + add;
        strip(row + 1, left - add);
      }
      next[row] = shape[row];
    };
    strip(0, nu[letter]);
    return total;
  };
  return grow(std::vector<int>(rows, 0), 0);
}

// Solves x * a = b for the row vector x (a square and invertible).
std::vector<Rational> solve_left(Matrix a, std::vector<Rational> b) {
  // Transpose so that the system reads a^T x = b.
  const std::size_t n = a.size();
  Matrix t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && t[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ConsistencyError("singular basis transition matrix");
    std::swap(t[pivot], t[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || t[r][col] == 0) continue;
      const Rational factor = t[r][col] / t[col][col];
      for (std::size_t c = col; c < n; ++c) t[r][c] -= factor * t[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= t[i][i];
  return b;
}

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxBasisDegree)
    throw SizeLimitError("basis conversion supports degree <= " + std::to_string(kMaxBasisDegree));
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(const std::string& text) {
  if (text == "m") return Basis::m;
  if (text == "e") return Basis::e;
  if (text == "h") return Basis::h;
  if (text == "p") return Basis::p;
  if (text == "s") return Basis::s;
  throw std::domain_error("unknown basis '" + text + "' (expected m, e, h, p or s)");
}

Rational SymFunction::coefficient(const IntegerPartition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunction::add(const IntegerPartition& lambda, const Rational& coeff) {
  if (lambda.size() != degree_)
    throw std::domain_error("partition " + lambda.to_string() + " does not have size " +
                            std::to_string(degree_));
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational SymFunction::evaluate(const std::vector<Rational>& xs) const {
  const SymFunction mono = basis_ == Basis::m ? *this : convert_basis(*this, Basis::m);
  Rational total = 0;
  for (const auto& [lambda, coeff] : mono.coeffs_) total += coeff * specialize_monomial(lambda, xs);
  return total;
}

std::string SymFunction::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [lambda, coeff] : coeffs_) {
    std::string body;
    if (!lambda.empty()) body = std::string(1, basis_letter(basis_)) + "_{" + lambda.to_string() + "}";
    terms.emplace_back(coeff, body);
  }
  return render_sum(terms);
}

Rational specialize_monomial(const IntegerPartition& lambda, const std::vector<Rational>& xs) {
  if (lambda.length() > static_cast<int>(xs.size())) return 0;
  // Distinct arrangements of the exponent vector, padded with zeros.
  std::vector<int> exps = lambda.parts();
  exps.resize(xs.size(), 0);
  std::sort(exps.begin(), exps.end());
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < xs.size() && term != 0; ++i)
      if (exps[i] != 0) term *= pow(xs[i], static_cast<unsigned>(exps[i]));
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

std::vector<std::vector<Rational>> monomial_transition(Basis from, int degree) {
  check_degree(degree);
  const auto parts = integer_partitions(degree);
  Matrix out(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto& lambda = parts[i];
      const auto& nu = parts[j];
      Integer value;
      switch (from) {
        case Basis::m: value = i == j ? 1 : 0; break;
        case Basis::e: value = count_matrices(lambda.parts(), nu.parts(), 1); break;
        case Basis::h: value = count_matrices(lambda.parts(), nu.parts(), -1); break;
        case Basis::p: value = count_power_sum(lambda.parts(), nu.parts()); break;
        case Basis::s: value = kostka(lambda, nu); break;
      }
      out[i][j] = value;
    }
  }
  return out;
}

SymFunction convert_basis(const SymFunction& f, Basis target) {
  check_degree(f.degree());
  if (f.basis() == target) return f;
  const auto parts = integer_partitions(f.degree());
  // Into the monomial basis first.
  std::vector<Rational> mono(parts.size(), Rational(0));
  const Matrix from = monomial_transition(f.basis(), f.degree());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Rational c = f.coefficient(parts[i]);
    if (c == 0) continue;
    for (std::size_t j = 0; j < parts.size(); ++j) mono[j] += c * from[i][j];
  }
  std::vector<Rational> coeffs =
      target == Basis::m ? mono : solve_left(monomial_transition(target, f.degree()), mono);
  SymFunction out(target, f.degree());
  for (std::size_t i = 0; i < parts.size(); ++i) out.add(parts[i], coeffs[i]);
  return out;
}

SymFunction g_mu(const IntegerPartition& mu) {
  const int k = mu.size() - 1;
  if (k < 1) throw std::domain_error("g_mu needs |mu| >= 2");
  if (mu.length() > k)
    throw std::domain_error("g_mu: " + mu.to_string() + " has more than " + std::to_string(k) +
                            " parts");
  const Integer k_fact = factorial(k);
  SymFunction out(Basis::m, mu.multiplicity(1));
  for (const auto& tau : enumerate_nc_irr(k + 1)) {
    if (type_of(tau) != mu) continue;
    const auto fixed = singletons(tau);
    const auto ups = upper_set(tau);
    const int labels = tau.num_blocks() - 1;
    for (std::size_t mask = 0; mask < ups.size(); ++mask) {
      const int chosen = std::popcount(mask);
      const IntegerPartition lambda = type_of(restrict(ups[mask], fixed));
      Integer weight = lambda.multiplicity_factorial() * factorial(k - lambda.length());
      if ((labels - chosen) % 2 != 0) weight = -weight;
      out.add(lambda, make_rational(weight, k_fact));
    }
  }
  return out;
}

}  // namespace kerovlab
