#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kerovlab/cumulant_poly.hpp"
#include "kerovlab/rational.hpp"

namespace kerovlab {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}) over a
/// commutative coefficient ring T (Rational or CumulantPolynomial).
///
/// Only coefficients up to the truncation order N are stored; every binary
/// operation truncates to the smaller of the two orders.
template <class T>
class Series {
 public:
  explicit Series(int order) : coeffs_(checked_size(order), T(0)) {}
  Series(std::vector<T> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order), T(0));
  }

  static Series constant(const T& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// The series z.
  static Series variable(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int n) const { return coeffs_.at(index(n)); }
  T& operator[](int n) { return coeffs_.at(index(n)); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  Series truncated(int order) const {
    if (order > this->order()) throw std::domain_error("cannot extend a truncated series");
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
  }

  Series& operator+=(const Series& other) {
    shrink_to(other.order());
    for (int n = 0; n <= order(); ++n) coeffs_[index(n)] += other[n];
    return *this;
  }
  Series& operator-=(const Series& other) {
    shrink_to(other.order());
    for (int n = 0; n <= order(); ++n) coeffs_[index(n)] -= other[n];
    return *this;
  }
  Series& operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i) {
      if (a[i] == T(0)) continue;
      for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend bool operator==(const Series&, const Series&) = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::domain_error("negative truncation order");
    return static_cast<std::size_t>(order) + 1;
  }
  std::size_t index(int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("coefficient " + std::to_string(n) + " is beyond truncation order " +
                              std::to_string(order()));
    return static_cast<std::size_t>(n);
  }
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<T> coeffs_;
};

using RationalSeries = Series<Rational>;

/// 1/a; the constant term must be a unit of T.
template <class T>
Series<T> inverse(const Series<T>& a) {
  const T inv0 = unit_inverse(a[0]);
  Series<T> out(a.order());
  out[0] = inv0;
  for (int n = 1; n <= a.order(); ++n) {
    T acc(0);
    for (int i = 1; i <= n; ++i) acc += a[i] * out[n - i];
    out[n] = -(inv0 * acc);
  }
  return out;
}

template <class T>
Series<T> operator/(const Series<T>& a, const Series<T>& b) {
  return a * inverse(b);
}

/// f(g(z)); g must have zero constant term.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
  if (!(g[0] == T(0))) throw std::domain_error("compose: inner series has nonzero constant term");
  const int order = std::min(f.order(), g.order());
  const Series<T> inner = g.truncated(order);
  Series<T> out = Series<T>::constant(f[order], order);
  for (int n = order - 1; n >= 0; --n) {
    out = out * inner;
    out[0] += f[n];
  }
  return out;
}

/// Compositional inverse: compose(f, revert(f)) = z. Needs f(0) = 0 and an
/// invertible linear coefficient.
template <class T>
Series<T> revert(const Series<T>& f) {
  if (f.order() < 1) throw std::domain_error("revert: series must have order >= 1");
  if (!(f[0] == T(0))) throw std::domain_error("revert: nonzero constant term");
  if (f[1] == T(0)) throw std::domain_error("revert: zero linear coefficient");
  const T inv1 = unit_inverse(f[1]);
  const Series<T> z = Series<T>::variable(f.order());
  Series<T> g(f.order());
  g[1] = inv1;
  // Each correction step fixes one more coefficient.
  for (int step = 2; step <= f.order(); ++step) {
    const Series<T> residual = compose(f, g) - z;
    for (int n = 0; n <= g.order(); ++n) g[n] -= inv1 * residual[n];
  }
  return g;
}

/// f(z / (1 - a z)).
template <class T>
Series<T> mobius_sub(const Series<T>& f, const Rational& a) {
  Series<T> inner(f.order());
  Rational power = 1;
  for (int n = 1; n <= f.order(); ++n) {
    inner[n] = T(power);
    power *= a;
  }
  return compose(f, inner);
}

/// z * f, one order higher.
template <class T>
Series<T> shift_up(const Series<T>& f) {
  Series<T> out(f.order() + 1);
  for (int n = 0; n <= f.order(); ++n) out[n + 1] = f[n];
  return out;
}

}  // namespace kerovlab
