#include "kerovlab/rational.hpp"

#include <stdexcept>

namespace kerovlab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::domain_error("not a rational number: " + text);
  if (q.get_den() == 0) throw std::domain_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

Integer pow(const Integer& base, unsigned exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer falling_factorial(long n, int k) {
  if (k < 0) throw std::domain_error("falling factorial with negative length");
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer catalan(int n) { return binomial(2L * n, n) / (n + 1); }

}  // namespace kerovlab
