#pragma once

#include <gmpxx.h>

#include <string>

namespace kerovlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical fraction p/q.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);

/// base^exp with the convention 0^0 = 1.
Rational pow(const Rational& base, unsigned exp);
Integer pow(const Integer& base, unsigned exp);

bool is_integer(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer factorial(int n);
/// n (n-1) ... (n-k+1); (n)_0 = 1 for any n.
Integer falling_factorial(long n, int k);
Integer binomial(long n, long k);
Integer catalan(int n);

}  // namespace kerovlab
