#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(const BigInt& n, unsigned k);

// ((x; n)) = C(x+n-1, n), the number of size-n multisets from x types.
BigInt multiset_coeff(const BigInt& x, unsigned n);

// Pochhammer k-symbol (x)_{n,k} = prod_{i=1..n} (x + (i-1)k).
Rational pochhammer_k(const Rational& x, unsigned n, unsigned k);

// H_k = sum_{i=1..k} 1/i, exactly; H_0 = 0.
Rational harmonic(unsigned k);

// value = mantissa * 10^exp10 with mantissa in [1, 10) (0 for zero).
struct Sci {
  double mantissa = 0;
  long exp10 = 0;

  double as_double() const;
};

Sci to_sci(const Rational& r);

// Natural log of a positive rational, accurate for any magnitude.
double log_rational(const Rational& r);

// Renders a probability the way the numeric tables do: "1" for one,
// two significant digits for values >= 0.01, mantissa-exponent form below.
std::string format_probability(const Rational& p);
std::string format_sci(const Sci& s, int sig_digits);

// Parses a plain decimal string ("0.1", "3", "1e-3") into an exact rational.
Rational rational_from_decimal(const std::string& s);
std::string rational_to_decimal(const Rational& r, int sig_digits);

}  // namespace sp
