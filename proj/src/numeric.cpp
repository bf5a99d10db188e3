#include "sp/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sp {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (BigInt(k) > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - (int)(i - 1);
    r /= i;
  }
  return r;
}

BigInt multiset_coeff(const BigInt& x, unsigned n) {
  if (x < 0) throw std::invalid_argument("multiset_coeff: negative x");
  if (x == 0) return n == 0 ? 1 : 0;
  return binomial(x + (int)n - 1, n);
}

Rational pochhammer_k(const Rational& x, unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= x + (int)((i - 1) * k);
  return r;
}

Rational harmonic(unsigned k) {
  Rational h = 0;
  for (unsigned i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

double Sci::as_double() const { return mantissa * std::pow(10.0, (double)exp10); }

namespace {

long digits10(const BigInt& v) {
  return (long)v.str().size();  // v > 0
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Sci to_sci(const Rational& r) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  BigInt num = numerator(r), den = denominator(r);
  if (num == 0) return {};
  double sign = 1;
  if (num < 0) {
    sign = -1;
    num = -num;
  }
  const long guard = 24;
  const long e0 = digits10(num) - digits10(den);
  // scaled = floor(|r| * 10^(guard - e0)), an integer of ~guard digits
  const long t = guard - e0;
  BigInt scaled = t >= 0 ? (num * pow10(t)) / den : num / (den * pow10(-t));
  const std::string s = scaled.str();
  const long ds = (long)s.size();
  const double lead = std::stod(s.substr(0, std::min<long>(ds, 17)));
  const long lead_len = std::min<long>(ds, 17);
  Sci out;
  out.exp10 = e0 - guard + ds - 1;
  out.mantissa = sign * lead / std::pow(10.0, (double)(lead_len - 1));
  if (out.mantissa >= 10 || out.mantissa <= -10) {
    out.mantissa /= 10;
    out.exp10 += 1;
  }
  return out;
}

double log_rational(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("log_rational: non-positive value");
  const Sci s = to_sci(r);
  return std::log(s.mantissa) + s.exp10 * std::log(10.0);
}

std::string format_sci(const Sci& s, int sig) {
  std::ostringstream os;
  os.precision(sig - 1);
  os << std::fixed << s.mantissa << "e" << (s.exp10 >= 0 ? "+" : "")
     << s.exp10;
  return os.str();
}

std::string format_probability(const Rational& p) {
  if (p == 1) return "1";
  if (p == 0) return "0";
  const Sci s = to_sci(p);
  if (s.exp10 >= -2 && s.exp10 <= 0) {
    // fixed notation with two significant digits
    std::ostringstream os;
    os.precision(1 - s.exp10);
    os << std::fixed << s.as_double();
    return os.str();
  }
  return format_sci(s, 2);
}

Rational rational_from_decimal(const std::string& s) {
  std::string t = s;
  long exp = 0;
  const auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    exp = std::stol(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  const auto dot = t.find('.');
  std::string digits = t;
  if (dot != std::string::npos) {
    digits = t.substr(0, dot) + t.substr(dot + 1);
    exp -= (long)(t.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a decimal number: " + s);
  Rational r{BigInt(digits), 1};
  if (exp > 0) r *= Rational(pow10(exp), 1);
  if (exp < 0) r /= Rational(pow10(-exp), 1);
  return neg ? -r : r;
}

std::string rational_to_decimal(const Rational& r, int sig) {
  if (r == 0) return "0";
  const Sci s = to_sci(r);
  if (s.exp10 >= -4 && s.exp10 < sig) {
    std::ostringstream os;
    os.precision(std::max(0L, sig - 1 - s.exp10));
    os << std::fixed << s.as_double();
    return os.str();
  }
  return format_sci(s, sig);
}

}  // namespace sp
