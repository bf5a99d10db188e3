#include "sp/counting.hpp"

#include <cmath>

#include "sp/core.hpp"

namespace sp {

namespace {

BigInt pow_int(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void check_nm(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
}

}  // namespace

bool sp_count_exact_defined(int n, int m) {
  return n == 1 || m <= 2 || n == 2 || m == 3 || m == 4;
}

BigInt sp_count_exact(int n, int m) {
  check_nm(n, m);
  if (n == 1) return factorial(m);
  if (m <= 2) return pow_int(factorial(m), n);
  if (n == 2) return factorial(m) * binomial(2 * m - 2, m - 1);
  if (m == 3) return 6 * pow_int(2, n - 1) * (pow_int(2, n) - 1);
  if (m == 4) return 24 * pow_int(4, n - 1) * (pow_int(2, n + 1) - 3);
  throw capability_error("sp_count_exact: no closed formula for this (n,m)");
}

BoundResult sp_bounds_ic(int n, int m) {
  check_nm(n, m);
  if (n < 2 || m < 2)
    throw std::invalid_argument("sp_bounds_ic: requires n, m >= 2");
  const BigInt half_axes = factorial(m) / 2;
  const BigInt s = pow_int(2, m - 1);
  const BigInt up = half_axes * pow_int(2, (m - 1) * n);
  const BigInt lo =
      half_axes * (pow_int(2, (m - 1) * n) + pow_int(s - 2, n) - 2 * pow_int(s - 1, n));
  BoundResult r;
  r.lower = Rational(lo);
  r.upper = Rational(up);
  if (sp_count_exact_defined(n, m)) r.exact = Rational(sp_count_exact(n, m));
  r.formula = "sp_count_bounds_ic";
  return r;
}

BoundResult ic_probability_bounds(int n, int m) {
  BoundResult r = sp_bounds_ic(n, m);
  const Rational total{pow_int(factorial(m), n)};
  if (r.lower) *r.lower /= total;
  if (r.upper) *r.upper /= total;
  if (r.exact) *r.exact /= total;
  r.formula = "ic_probability_bounds";
  return r;
}

double sw_upper_log(int n, int m, SwKind kind, double ln_ck) {
  check_nm(n, m);
  const double ln_mf = log_rational(Rational(factorial(m)));
  switch (kind) {
    case SwKind::single_peaked:
      return ln_mf + (double)(m - 1) * (n - 1) * std::log(4.0);
    case SwKind::group_separable:
      return ln_mf + (double)m * (n - 1) * std::log(3.0 + 2.0 * std::sqrt(2.0));
    case SwKind::generic:
      return ln_mf + (double)m * (n - 1) * ln_ck;
  }
  throw std::invalid_argument("sw_upper_log: bad kind");
}

BigInt marcus_tardos_exponent(int k) {
  if (k < 1) throw std::invalid_argument("marcus_tardos_exponent: k < 1");
  return 2 * pow_int(k, 4) * binomial(BigInt(k) * k, k);
}

BigInt marcus_tardos_ck(int k) {
  const BigInt e = marcus_tardos_exponent(k);
  if (e > 100000)
    throw capability_error("marcus_tardos_ck: constant too large, use marcus_tardos_ln_ck");
  return pow_int(15, e.convert_to<unsigned>());
}

double marcus_tardos_ln_ck(int k) {
  return marcus_tardos_exponent(k).convert_to<double>() * std::log(15.0);
}

std::optional<double> known_best(int k) {
  switch (k) {
    case 2: return 1.0;
    case 3: return 4.0;
    case 4: return 13.738;
    default: return std::nullopt;
  }
}

bool iac_exact_defined(int n, int m) {
  return n == 1 || m <= 2 || n == 2 || m == 3;
}

Rational iac_exact(int n, int m) {
  check_nm(n, m);
  if (n == 1 || m <= 2) return 1;
  if (n == 2) return Rational(binomial(2 * m - 2, m - 1) + 1, factorial(m) + 1);
  if (m == 3)
    return Rational(BigInt(60) * n, BigInt(n + 2) * (n + 3) * (n + 4));
  throw capability_error("iac_exact: no closed formula for this (n,m)");
}

BoundResult iac_bounds(int n, int m) {
  check_nm(n, m);
  if (n < 2 || m < 2)
    throw std::invalid_argument("iac_bounds: requires n, m >= 2");
  const BigInt s = pow_int(2, m - 1);
  const BigInt total = multiset_coeff(factorial(m), n);
  const Rational half_axes{factorial(m), 2};
  BoundResult r;
  r.upper = half_axes * Rational(multiset_coeff(s, n), total);
  r.lower = half_axes *
            Rational(multiset_coeff(s, n) - 2 * multiset_coeff(s - 1, n) +
                         multiset_coeff(s - 2, n),
                     total);
  if (iac_exact_defined(n, m)) r.exact = iac_exact(n, m);
  r.formula = "iac_bounds";
  return r;
}

Rational polya_lower(int n, int m, const BigInt& a) {
  check_nm(n, m);
  if (n < 2 || m < 2)
    throw std::invalid_argument("polya_lower: requires n, m >= 2");
  if (a < 1)
    throw std::invalid_argument("polya_lower: requires a >= 1 (a = 0 is IC)");
  const unsigned ak = a.convert_to<unsigned>();
  const BigInt mf = factorial(m);
  const Rational prefix =
      Rational(mf * factorial(n - 1)) /
      (Rational(a) * pochhammer_k(Rational(mf, a), n, 1));
  Rational bracket = 1;
  bracket += Rational(BigInt(2), a) * Rational(binomial(2 * m - 2, m - 1)) * harmonic(n - 1);
  Rational sum = 0;
  const Rational tail_votes{pow_int(2, m - 1) - 2};
  for (int l = 2; l <= n - 1; ++l) {
    Rational term = pochhammer_k(tail_votes, n - l, ak) / Rational(pow_int(a, n - l));
    term *= harmonic(l - 1);
    term /= Rational(BigInt(l) * factorial(n - l));
    sum += term;
  }
  bracket += Rational(n) / Rational(a) * sum;
  return prefix * bracket;
}

double polya_lower_simple(int n, int m) {
  check_nm(n, m);
  if (n < 2) throw std::invalid_argument("polya_lower_simple: requires n >= 2");
  const double mf = log_rational(Rational(factorial(m)));
  const double binom = log_rational(Rational(binomial(2 * m - 2, m - 1)));
  return (1.0 / n) * (1.0 + 2.0 * std::log((double)(n - 1)) * std::exp(binom - mf));
}

Rational mallows_z(int m, const Rational& phi) {
  if (phi <= 0 || phi > 1)
    throw std::invalid_argument("mallows_z: phi must be in (0,1]");
  Rational z = 1;
  Rational geo = 1, ppow = 1;
  for (int i = 2; i <= m; ++i) {
    ppow *= phi;
    geo += ppow;
    z *= geo;
  }
  return z;
}

Rational mallows_lower(int n, int m, const Rational& phi) {
  check_nm(n, m);
  const Rational num = 1 + phi * (m - 1) +
                       phi * phi * Rational(BigInt(m - 2) * (m - 3), BigInt(2));
  const Rational ratio = num / mallows_z(m, phi);
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= ratio;
  return r;
}

MallowsSimpleBounds mallows_lower_simple(int n, int m) {
  check_nm(n, m);
  if (m < 2) throw std::invalid_argument("mallows_lower_simple: m < 2");
  const double im = 1.0 / m;
  MallowsSimpleBounds b;
  b.refined = std::pow(
      1.5 * std::pow((1.0 - im) / (1.0 - std::pow(im, m)), m - 1), n);
  b.rough = std::pow(1.0 - im, (double)(m - 1) * n);
  return b;
}

}  // namespace sp
