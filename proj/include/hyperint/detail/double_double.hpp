/**
 * @file double_double.hpp
 * @brief Minimal double-double (~106-bit) arithmetic for series kernels.
 *
 * The hypergeometric combinations evaluated in this library cancel huge
 * same-order intermediates (ratios up to ~e^{2w} -> e^{w}); plain binary64
 * with compensated summation keeps only ~3 significant digits at the worst
 * operating points, while a double-double accumulator keeps ~18.  Algorithms
 * are the classic error-free transformations (Dekker/Knuth, and Moller's
 * two_prod via fused multiply-add), assuming round-to-nearest binary64.
 */
#pragma once

#include <cmath>
#include <cstdlib>

namespace hyperint::detail {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

/// Error-free sum of two doubles (no magnitude ordering required).
inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

/// Error-free sum assuming |a| >= |b| (or a == 0).
inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

/// Error-free product via FMA.
inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_from(double a) { return {a, 0.0}; }

inline dd dd_neg(const dd& a) { return {-a.hi, -a.lo}; }

inline dd dd_add(const dd& a, const dd& b) {
  dd s = two_sum(a.hi, b.hi);
  const dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(const dd& a, double b) {
  dd s = two_sum(a.hi, b);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(const dd& a, const dd& b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(const dd& a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(const dd& a, const dd& b) {
  // Long division with two correction steps (QD-style accurate quotient).
  const double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  const double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline dd dd_div(const dd& a, double b) { return dd_div(a, dd_from(b)); }

inline double dd_to_double(const dd& a) { return a.hi + a.lo; }

inline double dd_abs_hi(const dd& a) { return std::fabs(a.hi); }

/**
 * @brief e^x for a binary64 argument, accurate to ~1e-31 relative.
 *
 * Range reduction x = k*ln2 + r with |r| <= ln2/2, Taylor series for e^r in
 * double-double, exact 2^k rescale.  Overflows to +inf past |x| ~ 709 like
 * std::exp does.
 */
inline dd dd_exp(double x) {
  if (x > 709.0) return {HUGE_VAL, 0.0};
  if (x < -745.0) return {0.0, 0.0};
  // ln2 split so that hi+lo carries ~107 bits of ln2.
  constexpr double kLn2Hi = 6.93147180559945286e-01;
  constexpr double kLn2Lo = 2.31904681384629956e-17;
  const double k = std::nearbyint(x / kLn2Hi);
  dd r = dd_add(dd_from(x), dd_neg(two_prod(k, kLn2Hi)));
  r = dd_sub(r, two_prod(k, kLn2Lo));
  // Taylor: |r| <= 0.347 needs ~25 terms to reach 1e-33.
  dd sum = dd_from(1.0);
  dd term = dd_from(1.0);
  for (int n = 1; n <= 30; ++n) {
    term = dd_div(dd_mul(term, r), static_cast<double>(n));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
  }
  const int ik = static_cast<int>(k);
  return {std::ldexp(sum.hi, ik), std::ldexp(sum.lo, ik)};
}

/// cosh(x) in double-double, from dd_exp.
inline dd dd_cosh(double x) {
  const dd e = dd_exp(std::fabs(x));
  const dd einv = dd_div(dd_from(1.0), e);
  return dd_mul(dd_add(e, einv), 0.5);
}

/// sinh(x) in double-double, from dd_exp (series fallback near 0 for accuracy).
inline dd dd_sinh(double x) {
  if (std::fabs(x) < 0.5) {
    // sinh(x) = x + x^3/3! + ... ; direct series avoids e^x - e^{-x} loss.
    const dd x2 = two_prod(x, x);
    dd term = dd_from(x);
    dd sum = term;
    for (int n = 1; n <= 12; ++n) {
      term = dd_div(dd_mul(term, x2),
                    static_cast<double>((2 * n) * (2 * n + 1)));
      sum = dd_add(sum, term);
      if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return sum;
  }
  const dd e = dd_exp(std::fabs(x));
  const dd einv = dd_div(dd_from(1.0), e);
  const dd s = dd_mul(dd_sub(e, einv), 0.5);
  return x < 0.0 ? dd_neg(s) : s;
}

}  // namespace hyperint::detail
