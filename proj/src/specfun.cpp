/**
 * @file specfun.cpp
 * @brief Implementation of the hypergeometric series kernel.
 */
#include "hyperint/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperint {

namespace {

using detail::dd;
using detail::dd_add;
using detail::dd_div;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_to_double;
using detail::two_prod;
using detail::two_sum;

/// Epsilon of a double-double accumulation, with a small safety factor,
/// used to turn the largest intermediate partial sum into an absolute
/// cancellation-loss estimate.
constexpr double kDdEps = 5.0e-32;

bool is_nonpositive_integer(double b) {
  return b <= 0.0 && b == std::floor(b);
}

void require_pole_free(double b, const char* name) {
  if (is_nonpositive_integer(b))
    throw PoleParameter(std::string(name) +
                        " parameter is zero or a negative integer: " +
                        std::to_string(b));
}

/// Shared bookkeeping for a term-by-term summation in double-double.
struct Accumulator {
  dd sum{0.0, 0.0};
  std::size_t terms = 0;
  double last_abs = 0.0;
  double max_abs_partial = 0.0;
  std::size_t small_run = 0;
  bool small_hit = false;

  void add(const dd& term, const SeriesConfig& cfg) {
    sum = dd_add(sum, term);
    ++terms;
    last_abs = std::fabs(dd_to_double(term));
    max_abs_partial = std::max(max_abs_partial, std::fabs(sum.hi));
    const double bound = cfg.rel_tol * std::fabs(sum.hi) + cfg.abs_tol;
    if (last_abs <= bound) {
      if (++small_run >= cfg.consecutive_small) small_hit = true;
    } else {
      small_run = 0;
    }
  }

  /// Converts to the public record.  trunc_err_est is the larger of the last
  /// included term and the cancellation-loss guard; converged additionally
  /// requires that estimate to sit inside the configured tolerance, so a sum
  /// that met the small-term rule but lost too many digits to cancellation is
  /// reported honestly as not converged.
  detail::SeriesResultDD finish(const SeriesConfig& cfg) const {
    detail::SeriesResultDD r;
    r.value = sum;
    r.diag.value = dd_to_double(sum);
    r.diag.terms_used = terms;
    r.diag.trunc_err_est = std::max(last_abs, max_abs_partial * kDdEps);
    r.diag.converged =
        small_hit && terms <= cfg.max_terms &&
        r.diag.trunc_err_est <=
            cfg.rel_tol * std::fabs(r.diag.value) + std::max(cfg.abs_tol, 1e-300);
    return r;
  }
};

/// Direct sum of 1F1(a;b;x): t_{n+1} = t_n * (a+n) x / ((b+n)(n+1)).
/// Parameter shifts a+n, b+n are formed with error-free two_sum so the term
/// recurrence itself stays accurate to the dd epsilon.
detail::SeriesResultDD sum_1f1_direct(double a, double b, double x,
                                      const SeriesConfig& cfg) {
  Accumulator acc;
  dd term = dd_from(1.0);
  acc.add(term, cfg);
  for (std::size_t n = 0; acc.terms < cfg.max_terms && !acc.small_hit; ++n) {
    const double dn = static_cast<double>(n);
    term = dd_mul(term, two_sum(a, dn));
    term = dd_mul(term, x);
    term = dd_div(term, two_sum(b, dn));
    term = dd_div(term, dn + 1.0);
    acc.add(term, cfg);
    if (term.hi == 0.0) {
      // x == 0 or (a)_n hit an exact zero: the entire tail vanishes.
      acc.small_hit = true;
      break;
    }
  }
  return acc.finish(cfg);
}

}  // namespace

double pochhammer(double theta, std::size_t n) {
  double prod = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    prod *= theta + static_cast<double>(k);
  return prod;
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
#if defined(__unix__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace detail {

SeriesResultDD hyp1f1_dd(double a, double b, double x, const SeriesConfig& cfg,
                         double kummer_threshold) {
  cfg.validate();
  require_pole_free(b, "hyp1f1 b");
  if (x < kummer_threshold) {
    // Kummer transformation: 1F1(a;b;x) = e^x * 1F1(b-a;b;-x); for b-a > 0
    // the reflected sum has same-signed terms where the direct sum would
    // cancel ~|x|/ln(10) digits.
    SeriesResultDD inner = sum_1f1_direct(b - a, b, -x, cfg);
    const dd scale = dd_exp(x);
    inner.value = dd_mul(inner.value, scale);
    inner.diag.value = dd_to_double(inner.value);
    inner.diag.trunc_err_est *= dd_to_double(scale);
    return inner;
  }
  return sum_1f1_direct(a, b, x, cfg);
}

SeriesResultDD hyp1f2_dd(double a, double b, double c, double x,
                         const SeriesConfig& cfg) {
  cfg.validate();
  require_pole_free(b, "hyp1f2 b");
  require_pole_free(c, "hyp1f2 c");
  Accumulator acc;
  dd term = dd_from(1.0);
  acc.add(term, cfg);
  for (std::size_t n = 0; acc.terms < cfg.max_terms && !acc.small_hit; ++n) {
    const double dn = static_cast<double>(n);
    term = dd_mul(term, two_sum(a, dn));
    term = dd_mul(term, x);
    term = dd_div(term, two_sum(b, dn));
    term = dd_div(term, two_sum(c, dn));
    term = dd_div(term, dn + 1.0);
    acc.add(term, cfg);
    if (term.hi == 0.0) {
      acc.small_hit = true;
      break;
    }
  }
  return acc.finish(cfg);
}

SeriesResultDD hyp1f1_scaled_dd(double b, double x, const SeriesConfig& cfg) {
  cfg.validate();
  require_pole_free(b, "hyp1f1_scaled b");
  if (x < 0.0)
    throw DomainError("hyp1f1_scaled requires x >= 0, got " +
                      std::to_string(x));
  if (x <= 30.0 || (b <= 0.0 && x <= 700.0)) {
    // Direct product; safe from overflow here and valid for any pole-free b.
    SeriesResultDD r = sum_1f1_direct(1.0, b, x, cfg);
    const dd scale = dd_exp(-x);
    r.value = dd_mul(r.value, scale);
    r.diag.value = dd_to_double(r.value);
    r.diag.trunc_err_est *= dd_to_double(scale);
    return r;
  }
  if (b <= 0.0)
    throw DomainError("hyp1f1_scaled requires b > 0 for x > 700");
  // Mode-centred scaled summation: u_n = e^{-x} x^n / (b)_n peaks near
  // n0 = x - b with a Gaussian-like profile of width ~sqrt(x).  One log-space
  // evaluation anchors the peak term; neighbours follow from the exact ratio
  // u_{n+1}/u_n = x/(b+n).  All terms are positive, so no cancellation.
  long n0 = static_cast<long>(std::floor(x - b));
  if (n0 < 0) n0 = 0;
  const double dn0 = static_cast<double>(n0);
  const double log_u0 = -x + dn0 * std::log(x) - (log_gamma(b + dn0) - log_gamma(b));
  const dd u0 = dd_exp(log_u0);

  Accumulator acc;
  acc.add(u0, cfg);
  // Upward sweep from the peak.
  bool up_complete = false;
  double up_tail = 0.0;
  dd term = u0;
  for (long n = n0; acc.terms < cfg.max_terms; ++n) {
    term = dd_div(dd_mul(term, x), two_sum(b, static_cast<double>(n)));
    acc.add(term, cfg);
    if (acc.small_hit || term.hi == 0.0) {
      up_complete = true;
      up_tail = std::fabs(term.hi);
      break;
    }
  }
  if (!up_complete) up_tail = std::fabs(term.hi);
  // Downward sweep: u_{n-1} = u_n * (b+n-1)/x.  Reaching n = 0 exhausts the
  // lower tail exactly, so it contributes no truncation error even when the
  // final term u_0 = e^{-x} is not "small" by the tolerance rule.
  acc.small_hit = false;
  acc.small_run = 0;
  bool down_complete = (n0 == 0);
  double down_tail = 0.0;
  term = u0;
  for (long n = n0; n >= 1 && acc.terms < cfg.max_terms; --n) {
    term = dd_div(dd_mul(term, b + static_cast<double>(n) - 1.0), dd_from(x));
    acc.add(term, cfg);
    if (acc.small_hit || term.hi == 0.0) {
      down_complete = true;
      down_tail = std::fabs(term.hi);
      break;
    }
    if (n == 1) {
      down_complete = true;
      break;
    }
  }
  if (!down_complete && n0 > 0) down_tail = std::fabs(term.hi);

  detail::SeriesResultDD r;
  r.value = acc.sum;
  r.diag.value = dd_to_double(acc.sum);
  r.diag.terms_used = acc.terms;
  r.diag.trunc_err_est =
      std::max({up_tail, down_tail, acc.max_abs_partial * kDdEps});
  r.diag.converged =
      up_complete && down_complete &&
      r.diag.trunc_err_est <= cfg.rel_tol * std::fabs(r.diag.value) +
                                  std::max(cfg.abs_tol, 1e-300);
  return r;
}

std::pair<SeriesResultDD, SeriesResultDD> hyp1f1_imag_parts_dd(
    double b, double w, const SeriesConfig& cfg) {
  cfg.validate();
  require_pole_free(b, "hyp1f1_imag_parts b");
  const dd neg_w2 = detail::dd_neg(two_prod(w, w));

  // Real part: p_{k+1} = p_k * (-w^2) / ((b+2k)(b+2k+1)), p_0 = 1.
  Accumulator pacc;
  dd term = dd_from(1.0);
  pacc.add(term, cfg);
  for (std::size_t k = 0; pacc.terms < cfg.max_terms && !pacc.small_hit; ++k) {
    const double d2k = static_cast<double>(2 * k);
    term = dd_mul(term, neg_w2);
    term = dd_div(term, two_sum(b, d2k));
    term = dd_div(term, two_sum(b, d2k + 1.0));
    pacc.add(term, cfg);
  }

  // Imaginary part: q_0 = w/b, q_{k+1} = q_k * (-w^2)/((b+2k+1)(b+2k+2)).
  Accumulator qacc;
  term = dd_div(dd_from(w), dd_from(b));
  qacc.add(term, cfg);
  for (std::size_t k = 0; qacc.terms < cfg.max_terms && !qacc.small_hit; ++k) {
    const double d2k = static_cast<double>(2 * k);
    term = dd_mul(term, neg_w2);
    term = dd_div(term, two_sum(b, d2k + 1.0));
    term = dd_div(term, two_sum(b, d2k + 2.0));
    qacc.add(term, cfg);
  }
  return {pacc.finish(cfg), qacc.finish(cfg)};
}

}  // namespace detail

SeriesValue hyp1f1(double a, double b, double x, const SeriesConfig& cfg,
                   double kummer_threshold) {
  return detail::hyp1f1_dd(a, b, x, cfg, kummer_threshold).diag;
}

SeriesValue hyp1f2(double a, double b, double c, double x,
                   const SeriesConfig& cfg) {
  return detail::hyp1f2_dd(a, b, c, x, cfg).diag;
}

SeriesValue hyp1f1_scaled(double b, double x, const SeriesConfig& cfg) {
  return detail::hyp1f1_scaled_dd(b, x, cfg).diag;
}

std::pair<SeriesValue, SeriesValue> hyp1f1_imag_parts(double b, double w,
                                                      const SeriesConfig& cfg) {
  auto [p, q] = detail::hyp1f1_imag_parts_dd(b, w, cfg);
  return {p.diag, q.diag};
}

}  // namespace hyperint
