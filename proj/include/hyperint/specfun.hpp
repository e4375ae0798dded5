/**
 * @file specfun.hpp
 * @brief Special-function kernel: gamma/log-gamma, Pochhammer symbols, and
 *        convergence-controlled evaluation of the series
 *
 *          1F1(a;b;x)   = sum_n (a)_n / (b)_n * x^n / n!
 *          1F2(a;b,c;x) = sum_n (a)_n / ((b)_n (c)_n) * x^n / n!
 *
 * plus two purpose-built evaluators used throughout the library: a fused,
 * overflow-free e^{-x} * 1F1(1;b;x) for x >= 0, and the real/imaginary parts
 * of 1F1(1;b;iw) summed directly with stride 2.
 *
 * All series are accumulated in double-double precision (two binary64 words
 * per value); see detail/double_double.hpp for the rationale.
 */
#pragma once

#include <cstddef>
#include <utility>

#include "hyperint/detail/double_double.hpp"
#include "hyperint/errors.hpp"
#include "hyperint/series.hpp"

namespace hyperint {

/// Default argument below which hyp1f1 switches to the Kummer transformation
/// 1F1(a;b;x) = e^x * 1F1(b-a;b;-x) to avoid catastrophic cancellation.
inline constexpr double kDefaultKummerThreshold = -30.0;

/**
 * @brief Rising factorial (theta)_n = theta*(theta+1)*...*(theta+n-1).
 *
 * Computed by direct product (never as a gamma ratio) so that exact zeros are
 * preserved when theta is a non-positive integer with theta + n > 0.
 * (theta)_0 == 1 for every theta.
 */
double pochhammer(double theta, std::size_t n);

/**
 * @brief log(Gamma(x)) for x > 0.
 * @throws DomainError for x <= 0.
 */
double log_gamma(double x);

/**
 * @brief 1F1(a;b;x) under the given series configuration.
 *
 * For x < kummer_threshold the Kummer transformation is applied so all summed
 * terms are same-signed whenever b - a > 0.
 *
 * @throws PoleParameter if b is zero or a negative integer.
 */
SeriesValue hyp1f1(double a, double b, double x, const SeriesConfig& cfg = {},
                   double kummer_threshold = kDefaultKummerThreshold);

/**
 * @brief 1F2(a;b,c;x) under the given series configuration.
 *
 * No stabilizing transformation exists for large negative x; instead the
 * cancellation loss (largest intermediate partial sum times the accumulator
 * epsilon) is folded into trunc_err_est, and converged is cleared if that
 * estimate exceeds the configured tolerance.
 *
 * @throws PoleParameter if b or c is zero or a negative integer.
 */
SeriesValue hyp1f2(double a, double b, double c, double x,
                   const SeriesConfig& cfg = {});

/**
 * @brief e^{-x} * 1F1(1;b;x) for x >= 0, evaluated without overflow.
 *
 * For large x the sum is re-centred on its largest term (index ~ x - b) with
 * the off-centre terms generated by exact ratio recurrences, so arguments far
 * beyond the e^{709} overflow point of the unscaled product remain finite.
 *
 * @throws PoleParameter if b is zero or a negative integer.
 * @throws DomainError if x < 0.
 */
SeriesValue hyp1f1_scaled(double b, double x, const SeriesConfig& cfg = {});

/**
 * @brief Real and imaginary parts of 1F1(1;b;iw), by direct summation.
 *
 * first  = sum_k (-1)^k w^{2k}   / (b)_{2k}
 * second = sum_k (-1)^k w^{2k+1} / (b)_{2k+1}
 *
 * The Pochhammer factors here run over the *unreduced* parameter b, which is
 * what makes the pair a genuinely independent counterpart to the 1F2 forms
 * used elsewhere.
 *
 * @throws PoleParameter if b is zero or a negative integer.
 */
std::pair<SeriesValue, SeriesValue> hyp1f1_imag_parts(
    double b, double w, const SeriesConfig& cfg = {});

namespace detail {

/// Series value carried at double-double precision plus its diagnostics.
/// Used by the integrals/identities modules, whose final combinations cancel
/// intermediates far larger than the result and must stay in dd throughout.
struct SeriesResultDD {
  dd value;
  SeriesValue diag;
};

SeriesResultDD hyp1f1_dd(double a, double b, double x, const SeriesConfig& cfg,
                         double kummer_threshold = kDefaultKummerThreshold);
SeriesResultDD hyp1f2_dd(double a, double b, double c, double x,
                         const SeriesConfig& cfg);
SeriesResultDD hyp1f1_scaled_dd(double b, double x, const SeriesConfig& cfg);
std::pair<SeriesResultDD, SeriesResultDD> hyp1f1_imag_parts_dd(
    double b, double w, const SeriesConfig& cfg);

}  // namespace detail

}  // namespace hyperint
