/**
 * @file integrals.hpp
 * @brief Closed-form antiderivatives of x^alpha * k(eta*x^beta) for the five
 *        kernels k in {exp, cosh, sinh, cos, sin}, plus the gamma-function
 *        closed forms of the associated half-line and full-line integrals.
 *
 * All antiderivatives are normalized so that F(x) -> 0 as x -> 0+ (possible
 * whenever alpha + 1 > 0), making definite integrals plain differences.
 */
#pragma once

#include <vector>

#include "hyperint/errors.hpp"
#include "hyperint/series.hpp"

namespace hyperint {

enum class IntegralKind { Exp, Cosh, Sinh, Cos, Sin };

/// Parameters of one integrand family x^alpha * kernel(eta * x^beta).
struct IntegralSpec {
  IntegralKind kind = IntegralKind::Exp;
  double alpha = 0.0;
  double eta = 1.0;
  double beta = 1.0;

  /// @throws InvalidSpec when eta == 0, beta == 0, alpha == -1, or (for the
  /// non-exponential kernels) alpha == -beta - 1.
  void validate() const;
};

/// Antiderivative evaluation with the series diagnostics that produced it.
struct AntiderivativeValue {
  double value = 0.0;
  bool elementary_branch = false;
  std::vector<SeriesValue> series_report;
};

/**
 * @brief F(x) with F(0+) = 0 for the given spec, at x >= 0.
 *
 * For kind == Exp with |alpha - (beta - 1)| <= 1e-12 the elementary form
 * expm1(eta x^beta)/(eta beta) is used.  Otherwise the value is assembled
 * from 1F1 (exp kernel) or a pair of 1F2 evaluations (other kernels), with
 * the combination carried out in double-double precision because its
 * intermediates can exceed the result by a factor ~e^{eta x^beta}.
 *
 * @throws InvalidSpec / DomainError for invalid spec, x < 0, or x == 0 with
 *         alpha + 1 < 0 (the limit diverges there).
 */
AntiderivativeValue antiderivative(const IntegralSpec& spec, double x,
                                   const SeriesConfig& cfg = {});

/**
 * @brief antiderivative(spec, b) - antiderivative(spec, a) for 0 <= a < b.
 * @throws NoConvergence if either endpoint's series failed to converge.
 */
double definite_integral(const IntegralSpec& spec, double a, double b,
                         const SeriesConfig& cfg = {});

/**
 * @brief Closed form of the integral of x^alpha e^{-eta x^beta} over (0, inf):
 *        Gamma((alpha+1)/beta) / (|beta| * eta^{(alpha+1)/beta}).
 *
 * Convergence requires (alpha+1)/beta > 0, i.e. alpha > -1 for beta > 0 and
 * alpha < -1 for beta < 0; eta must be positive.
 *
 * @throws DomainError when the convergence conditions fail.
 */
double half_line_integral(double alpha, double eta, double beta);

/**
 * @brief Closed form of the integral of |x|^alpha e^{-eta |x|^beta} over the
 *        whole real line: exactly twice half_line_integral.
 */
double full_line_integral(double alpha, double eta, double beta);

}  // namespace hyperint
