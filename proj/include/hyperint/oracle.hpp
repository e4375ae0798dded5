/**
 * @file oracle.hpp
 * @brief Independent ground-truth engines: adaptive Gauss-Kronrod quadrature,
 *        half-line improper integrals, and Monte-Carlo moment estimation.
 *
 * By design this module may call elementary functions only; it never touches
 * the hypergeometric kernel or the closed-form integral code, so agreement
 * between the two paths is evidence rather than tautology.
 */
#pragma once

#include <cstddef>
#include <functional>

#include "hyperint/errors.hpp"

namespace hyperint::oracle {

/// Outcome of an adaptive quadrature run.
struct QuadratureResult {
  double value = 0.0;
  double abs_err_est = 0.0;      ///< sum of per-panel rule differences
  std::size_t subdivisions = 1;  ///< number of leaf panels evaluated
  bool converged = false;        ///< abs_err_est <= max(abs_tol, rel_tol*|value|)
};

/**
 * @brief Integrate f over the finite interval [a, b].
 *
 * Adaptive bisection with the embedded Gauss(7)/Kronrod(15) pair; the panel
 * with the largest estimated error is split first, each panel capped at
 * bisection depth 60.  On failure to meet tolerance the best-effort value is
 * returned with converged = false (no exception).
 *
 * @throws DomainError unless a < b and both are finite.
 */
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-10,
                           double rel_tol = 1e-10);

/**
 * @brief Integrate f over (0, inf) for integrands with eventual decay.
 *
 * Uses the variable change x = t/(1-t) onto (0,1); all quadrature nodes are
 * interior, so neither the x = 0 endpoint nor the compactified infinity is
 * ever sampled directly.
 */
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double abs_tol = 1e-10,
                                     double rel_tol = 1e-10);

/// Monte-Carlo estimate of E[X^n] with its standard error.
struct MomentEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
};

/**
 * @brief Sample mean of sampler()^n over `count` draws, with standard error.
 * @throws DomainError if count < 1000 (estimate would be meaningless).
 */
MomentEstimate mc_moment(const std::function<double()>& sampler, unsigned n,
                         std::size_t count);

}  // namespace hyperint::oracle
