/**
 * @file identities.hpp
 * @brief Residual checks for the hypergeometric identities underlying the
 *        closed-form antiderivatives.
 *
 * Each identity is evaluated as two independently computed sides; the
 * residual quantifies how well they agree at a point.  The checks are the
 * backbone of the property-test suite and are exposed through the CLI.
 *
 * Identity catalogue:
 *  - L1a: product factorization  prod_{m=0..j}   (alpha + m beta + 1)  into
 *         a Pochhammer form (valid for all j >= 0).
 *  - L1b: product factorization  prod_{m=0..2j}  (alpha + m beta + 1).  The
 *         commonly printed Pochhammer form breaks at j = 0 (its prefactor
 *         keeps two linear factors where the product has one); this library
 *         evaluates that printed prefactor at j = 0 so the defect is visible,
 *         and the corrected form for j >= 1.
 *  - L1c: product factorization  prod_{m=0..2j+1}(alpha + m beta + 1)
 *         (corrected Pochhammer arguments; exact for all j >= 0).
 *  - T2:  even/cosh split      of e^w 1F1(1;b;-w) against 1F2 series.
 *  - T3:  odd/sinh split       of e^w 1F1(1;b;-w) against 1F2 series.
 *  - T4:  full exponential recombination (sum of the T2 and T3 forms).
 *  - T5:  real  (cosine) part of the complex-exponential identity.
 *  - T6:  imaginary (sine) part of the complex-exponential identity.
 *  - T7:  joint check of both parts; reports the worse of T5/T6.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "hyperint/errors.hpp"
#include "hyperint/series.hpp"

namespace hyperint {

enum class IdentityId { L1a, L1b, L1c, T2, T3, T4, T5, T6, T7 };

/// Canonical short name of an identity ("L1a" ... "T7").
std::string identity_name(IdentityId id);

/// Inverse of identity_name.  @throws InvalidSpec for unknown names.
IdentityId identity_from_name(const std::string& name);

/// Two sides of an identity evaluated at one point, with their residual.
struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;      ///< |lhs - rhs|
  double rel_residual = 0.0;  ///< |lhs - rhs| / (1 + max(|lhs|, |rhs|))
};

/**
 * @brief Check one of the product/Pochhammer factorizations (L1a/L1b/L1c)
 *        at integer order j.
 *
 * The left side is always the literal running product over m; the right side
 * is the factored Pochhammer form described in the file header.
 *
 * @throws InvalidSpec for a non-product identity id; DomainError for
 *         beta == 0 or non-finite parameters.
 */
IdentityResidual check_lemma1(IdentityId id, double alpha, double beta,
                              std::size_t j);

/**
 * @brief Check one of the transformation identities (T2..T7) at a point.
 *
 * Both sides are assembled from independent series evaluations: the 1F2 side
 * from hyp1f2, the exponential side from hyp1f1 / hyp1f1_scaled, and the
 * trigonometric side from the even/odd part series of 1F1(1;b;iw).  All
 * combinations are carried in double-double precision, since the hyperbolic
 * sides cancel e^{2w} intermediates down to an e^{w}-sized result.
 *
 * @throws InvalidSpec for a product identity id; DomainError for x <= 0,
 *         beta == 0, or non-finite parameters; PoleParameter if a series
 *         denominator parameter is a nonpositive integer; NoConvergence if
 *         any series fails to converge under cfg.
 */
IdentityResidual check_identity(IdentityId id, double alpha, double beta,
                                double eta, double x,
                                const SeriesConfig& cfg = {});

/// Worst case found by a randomized residual sweep.
struct SweepResult {
  double max_rel_residual = 0.0;
  double worst_alpha = 0.0;
  double worst_beta = 0.0;
  double worst_eta = 0.0;
  double worst_x = 0.0;
  std::size_t samples = 0;
};

/**
 * @brief Randomized residual sweep for a transformation identity.
 *
 * Draws `samples` tuples with alpha in (-0.9, 3), beta in {1, 2, 3},
 * eta in (0.2, 2), x in (0.1, 2) from mt19937_64(seed) — the draw order is
 * beta, alpha, eta, x per sample, so results are reproducible byte-for-byte —
 * and records the largest rel_residual seen.
 *
 * @throws InvalidSpec for a product identity id; DomainError for samples == 0.
 */
SweepResult sweep_identity(IdentityId id, std::size_t samples,
                           std::uint64_t seed, const SeriesConfig& cfg = {});

}  // namespace hyperint
