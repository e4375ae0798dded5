/**
 * @file series.hpp
 * @brief Configuration and result records for convergence-controlled series.
 */
#pragma once

#include <cstddef>

#include "hyperint/errors.hpp"

namespace hyperint {

/**
 * @brief Tolerances and caps governing series summation.
 *
 * A series is considered converged once `consecutive_small` successive terms
 * each satisfy |term| <= rel_tol*|partial_sum| + abs_tol.  Summation always
 * stops after max_terms terms; reaching the cap clears SeriesValue::converged
 * instead of throwing.
 */
struct SeriesConfig {
  double rel_tol = 1e-14;        ///< relative tolerance, must be > 0
  double abs_tol = 1e-300;       ///< absolute floor, must be >= 0
  std::size_t max_terms = 10000; ///< hard cap on summed terms, must be >= 1
  std::size_t consecutive_small = 3; ///< small terms required in a row, >= 1

  /// Throws DomainError if any field is outside its documented range.
  void validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("SeriesConfig.rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("SeriesConfig.abs_tol must be >= 0");
    if (max_terms < 1) throw DomainError("SeriesConfig.max_terms must be >= 1");
    if (consecutive_small < 1)
      throw DomainError("SeriesConfig.consecutive_small must be >= 1");
  }
};

/**
 * @brief Outcome of one series evaluation.
 *
 * trunc_err_est is an absolute estimate built from the last included term,
 * plus a cancellation-loss guard for alternating sums whose intermediate
 * partial sums dwarf the final value.
 */
struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double trunc_err_est = 0.0;
  bool converged = false;
};

}  // namespace hyperint
