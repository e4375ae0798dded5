/**
 * @file uniform.hpp
 * @brief Deterministic uniform variate used by every sampler in the library.
 */
#pragma once

#include <random>

namespace hyperint {
namespace detail {

/// Uniform double in (0, 1): the top 53 bits of one generator draw, offset by
/// half a unit so neither endpoint is attainable.  Written out explicitly
/// (instead of std::uniform_real_distribution) so that a fixed seed yields
/// byte-identical streams on every platform and standard library.
inline double u01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail
}  // namespace hyperint
