/**
 * @file identities.cpp
 * @brief Residual evaluation of the product factorizations (L1a/L1b/L1c) and
 *        transformation identities (T2..T7).
 */
#include "hyperint/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>

#include "hyperint/detail/double_double.hpp"
#include "hyperint/detail/uniform.hpp"
#include "hyperint/specfun.hpp"

namespace hyperint {

namespace {

using detail::dd;

constexpr std::array<const char*, 9> kIdentityNames = {
    "L1a", "L1b", "L1c", "T2", "T3", "T4", "T5", "T6", "T7"};

bool is_product_identity(IdentityId id) {
  return id == IdentityId::L1a || id == IdentityId::L1b ||
         id == IdentityId::L1c;
}

IdentityResidual make_residual(double lhs, double rhs) {
  IdentityResidual out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.residual = std::fabs(lhs - rhs);
  out.rel_residual =
      out.residual / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
  return out;
}

void require_converged(const detail::SeriesResultDD& r, const char* label) {
  if (!r.diag.converged) {
    throw NoConvergence(std::string("check_identity: the ") + label +
                        " series did not converge within the configured "
                        "term budget");
  }
}

/// e^{-s} 1F1(1;b;s), stable for either sign of s.
detail::SeriesResultDD scaled_series(double b, double s,
                                     const SeriesConfig& cfg) {
  if (s >= 0.0) {
    return detail::hyp1f1_scaled_dd(b, s, cfg);
  }
  detail::SeriesResultDD out = detail::hyp1f1_dd(1.0, b, s, cfg);
  out.value = detail::dd_mul(detail::dd_exp(-s), out.value);
  return out;
}

}  // namespace

std::string identity_name(IdentityId id) {
  return kIdentityNames[static_cast<std::size_t>(id)];
}

IdentityId identity_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kIdentityNames.size(); ++i) {
    if (name == kIdentityNames[i]) {
      return static_cast<IdentityId>(i);
    }
  }
  throw InvalidSpec("unknown identity id: " + name);
}

IdentityResidual check_lemma1(IdentityId id, double alpha, double beta,
                              std::size_t j) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("check_lemma1: alpha and beta must be finite");
  }
  if (beta == 0.0) {
    throw DomainError("check_lemma1: beta must be nonzero");
  }
  if (!is_product_identity(id)) {
    throw InvalidSpec(
        "check_lemma1: expects a product identity (L1a, L1b, or L1c)");
  }

  // The left side is always the literal running product over m.
  std::size_t top = j;  // inclusive upper limit for m
  if (id == IdentityId::L1b) {
    top = 2 * j;
  } else if (id == IdentityId::L1c) {
    top = 2 * j + 1;
  }
  double lhs = 1.0;
  for (std::size_t m = 0; m <= top; ++m) {
    lhs *= alpha + static_cast<double>(m) * beta + 1.0;
  }

  const double z2 = (alpha + 2.0 * beta + 1.0) / (2.0 * beta);
  const double z3 = (alpha + 3.0 * beta + 1.0) / (2.0 * beta);
  const double jd = static_cast<double>(j);

  double rhs = 0.0;
  switch (id) {
    case IdentityId::L1a:
      rhs = (alpha + 1.0) * std::pow(beta, jd) *
            pochhammer((alpha + 1.0) / beta + 1.0, j);
      break;
    case IdentityId::L1b:
      if (j == 0) {
        // Printed-form prefactor evaluated at j = 0: it keeps the two
        // factors (alpha+1)(alpha+beta+1) although the product has only
        // one.  Deliberately reported, so the defect is measurable.
        rhs = (alpha + 1.0) * (alpha + beta + 1.0);
      } else {
        // Corrected factorization: split the product into its even-index
        // part (alpha+1)(2b)^j (z2)_j and odd-index part
        // (alpha+beta+1)(2b)^{j-1} (z3)_{j-1}.
        rhs = (alpha + 1.0) * (alpha + beta + 1.0) *
              std::pow(2.0 * beta, 2.0 * jd - 1.0) * pochhammer(z2, j) *
              pochhammer(z3, j - 1);
      }
      break;
    default:  // IdentityId::L1c
      // Even-index part (alpha+1)(2b)^j (z2)_j times odd-index part
      // (alpha+beta+1)(2b)^j (z3)_j; exact for every j >= 0.
      rhs = (alpha + 1.0) * (alpha + beta + 1.0) *
            std::pow(2.0 * beta, 2.0 * jd) * pochhammer(z2, j) *
            pochhammer(z3, j);
      break;
  }
  return make_residual(lhs, rhs);
}

IdentityResidual check_identity(IdentityId id, double alpha, double beta,
                                double eta, double x,
                                const SeriesConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(eta) ||
      !std::isfinite(x)) {
    throw DomainError("check_identity: parameters must be finite");
  }
  if (beta == 0.0) {
    throw DomainError("check_identity: beta must be nonzero");
  }
  if (!(x > 0.0)) {
    throw DomainError("check_identity: x must be positive");
  }
  if (is_product_identity(id)) {
    throw InvalidSpec(
        "check_identity: product identities take an integer order; use "
        "check_lemma1");
  }

  const double w = eta * std::pow(x, beta);
  const double b = (alpha + beta + 1.0) / beta;
  const double z1 = (alpha + beta + 1.0) / (2.0 * beta);
  const double z2 = (alpha + 2.0 * beta + 1.0) / (2.0 * beta);
  const double z3 = (alpha + 3.0 * beta + 1.0) / (2.0 * beta);
  // Mixing factor beta*w/(alpha+beta+1), kept in double-double because the
  // hyperbolic combinations cancel e^{2w} intermediates down to e^{w}.
  const dd r = detail::dd_div(
      detail::two_prod(beta, w),
      detail::dd_add(detail::two_sum(alpha, beta), 1.0));

  if (id == IdentityId::T2 || id == IdentityId::T3 || id == IdentityId::T4) {
    const double q = 0.25 * w * w;
    const detail::SeriesResultDD fa = detail::hyp1f2_dd(1.0, z1, z2, q, cfg);
    const detail::SeriesResultDD fb = detail::hyp1f2_dd(1.0, z2, z3, q, cfg);
    require_converged(fa, "1F2(1;z1,z2;w^2/4)");
    require_converged(fb, "1F2(1;z2,z3;w^2/4)");
    // t1 = e^{w} 1F1(1;b;-w), t2 = e^{-w} 1F1(1;b;w).
    const detail::SeriesResultDD t1 = scaled_series(b, -w, cfg);
    require_converged(t1, "e^w 1F1(1;b;-w)");

    if (id == IdentityId::T4) {
      const dd rhs = detail::dd_mul(
          detail::dd_exp(w),
          detail::dd_sub(fa.value, detail::dd_mul(r, fb.value)));
      return make_residual(detail::dd_to_double(t1.value),
                           detail::dd_to_double(rhs));
    }

    const detail::SeriesResultDD t2 = scaled_series(b, w, cfg);
    require_converged(t2, "e^{-w} 1F1(1;b;w)");
    if (id == IdentityId::T2) {
      const dd lhs = detail::dd_sub(
          detail::dd_mul(detail::dd_cosh(w), fa.value),
          detail::dd_mul(detail::dd_mul(r, detail::dd_sinh(w)), fb.value));
      const dd rhs = detail::dd_mul(detail::dd_add(t1.value, t2.value), 0.5);
      return make_residual(detail::dd_to_double(lhs),
                           detail::dd_to_double(rhs));
    }
    const dd lhs = detail::dd_sub(
        detail::dd_mul(detail::dd_sinh(w), fa.value),
        detail::dd_mul(detail::dd_mul(r, detail::dd_cosh(w)), fb.value));
    const dd rhs = detail::dd_mul(detail::dd_sub(t1.value, t2.value), 0.5);
    return make_residual(detail::dd_to_double(lhs),
                         detail::dd_to_double(rhs));
  }

  // T5/T6/T7: real and imaginary parts of the complex-exponential identity,
  // checked as two real identities.  The right sides come from the even/odd
  // part series of 1F1(1;b;iw), which are summed over (b)_n directly and are
  // therefore independent of the 1F2 evaluations on the left.
  const double q = -0.25 * w * w;
  const detail::SeriesResultDD fa = detail::hyp1f2_dd(1.0, z1, z2, q, cfg);
  const detail::SeriesResultDD fb = detail::hyp1f2_dd(1.0, z2, z3, q, cfg);
  require_converged(fa, "1F2(1;z1,z2;-w^2/4)");
  require_converged(fb, "1F2(1;z2,z3;-w^2/4)");
  const auto parts = detail::hyp1f1_imag_parts_dd(b, w, cfg);
  require_converged(parts.first, "even part of 1F1(1;b;iw)");
  require_converged(parts.second, "odd part of 1F1(1;b;iw)");

  const double c = std::cos(w);
  const double s = std::sin(w);
  const dd rfb = detail::dd_mul(r, fb.value);

  const auto real_part = [&]() {
    const dd lhs = detail::dd_add(detail::dd_mul(fa.value, c),
                                  detail::dd_mul(rfb, s));
    const dd rhs = detail::dd_add(detail::dd_mul(parts.first.value, c),
                                  detail::dd_mul(parts.second.value, s));
    return make_residual(detail::dd_to_double(lhs),
                         detail::dd_to_double(rhs));
  };
  const auto imag_part = [&]() {
    const dd lhs = detail::dd_sub(detail::dd_mul(fa.value, s),
                                  detail::dd_mul(rfb, c));
    const dd rhs = detail::dd_sub(detail::dd_mul(parts.first.value, s),
                                  detail::dd_mul(parts.second.value, c));
    return make_residual(detail::dd_to_double(lhs),
                         detail::dd_to_double(rhs));
  };

  if (id == IdentityId::T5) {
    return real_part();
  }
  if (id == IdentityId::T6) {
    return imag_part();
  }
  // T7: both components must hold; report the worse one.
  const IdentityResidual re = real_part();
  const IdentityResidual im = imag_part();
  return re.rel_residual >= im.rel_residual ? re : im;
}

SweepResult sweep_identity(IdentityId id, std::size_t samples,
                           std::uint64_t seed, const SeriesConfig& cfg) {
  if (is_product_identity(id)) {
    throw InvalidSpec(
        "sweep_identity: applies to the transformation identities T2..T7");
  }
  if (samples == 0) {
    throw DomainError("sweep_identity: samples must be positive");
  }
  std::mt19937_64 rng(seed);
  SweepResult out;
  out.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    const double beta = 1.0 + static_cast<double>(rng() % 3);
    const double alpha = -0.9 + 3.9 * detail::u01(rng);
    const double eta = 0.2 + 1.8 * detail::u01(rng);
    const double x = 0.1 + 1.9 * detail::u01(rng);
    const IdentityResidual res = check_identity(id, alpha, beta, eta, x, cfg);
    if (i == 0 || res.rel_residual > out.max_rel_residual) {
      out.max_rel_residual = res.rel_residual;
      out.worst_alpha = alpha;
      out.worst_beta = beta;
      out.worst_eta = eta;
      out.worst_x = x;
    }
  }
  return out;
}

}  // namespace hyperint
