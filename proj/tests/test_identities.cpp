/**
 * @file test_identities.cpp
 * @brief Tests for the product/Pochhammer factorizations (L1a/L1b/L1c) and
 *        the series transformation identities (T2..T7), checked as residuals
 *        between independently computed sides.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "hyperint/errors.hpp"
#include "hyperint/identities.hpp"

using namespace hyperint;

namespace {
const std::vector<IdentityId> kProductIds = {IdentityId::L1a, IdentityId::L1b,
                                             IdentityId::L1c};
const std::vector<IdentityId> kSeriesIds = {IdentityId::T2, IdentityId::T3,
                                            IdentityId::T4, IdentityId::T5,
                                            IdentityId::T6, IdentityId::T7};
}  // namespace

TEST_CASE("identity names round-trip") {
  const std::vector<std::string> names = {"L1a", "L1b", "L1c", "T2", "T3",
                                          "T4",  "T5",  "T6",  "T7"};
  for (const std::string& n : names) {
    CHECK(identity_name(identity_from_name(n)) == n);
  }
  CHECK_THROWS_AS(identity_from_name("bogus"), InvalidSpec);
  CHECK_THROWS_AS(identity_from_name(""), InvalidSpec);
}

TEST_CASE("product identity a: integer anchor is exact") {
  const IdentityResidual r = check_lemma1(IdentityId::L1a, 0.0, 1.0, 3);
  CHECK(r.lhs == 24.0);  // 1*2*3*4
  CHECK(r.rhs == 24.0);
  CHECK(r.residual == 0.0);
  CHECK(r.rel_residual == 0.0);
}

TEST_CASE("product identity b: the commonly printed form breaks at j = 0") {
  // The product side has the single factor (alpha+1); the printed factored
  // side keeps (alpha+1)(alpha+beta+1).  At alpha=0, beta=1 that is 1 vs 2.
  const IdentityResidual r = check_lemma1(IdentityId::L1b, 0.0, 1.0, 0);
  CHECK(r.lhs == 1.0);
  CHECK(r.rhs == 2.0);
  CHECK(r.residual == 1.0);
  CHECK(r.rel_residual > 0.3);  // visibly broken, not a rounding artifact
}

TEST_CASE("product identity c: fractional anchor") {
  const IdentityResidual r = check_lemma1(IdentityId::L1c, 0.7, 1.3, 5);
  CHECK(r.rel_residual <= 1e-13);
}

TEST_CASE("product identities: random parameters, all orders") {
  std::mt19937_64 rng(7u);
  std::uniform_real_distribution<double> alpha_draw(-0.9, 3.0);
  std::uniform_real_distribution<double> beta_draw(0.3, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double alpha = alpha_draw(rng);
    const double beta = beta_draw(rng);
    CAPTURE(alpha);
    CAPTURE(beta);
    for (std::size_t j = 0; j <= 12; ++j) {
      CAPTURE(j);
      CHECK(check_lemma1(IdentityId::L1a, alpha, beta, j).rel_residual <=
            1e-12);
      CHECK(check_lemma1(IdentityId::L1c, alpha, beta, j).rel_residual <=
            1e-12);
      if (j >= 1) {
        CHECK(check_lemma1(IdentityId::L1b, alpha, beta, j).rel_residual <=
              1e-12);
      }
    }
  }
}

TEST_CASE("product identities: parameter validation") {
  CHECK_THROWS_AS(check_lemma1(IdentityId::T2, 0.0, 1.0, 1), InvalidSpec);
  CHECK_THROWS_AS(check_lemma1(IdentityId::L1a, 0.0, 0.0, 1), DomainError);
  CHECK_THROWS_AS(
      check_lemma1(IdentityId::L1a, std::nan(""), 1.0, 1), DomainError);
}

TEST_CASE("series identities: point anchors") {
  const IdentityResidual t2 = check_identity(IdentityId::T2, 0.5, 2.0, 1.0,
                                             0.7);
  CHECK(t2.rel_residual <= 1e-10);

  const IdentityResidual t6 = check_identity(IdentityId::T6, 0.0, 1.0, 1.0,
                                             1.0);
  CHECK(t6.rel_residual <= 1e-10);

  for (IdentityId id : kSeriesIds) {
    const IdentityResidual r = check_identity(id, 0.8, 2.0, 1.3, 1.4);
    CAPTURE(identity_name(id));
    CHECK(r.rel_residual <= 1e-10);
    CHECK(r.rel_residual >= 0.0);
    CHECK(r.residual == std::fabs(r.lhs - r.rhs));
  }
}

TEST_CASE("series identities: recombined check is no worse than its parts") {
  for (double alpha : {-0.5, 0.3, 1.2})
    for (double beta : {1.0, 2.0})
      for (double eta : {0.5, 1.5})
        for (double x : {0.3, 1.1, 1.9}) {
          const double r2 =
              check_identity(IdentityId::T2, alpha, beta, eta, x).rel_residual;
          const double r3 =
              check_identity(IdentityId::T3, alpha, beta, eta, x).rel_residual;
          const double r4 =
              check_identity(IdentityId::T4, alpha, beta, eta, x).rel_residual;
          CAPTURE(alpha);
          CAPTURE(beta);
          CAPTURE(eta);
          CAPTURE(x);
          CHECK(r4 <= r2 + r3 + 1e-12);
        }
}

TEST_CASE("series identities: randomized sweeps stay below 1e-9") {
  for (IdentityId id : kSeriesIds) {
    const SweepResult r = sweep_identity(id, 200, 20260825u);
    CAPTURE(identity_name(id));
    CHECK(r.samples == 200);
    CHECK(r.max_rel_residual <= 1e-9);
  }
}

TEST_CASE("series identities: sweeps are deterministic for a fixed seed") {
  const SweepResult a = sweep_identity(IdentityId::T7, 50, 99u);
  const SweepResult b = sweep_identity(IdentityId::T7, 50, 99u);
  CHECK(a.max_rel_residual == b.max_rel_residual);
  CHECK(a.worst_alpha == b.worst_alpha);
  CHECK(a.worst_beta == b.worst_beta);
  CHECK(a.worst_eta == b.worst_eta);
  CHECK(a.worst_x == b.worst_x);

  const SweepResult c = sweep_identity(IdentityId::T7, 50, 100u);
  CHECK(c.worst_x != a.worst_x);  // different seed explores different points
}

TEST_CASE("series identities: parameter validation") {
  CHECK_THROWS_AS(check_identity(IdentityId::L1a, 0.0, 1.0, 1.0, 1.0),
                  InvalidSpec);
  CHECK_THROWS_AS(check_identity(IdentityId::T2, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(check_identity(IdentityId::T2, 0.0, 1.0, 1.0, 0.0),
                  DomainError);
  CHECK_THROWS_AS(check_identity(IdentityId::T2, 0.0, 1.0, 1.0, -1.0),
                  DomainError);
  CHECK_THROWS_AS(sweep_identity(IdentityId::L1b, 10, 1u), InvalidSpec);
  CHECK_THROWS_AS(sweep_identity(IdentityId::T2, 0, 1u), DomainError);

  SeriesConfig tiny;
  tiny.max_terms = 4;
  CHECK_THROWS_AS(check_identity(IdentityId::T2, 0.5, 2.0, 1.0, 1.5, tiny),
                  NoConvergence);
}
