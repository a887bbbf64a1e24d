#include "toricsheaf/errors.hpp"
#include "toricsheaf/filtration.hpp"
#include "toricsheaf/cohomology.hpp"
#include "toricsheaf/monomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toricsheaf;

namespace {

const MonomialIdeal kIdeal{2, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}}};

}  // namespace

TEST(MonomialIdeal, ZeroConeIsAlwaysOne) {
  for (std::int64_t d1 = -5; d1 <= 5; ++d1)
    for (std::int64_t d2 = -5; d2 <= 5; ++d2) EXPECT_EQ(sigma_piece_dim(kIdeal, Cone{{}, 2}, {d1, d2}), 1);
}

TEST(MonomialIdeal, ChartConditionsOnSmallBox) {
  for (std::int64_t d1 = -6; d1 <= 6; ++d1) {
    for (std::int64_t d2 = -6; d2 <= 6; ++d2) {
      EXPECT_EQ(sigma_piece_dim(kIdeal, Cone{{0}, 1}, {d1, d2}), -d1 - d2 >= 0 ? 1 : 0);
      EXPECT_EQ(sigma_piece_dim(kIdeal, Cone{{1, 2}, 0}, {d1, d2}),
                ((d1 == 0 && d2 >= 1) || (d1 >= 1 && d2 >= 0)) ? 1 : 0);
      EXPECT_EQ(sigma_piece_dim(kIdeal, Cone{{0, 1}, 0}, {d1, d2}), (-d1 - d2 >= 0 && d1 >= 0) ? 1 : 0);
    }
  }
}

TEST(MonomialIdeal, RestrictionIsCompatible) {
  const ToricVariety X = build_variety(ProjectiveSpace{2});
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::int64_t> e(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I{2, {}};
    for (int g = 0; g < 3; ++g) I.generators.push_back({e(rng), e(rng), e(rng)});
    for (const auto& sigma : X.cones()) {
      for (const auto& tau : X.cones()) {
        if (!std::includes(sigma.rays.begin(), sigma.rays.end(), tau.rays.begin(), tau.rays.end())) continue;
        for (std::int64_t d1 = -4; d1 <= 4; ++d1)
          for (std::int64_t d2 = -4; d2 <= 4; ++d2)
            EXPECT_LE(sigma_piece_dim(I, sigma, {d1, d2}), sigma_piece_dim(I, tau, {d1, d2}));
      }
    }
  }
}

TEST(MonomialIdeal, PrincipalIdealFollowsLineBundleRule) {
  const ToricVariety X = build_variety(ProjectiveSpace{2});
  const MonomialIdeal I{2, {{2, 0, 1}}};
  // (x^g) is O(-D) with D = sum g_rho D_rho.
  const auto L = line_bundle(X, {-2, 0, -1});
  for (const auto& cone : X.cones()) {
    for (std::int64_t d1 = -4; d1 <= 4; ++d1)
      for (std::int64_t d2 = -4; d2 <= 4; ++d2)
        EXPECT_EQ(static_cast<std::size_t>(sigma_piece_dim(I, cone, {d1, d2})),
                  sigma_piece(L, cone, {d1, d2}).dim());
  }
}

TEST(MonomialIdeal, RejectsBadInput) {
  EXPECT_THROW(check_ideal(MonomialIdeal{2, {}}), InputError);
  EXPECT_THROW(check_ideal(MonomialIdeal{2, {{1, 0}}}), InputError);
  EXPECT_THROW(check_ideal(MonomialIdeal{2, {{1, -1, 0}}}), InputError);
  EXPECT_THROW(sigma_piece_dim(kIdeal, Cone{{0}, 1}, {1, 2, 3}), InputError);
}
