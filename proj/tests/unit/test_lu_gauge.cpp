#include <gtest/gtest.h>

#include "isomon/lu_gauge.hpp"
#include "random.hpp"

using namespace isomon;
using namespace isomon::testing;

TEST(LuGauge, AlreadyTriangular) {
  Rng rng(1);
  auto in = random_gauge_input(rng, 3);
  in.b.setZero();
  in.c.setZero();
  const auto g = lu_gauge(in);
  EXPECT_LT((g.G - CMatrix(g.G.diagonal().asDiagonal())).norm(), 1e-14);
  EXPECT_LT(relative_difference(g.A0bar, conjugate(g.G, in.A0())), 1e-14);
  EXPECT_LT(relative_difference(g.A0bar.diagonal(), in.A0().diagonal()), 1e-14);
}

TEST(LuGauge, ScalarCase) {
  LuGaugeInput in;
  in.lambda = 2.0;
  in.B = CMatrix::Zero(1, 1);
  in.mu = 0.0;
  in.C = CMatrix::Ones(1, 1);
  in.b = CVector::Ones(1);
  in.c = CVector::Ones(1);
  const auto g = lu_gauge(in);
  // Direct 2x2 conjugation with the explicit inverse.
  const CMatrix& G = g.G;
  const cplx det = G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0);
  CMatrix Gi(2, 2);
  Gi << G(1, 1), -G(0, 1), -G(1, 0), G(0, 0);
  Gi /= det;
  const CMatrix a0 = G * in.A0() * Gi, a1 = G * in.A1() * Gi;
  EXPECT_LT(std::abs(a0(1, 0)), 1e-14);
  EXPECT_LT(std::abs(a1(0, 1)), 1e-14);
  EXPECT_LT(std::abs(a0(0, 0) - 2.0), 1e-14);
  EXPECT_LT(std::abs(a0(1, 1)), 1e-14);
  EXPECT_LT(std::abs(a1(0, 0)), 1e-14);
  EXPECT_LT(std::abs(a1(1, 1) - 1.0), 1e-14);
  EXPECT_LT((a0 - g.A0bar).norm(), 1e-14);
  EXPECT_LT((a1 - g.A1bar).norm(), 1e-14);
}

TEST(LuGauge, RandomStructureAndFormulas) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto in = random_gauge_input(rng, 3);
    for (auto norm : {LuNormalization::UnitDiagonalU, LuNormalization::UnitDiagonalL}) {
      const auto g = lu_gauge(in, norm);
      const CMatrix direct0 = g.G * in.A0() * g.G.inverse();
      const CMatrix direct1 = g.G * in.A1() * g.G.inverse();
      EXPECT_LT(relative_difference(g.A0bar, direct0), 1e-10);
      EXPECT_LT(relative_difference(g.A1bar, direct1), 1e-10);
      EXPECT_LT(strictly_lower(direct0).norm(), 1e-10 * direct0.norm());
      EXPECT_LT(strictly_upper(direct1).norm(), 1e-10 * direct1.norm());
      EXPECT_EQ(g.A0bar(0, 0), in.lambda);
      EXPECT_EQ(g.A1bar(0, 0), in.mu);
      for (Eigen::Index i = 0; i < 3; ++i) {
        EXPECT_LT(std::abs(g.A0bar(i + 1, i + 1) - in.B(i, i)), 1e-10);
        EXPECT_LT(std::abs(g.A1bar(i + 1, i + 1) - in.C(i, i)), 1e-10);
      }
    }
  }
}

TEST(LuGauge, SpectralCollision) {
  Rng rng(3);
  auto in = random_gauge_input(rng, 3);
  in.lambda = in.B(1, 1);
  try {
    lu_gauge(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpectralCollision);
  }
}

TEST(LuGauge, RejectsNonTriangularB) {
  Rng rng(4);
  auto in = random_gauge_input(rng, 3);
  in.B(2, 0) = 1.0;
  EXPECT_THROW(lu_gauge(in), Error);
}

TEST(Conjugate, MatchesInverse) {
  Rng rng(5);
  const CMatrix g = rng.well_conditioned(4), a = rng.matrix(4, 4);
  EXPECT_LT(relative_difference(conjugate(g, a), CMatrix(g * a * g.inverse())), 1e-13);
}
