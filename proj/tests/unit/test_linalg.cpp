#include <gtest/gtest.h>

#include "isomon/linalg.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace isomon;
using namespace isomon::testing;

TEST(LuDecompose, Identity) {
  const auto f = lu_decompose(CMatrix::Identity(4, 4), LuNormalization::UnitDiagonalU);
  EXPECT_EQ(f.L, CMatrix::Identity(4, 4));
  EXPECT_EQ(f.U, CMatrix::Identity(4, 4));
}

TEST(LuDecompose, TwoByTwoUnitU) {
  CMatrix m(2, 2);
  m << 4, 3, 6, 3;
  const auto f = lu_decompose(m, LuNormalization::UnitDiagonalU);
  CMatrix l(2, 2), u(2, 2);
  l << 4, 0, 6, -1.5;
  u << 1, 0.75, 0, 1;
  EXPECT_LT((f.L - l).norm(), 1e-14);
  EXPECT_LT((f.U - u).norm(), 1e-14);
  EXPECT_LT((f.L * f.U - m).norm(), 1e-14);
}

TEST(LuDecompose, ZeroLeadingMinor) {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  try {
    lu_decompose(m, LuNormalization::UnitDiagonalU);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPivot);
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(LuDecompose, RandomReconstructionBothNormalizations) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = rng.matrix(5, 5) + 2.0 * CMatrix::Identity(5, 5);
    for (auto norm : {LuNormalization::UnitDiagonalU, LuNormalization::UnitDiagonalL}) {
      const auto f = lu_decompose(m, norm);
      EXPECT_LE((f.L * f.U - m).norm(), 1e-12 * m.norm());
      EXPECT_EQ(upper_defect(f.L), 0.0);
      EXPECT_EQ(lower_defect(f.U), 0.0);
      const CMatrix& unit = norm == LuNormalization::UnitDiagonalU ? f.U : f.L;
      for (Eigen::Index i = 0; i < 5; ++i) EXPECT_EQ(unit(i, i), cplx(1.0));
    }
  }
}

TEST(EigenSorted, DiagonalInput) {
  const auto d = eigen_sorted(diagonal(std::vector<cplx>{2, 0, 0, -1}));
  ASSERT_EQ(d.clusters.size(), 3u);
  EXPECT_EQ(d.clusters[0].value, cplx(-1));
  EXPECT_EQ(d.clusters[0].multiplicity, 1);
  EXPECT_LT(std::abs(d.clusters[1].value), 1e-14);
  EXPECT_EQ(d.clusters[1].multiplicity, 2);
  EXPECT_EQ(d.clusters[2].value, cplx(2));
  EXPECT_EQ(d.clusters[2].multiplicity, 1);
  EXPECT_TRUE(d.diagonalizable());
}

TEST(EigenSorted, JordanBlockNotDiagonalizable) {
  CMatrix j(2, 2);
  j << 1, 1, 0, 1;
  const auto d = eigen_sorted(j);
  EXPECT_FALSE(d.diagonalizable());
  try {
    d.require_diagonalizable("jordan");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDiagonalizable);
  }
}

TEST(EigenSorted, MatchesCharacteristicPolynomialRoots) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = rng.matrix(4, 4);
    EXPECT_LT(multiset_distance(sorted_eigenvalues(m), oracle_eigenvalues(m)), 1e-9);
  }
}

TEST(EigenSorted, KnownPolynomialViaSimilarity) {
  Rng rng(3);
  const std::vector<cplx> roots{cplx(1, 1), cplx(-0.5, 0.2), cplx(2, -1), cplx(0.1, 0)};
  const CMatrix g = rng.well_conditioned(4);
  const CMatrix m = g * diagonal(roots) * g.inverse();
  EXPECT_LT(multiset_distance(sorted_eigenvalues(m), roots), 1e-9);
}

TEST(EigenSorted, SortedAndInvariantUnderSimilarity) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = rng.matrix(4, 4);
    const auto v = sorted_eigenvalues(m);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_FALSE(lex_less(v[i], v[i - 1]));
    const CMatrix g = rng.well_conditioned(4);
    EXPECT_LT(spectrum_distance(v, sorted_eigenvalues(g * m * g.inverse())), 1e-8);
    int total = 0;
    for (const auto& c : eigen_sorted(m).clusters) total += c.multiplicity;
    EXPECT_EQ(total, 4);
  }
}

TEST(RankFactorize, RecoversProduct) {
  Rng rng(5);
  const CMatrix m = rng.matrix(4, 2) * rng.matrix(2, 4);
  const auto f = rank_factorize(m);
  EXPECT_EQ(f.left.cols(), 2);
  EXPECT_LT((f.left * f.right - m).norm(), 1e-12 * m.norm());
}

TEST(Nullspace, Dimension) {
  CMatrix m = CMatrix::Zero(2, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  const CMatrix k = nullspace(m);
  EXPECT_EQ(k.cols(), 2);
  EXPECT_LT((m * k).norm(), 1e-14);
}

TEST(RequireFinite, RejectsNaN) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = cplx(std::nan(""), 0);
  EXPECT_THROW(require_finite(m, "m"), Error);
}
