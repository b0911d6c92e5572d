#include <gtest/gtest.h>

#include "isomon/garnier.hpp"
#include "isomon/transforms.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace isomon;
using namespace isomon::testing;

namespace {

FactoredSystem random_factored(Rng& rng, int m, const std::vector<cplx>& t, const std::vector<cplx>& s) {
  const auto n = static_cast<Eigen::Index>(t.size());
  return FactoredSystem(diagonal(t), rng.matrix(m, n), rng.matrix(n, m), diagonal(s));
}

// The rank-1 system at 0 obtained from the Garnier data by Laplace and inversion.
RationalSystem garnier_rank_one(const GarnierState& s) {
  return moebius(rational_from_factored(laplace(build_garnier_2x2(s))), MoebiusMap::inversion());
}

}  // namespace

TEST(Addition, ZeroShiftIsIdentity) {
  Rng rng(1);
  const auto sys = random_fuchsian(rng, 3, {0.0, 1.0});
  const auto same = addition(sys, 0, 0.0);
  EXPECT_EQ(same.finite()[0].coeffs[0], sys.finite()[0].coeffs[0]);
  EXPECT_EQ(same.finite()[1].coeffs[0], sys.finite()[1].coeffs[0]);
}

TEST(Addition, ShiftsSpectrum) {
  Rng rng(2);
  const auto sys = random_fuchsian(rng, 3, {0.0, 1.0});
  const cplx alpha(0.4, -0.3);
  const auto moved = addition(sys, 1, alpha);
  auto want = oracle_eigenvalues(sys.finite()[1].coeffs[0]);
  for (auto& v : want) v += alpha;
  EXPECT_LT(multiset_distance(oracle_eigenvalues(moved.finite()[1].coeffs[0]), want), 1e-10);
  EXPECT_EQ(moved.finite()[0].coeffs[0], sys.finite()[0].coeffs[0]);
}

TEST(Addition, MaximalMultiplicityExponentToZero) {
  Rng rng(3);
  const CMatrix g = rng.well_conditioned(3);
  const CMatrix res = g * diagonal(std::vector<cplx>{0.7, 0.7, -0.2}) * g.inverse();
  const auto sys = RationalSystem::fuchsian({{0.0, res}, {1.0, rng.matrix(3, 3)}});
  const auto moved = addition(sys, 0, -0.7);
  const auto d = eigen_sorted(moved.finite()[0].coeffs[0]);
  bool zero_double = false;
  for (const auto& c : d.clusters) zero_double = zero_double || (std::abs(c.value) < 1e-9 && c.multiplicity == 2);
  EXPECT_TRUE(zero_double);
}

TEST(Moebius, TranslationMovesPoint) {
  Rng rng(4);
  const cplx u(0.3, -0.8);
  const auto sys = random_fuchsian(rng, 2, {u, 1.0});
  const auto moved = moebius(sys, MoebiusMap::translation(-u));
  const int at0 = moved.find_point(0.0);
  ASSERT_GE(at0, 0);
  EXPECT_LT((moved.finite()[static_cast<std::size_t>(at0)].coeffs[0] - sys.finite()[0].coeffs[0]).norm(), 1e-15);
  EXPECT_GE(moved.find_point(1.0 - u), 0);
}

TEST(Moebius, InversionOnScalar) {
  const cplx theta(0.3, 0.1);
  const auto sys = RationalSystem::fuchsian({{0.0, CMatrix::Constant(1, 1, theta)}});
  const auto inv = moebius(sys, MoebiusMap::inversion());
  // theta dx / x = -theta dz / z: the residue at 0 changes sign and the
  // residue at infinity takes the old one.
  const int at0 = inv.find_point(0.0);
  ASSERT_GE(at0, 0);
  EXPECT_LT(std::abs(inv.finite()[static_cast<std::size_t>(at0)].coeffs[0](0, 0) + theta), 1e-15);
  EXPECT_LT(std::abs(inv.residue_at_infinity()(0, 0) - theta), 1e-15);
}

TEST(Moebius, PullbackPointwise) {
  // For z = f(x), A_new(z) dz = A(x) dx, so A_new(f(x)) f'(x) = A(x).
  Rng rng(5);
  const auto sys = random_fuchsian(rng, 2, {0.0, 1.0, cplx(0.4, 0.6)});
  const MoebiusMap f{cplx(1.0, 0.5), cplx(-0.2), cplx(0.3, -0.1), cplx(1.1)};
  const auto out = moebius(sys, f);
  const cplx det = f.a * f.d - f.b * f.c;
  for (int k = 0; k < 10; ++k) {
    const cplx x = rng.complex(2.0);
    const cplx dfdx = det / ((f.c * x + f.d) * (f.c * x + f.d));
    EXPECT_LT(relative_difference(CMatrix(out.evaluate(f(x)) * dfdx), sys.evaluate(x)), 1e-10);
  }
}

TEST(Moebius, SpectralTypePreserved) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = random_fuchsian(rng, 3, {0.0, 1.0, rng.complex(2.0) + cplx(0.0, 2.5)});
    const MoebiusMap f{rng.complex() + 1.5, rng.complex(), 0.2 * rng.complex(), rng.complex() + 1.5};
    EXPECT_EQ(spectral_type(riemann_scheme(moebius(sys, f))).str(), spectral_type(riemann_scheme(sys)).str());
  }
}

TEST(Moebius, DegenerateMap) {
  const auto sys = RationalSystem::fuchsian({{0.0, CMatrix::Identity(1, 1)}});
  try {
    moebius(sys, MoebiusMap{1.0, 2.0, 2.0, 4.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateMap);
  }
}

TEST(Laplace, DataSwap) {
  Rng rng(7);
  const auto fs = random_factored(rng, 2, {0.0, 1.0, cplx(0.5, 0.5)}, {1.0, -1.0});
  const auto l = laplace(fs);
  EXPECT_EQ(l.T(), fs.S());
  EXPECT_EQ(l.Q(), fs.P());
  EXPECT_EQ(l.P(), CMatrix(-fs.Q()));
  EXPECT_EQ(l.S(), CMatrix(-fs.T()));
}

TEST(Laplace, DoubleApplicationIsReflection) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto fs = random_factored(rng, 3, {rng.complex(), rng.complex() + 2.0}, {rng.complex(), rng.complex(), rng.complex() - 2.0});
    const auto twice = laplace(laplace(fs));
    for (int k = 0; k < 20; ++k) {
      const cplx x = rng.complex(3.0);
      EXPECT_LT(relative_difference(twice.evaluate(x), CMatrix(-fs.evaluate(-x))), 1e-10);
    }
  }
}

TEST(Laplace, NilpotentTGivesFuchsian211) {
  Rng rng(9);
  const auto fs = FactoredSystem(CMatrix::Zero(4, 4), rng.matrix(5, 4), rng.matrix(4, 5),
                                 diagonal(std::vector<cplx>{1.0, 1.0, 1.0, cplx(-0.5, 0.7), cplx(-0.5, 0.7)}));
  EXPECT_EQ(spectral_type(riemann_scheme(rational_from_factored(fs))).str(), "(111)(11),11111");
  const auto image = rational_from_factored(laplace(fs));
  EXPECT_TRUE(image.fuchsian());
  EXPECT_EQ(spectral_type(riemann_scheme(image)).str(), "211,1111,1111");
}

TEST(Separate, GarnierToFuchsian211) {
  Rng rng(10);
  const GarnierState s = random_state(rng);
  const auto sep = separate(garnier_rank_one(s), s.eps);
  const auto& sys = sep.system;
  EXPECT_EQ(spectral_type(riemann_scheme(sys)).str(), "211,1111,1111");
  const auto e = s.exponents();
  const CMatrix& a0 = sys.finite()[static_cast<std::size_t>(sys.find_point(0.0))].coeffs[0];
  const CMatrix& a1 = sys.finite()[static_cast<std::size_t>(sys.find_point(-s.eps))].coeffs[0];
  EXPECT_LT(multiset_distance(oracle_eigenvalues(a0), {e.rho.begin(), e.rho.end()}), 1e-9);
  EXPECT_LT(multiset_distance(oracle_eigenvalues(a1), {e.sigma.begin(), e.sigma.end()}), 1e-9);
  EXPECT_LT(lower_defect(a0), 1e-12);
  EXPECT_LT(upper_defect(a1), 1e-12);
}

TEST(Separate, FirstOrderLimit) {
  Rng rng(11);
  const GarnierState s = random_state(rng);
  const auto sys = garnier_rank_one(s);
  const cplx x(2.0, 1.0);
  std::vector<double> err;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto sep = separate(sys, eps);
    const CMatrix g = sep.gauge;
    const CMatrix a = g.inverse() * sys.evaluate(x) * g;
    err.push_back((sep.system.evaluate(x) - a).norm());
  }
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double ratio = err[i - 1] / err[i];
    EXPECT_GE(ratio, 5.0);
    EXPECT_LE(ratio, 20.0);
  }
}

TEST(Separate, ResidueSplitAndLeadingTerm) {
  Rng rng(12);
  const GarnierState s = random_state(rng);
  const auto sys = garnier_rank_one(s);
  const auto& p0 = sys.finite()[static_cast<std::size_t>(sys.find_point(0.0))];
  const cplx eps(1e-3, 2e-4);
  const auto sep = separate(sys, eps);
  const CMatrix gi = sep.gauge.inverse();
  const CMatrix& a0 = sep.system.finite()[static_cast<std::size_t>(sep.system.find_point(0.0))].coeffs[0];
  const CMatrix& a1 = sep.system.finite()[static_cast<std::size_t>(sep.system.find_point(-eps))].coeffs[0];
  // A0 + A1 is the residue in the reduced gauge.
  EXPECT_LT(relative_difference(CMatrix(a0 + a1), CMatrix(gi * p0.coeffs[0] * sep.gauge)), 1e-10);
  EXPECT_LT(relative_difference(CMatrix(eps * a0).diagonal().asDiagonal().toDenseMatrix(),
                                CMatrix(gi * p0.coeffs[1] * sep.gauge)),
            1e-12);
  EXPECT_EQ(spectral_type(riemann_scheme(sep.system)).str(), "211,1111,1111");
}

TEST(Separate, SingleBlock) {
  Rng rng(13);
  const CMatrix res = rng.matrix(3, 3);
  const RationalSystem sys(3, {{0.0, {res, 2.0 * CMatrix::Identity(3, 3)}}});
  const auto sep = separate(sys, 0.1);
  ASSERT_EQ(sep.block_sizes, std::vector<int>{3});
  const CMatrix& a0 = sep.system.finite()[0].coeffs[0];
  const CMatrix& a1 = sep.system.finite()[1].coeffs[0];
  // One block: A0 is the scalar leading part only, A1 carries the residue.
  EXPECT_LT(strictly_upper(a0).norm() + strictly_lower(a0).norm(), 1e-15);
  EXPECT_LT(std::abs(a0(0, 0) - 20.0), 1e-12);
  EXPECT_LT(multiset_distance(oracle_eigenvalues(CMatrix(a1 + a0)), oracle_eigenvalues(res)), 1e-9);
}

TEST(Separate, ZeroEpsilon) {
  const RationalSystem sys(1, {{0.0, {CMatrix::Ones(1, 1), CMatrix::Ones(1, 1)}}});
  try {
    separate(sys, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroEpsilon);
  }
}
