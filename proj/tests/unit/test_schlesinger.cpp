#include <gtest/gtest.h>

#include "isomon/monodromy.hpp"
#include "isomon/oracle.hpp"
#include "isomon/schlesinger.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace isomon;
using namespace isomon::testing;

namespace {

double coord_distance(const GarnierState& a, const GarnierState& b) {
  double worst = 0;
  for (auto [x, y] : {std::pair{a.q1, b.q1}, {a.p1, b.p1}, {a.q2, b.q2}, {a.p2, b.p2}})
    worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(y)));
  return worst;
}

std::vector<cplx> as_vector(const std::array<cplx, 4>& a) { return {a.begin(), a.end()}; }

OracleResult run_oracle(const GarnierState& s, Direction dir) {
  const auto e = s.exponents();
  const auto sys = pair_system(build_fuchsian_211(s), s.eps);
  const int slot = dir == Direction::S1 ? 0 : 1;
  return schlesinger_oracle(sys, as_vector(e.rho), as_vector(e.sigma), {slot, slot});
}

GarnierState target_of(const GarnierState& s, Direction dir) {
  GarnierState t = s;
  (dir == Direction::S1 ? t.t1 : t.t2) += s.eps;
  return t;
}

}  // namespace

TEST(SchlesingerStep, ExponentShifts) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    for (Direction dir : {Direction::S1, Direction::S2}) {
      const auto d = step_detailed(s, dir);
      auto rho = as_vector(s.exponents().rho), sigma = as_vector(s.exponents().sigma);
      const std::size_t k = dir == Direction::S1 ? 0 : 1;
      rho[k] += 1.0;
      sigma[k] -= 1.0;
      EXPECT_LT(spectrum_distance(sorted_eigenvalues(d.A0bar), rho), 1e-9);
      EXPECT_LT(spectrum_distance(sorted_eigenvalues(d.A1bar), sigma), 1e-9);
      // The new state's derived exponents are the shifted ones.
      EXPECT_LT(spectrum_distance(as_vector(d.state.exponents().rho), rho), 1e-12);
      EXPECT_LT(spectrum_distance(as_vector(d.state.exponents().sigma), sigma), 1e-12);
    }
  }
}

TEST(SchlesingerStep, TriangularAndTraceConserved) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_state(rng);
    const auto pair = build_fuchsian_211(s);
    for (Direction dir : {Direction::S1, Direction::S2}) {
      const auto d = step_detailed(s, dir);
      EXPECT_LT(lower_defect(d.A0bar), 1e-10);
      EXPECT_LT(upper_defect(d.A1bar), 1e-10);
      EXPECT_LT(std::abs(d.M.trace() - (pair.A0 + pair.A1).trace()), 1e-10 * std::max(1.0, d.M.norm()));
      EXPECT_LT(d.rebuild_residual, 1e-9);
      EXPECT_EQ(d.state.w[3], cplx(1.0));
      EXPECT_EQ(d.state.u, s.u);
    }
  }
}

TEST(SchlesingerStep, NewTimes) {
  Rng rng(3);
  const auto s = random_state(rng);
  const auto a = schlesinger_step(s, Direction::S1);
  EXPECT_EQ(a.t1, s.t1 + s.eps);
  EXPECT_EQ(a.t2, s.t2);
  const auto b = schlesinger_step(s, Direction::S2);
  EXPECT_EQ(b.t2, s.t2 + s.eps);
  EXPECT_EQ(b.t1, s.t1);
}

TEST(SchlesingerStep, NormalizationIndependence) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    for (Direction dir : {Direction::S1, Direction::S2}) {
      const auto u = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalU, ExtractionRoute::Printed});
      const auto l = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalL, ExtractionRoute::Printed});
      EXPECT_LT(coord_distance(u, l), 1e-9);
    }
  }
}

TEST(SchlesingerStep, ExtractionRoutesAgree) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    for (Direction dir : {Direction::S1, Direction::S2}) {
      const auto a = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalU, ExtractionRoute::Printed});
      const auto b = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalU, ExtractionRoute::Alternate});
      EXPECT_LT(coord_distance(a, b), 1e-9);
    }
  }
}

TEST(SchlesingerStep, AgreesWithOracle) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    for (Direction dir : {Direction::S1, Direction::S2}) {
      const auto step = schlesinger_step(s, dir);
      const auto o = run_oracle(s, dir);
      const auto via_oracle = extract_state(o.pair.A0 + o.pair.A1, target_of(s, dir));
      EXPECT_LT(coord_distance(step, via_oracle), 1e-8) << "trial " << trial << " " << to_string(dir);
    }
  }
}

TEST(SchlesingerStep, Commutativity) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_state(rng);
    const auto a = schlesinger_step(schlesinger_step(s, Direction::S2), Direction::S1);
    const auto b = schlesinger_step(schlesinger_step(s, Direction::S1), Direction::S2);
    EXPECT_LT(coord_distance(a, b), 1e-8);
    EXPECT_EQ(a.t1, b.t1);
    EXPECT_EQ(a.t2, b.t2);
  }
}

TEST(SchlesingerStep, GaugeRigidity) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    const auto d = step_detailed(s, trial % 2 ? Direction::S1 : Direction::S2);
    EXPECT_EQ(rigidity_nullity(d.A0bar, d.A1bar), 4);
  }
}

TEST(SchlesingerStep, RigidityDetectsExtraFreedom) {
  // A diagonal pair commutes with every diagonal matrix and with nothing
  // else only if the diagonals separate; a zero pair is preserved by all g.
  EXPECT_EQ(rigidity_nullity(CMatrix::Zero(4, 4), CMatrix::Zero(4, 4)), 16);
}

TEST(ElementaryShift, RequiresDecoupledSlot) {
  Rng rng(9);
  const auto pair = build_fuchsian_211(random_state(rng));
  try {
    // Slot 0 of a triangular pair is always decoupled; slot 1 is not.
    elementary_shift(pair.A0, pair.A1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidState);
  }
}

TEST(ElementaryShift, ShiftsDecoupledExponents) {
  Rng rng(10);
  CMatrix a0 = rng.matrix(3, 3).triangularView<Eigen::Upper>();
  CMatrix a1 = rng.matrix(3, 3).triangularView<Eigen::Lower>();
  a0.col(0).tail(2).setZero();
  a1.row(0).tail(2).setZero();
  const auto out = elementary_shift(a0, a1, 0);
  EXPECT_EQ(out.A0(0, 0), a0(0, 0) + 1.0);
  EXPECT_EQ(out.A1(0, 0), a1(0, 0) - 1.0);
}

TEST(ExtractState, KernelDimension) {
  Rng rng(11);
  const auto s = random_state(rng);
  try {
    extract_state(CMatrix::Identity(4, 4), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KernelDimension);
  }
}

TEST(ExtractState, RecoversState) {
  Rng rng(12);
  auto s = random_state(rng);
  s.w[3] = 1.0;
  const auto back = extract_state(garnier_pq(s), s);
  EXPECT_LT(coord_distance(back, s), 1e-10);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(back.w[i] - s.w[i]), 1e-10);
}

TEST(Oracle, IdentityShift) {
  Rng rng(13);
  const auto s = random_state(rng);
  const auto e = s.exponents();
  const auto o = schlesinger_oracle(pair_system(build_fuchsian_211(s), s.eps), as_vector(e.rho), as_vector(e.sigma), {-1, 0});
  EXPECT_LT((o.R0 - CMatrix(o.R0.diagonal().asDiagonal())).norm(), 1e-10 * o.R0.norm());
  EXPECT_LT(o.R1.norm(), 1e-14);
}

TEST(Oracle, TargetSpectra) {
  Rng rng(14);
  const auto s = random_state(rng);
  const auto o = run_oracle(s, Direction::S1);
  auto rho = as_vector(s.exponents().rho), sigma = as_vector(s.exponents().sigma);
  rho[0] += 1.0;
  sigma[0] -= 1.0;
  EXPECT_LT(spectrum_distance(sorted_eigenvalues(o.pair.A0), rho), 1e-9);
  EXPECT_LT(spectrum_distance(sorted_eigenvalues(o.pair.A1), sigma), 1e-9);
  EXPECT_LT(lower_defect(o.pair.A0), 1e-9);
  EXPECT_LT(upper_defect(o.pair.A1), 1e-9);
}

TEST(Oracle, GaugeTransformationIdentity) {
  // Abar(x) = R A R^-1 + R' R^-1 pointwise.
  Rng rng(15);
  const auto s = random_state(rng);
  const auto sys = pair_system(build_fuchsian_211(s), s.eps);
  const auto o = run_oracle(s, Direction::S1);
  for (int k = 0; k < 5; ++k) {
    const cplx x = rng.complex(2.0) + 3.0;
    const CMatrix r = o.multiplier(x);
    const CMatrix dr = -o.R1 / ((x + o.eps) * (x + o.eps));
    const CMatrix ri = r.inverse();
    const CMatrix expected = r * sys.evaluate(x) * ri + dr * ri;
    EXPECT_LT(relative_difference(o.system.evaluate(x), expected), 1e-9);
  }
}

TEST(Oracle, MonodromyTracesPreserved) {
  Rng rng(16);
  const auto s = random_state(rng);
  const auto o = run_oracle(s, Direction::S2);
  const auto cmp = compare_reps(monodromy_rep(pair_system(build_fuchsian_211(s), s.eps)), monodromy_rep(o.system));
  EXPECT_TRUE(cmp.compatible) << cmp.worst << " " << cmp.max_mismatch;
}

TEST(Oracle, RepeatedTargetRejected) {
  Rng rng(17);
  const auto s = random_state(rng);
  auto rho = as_vector(s.exponents().rho);
  const auto sigma = as_vector(s.exponents().sigma);
  // Raising slot 3 (exponent 0) onto an exponent one higher creates a repeat.
  rho[2] = 1.0;
  auto s2 = s;
  s2.eps = 1.0;  // rho_1 = 1 / eps = 1
  const auto e2 = s2.exponents();
  try {
    schlesinger_oracle(pair_system(build_fuchsian_211(s2), s2.eps), as_vector(e2.rho), as_vector(e2.sigma), {3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnique);
  }
  (void)rho;
  (void)sigma;
}
