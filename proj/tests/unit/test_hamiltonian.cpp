#include <gtest/gtest.h>

#include "isomon/hamiltonian.hpp"
#include "isomon/schlesinger.hpp"
#include "random.hpp"

using namespace isomon;
using namespace isomon::testing;

TEST(Hamiltonian, IndexSymmetry) {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_state(rng);
    auto swapped = s;
    std::swap(swapped.q1, swapped.q2);
    std::swap(swapped.p1, swapped.p2);
    std::swap(swapped.t1, swapped.t2);
    std::swap(swapped.theta_t1, swapped.theta_t2);
    const auto h = garnier_hamiltonians(s), hs = garnier_hamiltonians(swapped);
    EXPECT_LT(std::abs(h.h1 - hs.h2), 1e-12 * std::max(1.0, std::abs(h.h1)));
    EXPECT_LT(std::abs(h.h2 - hs.h1), 1e-12 * std::max(1.0, std::abs(h.h2)));
  }
}

TEST(Hamiltonian, SimplePoleAtCoincidence) {
  Rng rng(2);
  auto s = random_state(rng);
  const cplx dir(0.6, 0.8);
  std::vector<double> scaled;
  for (double d : {1e-2, 1e-4, 1e-6}) {
    s.t2 = s.t1 + d * dir;
    scaled.push_back(std::abs((s.t1 - s.t2) * garnier_hamiltonians(s).h1));
  }
  EXPECT_LT(std::abs(scaled[2] - scaled[1]), 1e-3 * std::max(1.0, scaled[1]));
  EXPECT_GT(scaled[2], 0.0);
}

TEST(Hamiltonian, PoleAtCoincidenceError) {
  Rng rng(3);
  auto s = random_state(rng);
  s.t2 = s.t1;
  try {
    garnier_hamiltonians(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtCoincidence);
  }
}

TEST(Hamiltonian, PainleveSixPolynomial) {
  // Spot value against the expanded polynomial.
  const cplx a(0.3), b(-0.2), c(0.5), d(0.1), t(0.4, 0.2), q(0.7, -0.1), p(-0.3, 0.6);
  const cplx expected = (q * (q - 1.0) * (q - t) * p * p +
                         (d * q * (q - 1.0) - (2.0 * a + b + c + d) * q * (q - t) + c * (q - 1.0) * (q - t)) * p +
                         a * (a + b) * (q - t)) /
                        (t * (t - 1.0));
  EXPECT_LT(std::abs(h_vi(a, b, c, d, t, q, p) - expected), 1e-15);
}

// The discrete step approaches the Hamiltonian flow in t_j as eps -> 0.
TEST(Hamiltonian, StepLimitMatchesFlow) {
  Rng rng(4);
  for (int trial = 0; trial < 3; ++trial) {
    auto s = random_state(rng);
    for (int j : {1, 2}) {
      const Direction dir = j == 1 ? Direction::S1 : Direction::S2;
      std::array<std::array<cplx, 4>, 2> diff{};
      const double eps[2] = {1e-3, 5e-4};
      for (int k = 0; k < 2; ++k) {
        auto e = s;
        e.eps = eps[k];
        const auto n = schlesinger_step(e, dir);
        diff[static_cast<std::size_t>(k)] = {(n.q1 - s.q1) / eps[k], (n.p1 - s.p1) / eps[k], (n.q2 - s.q2) / eps[k],
                                             (n.p2 - s.p2) / eps[k]};
      }
      const auto field = garnier_vector_field(s, j);
      for (std::size_t i = 0; i < 4; ++i) {
        const cplx limit = 2.0 * diff[1][i] - diff[0][i];
        EXPECT_LT(std::abs(limit - field[i]), 1e-3 * std::max(1.0, std::abs(field[i]))) << "j=" << j << " i=" << i;
      }
    }
  }
}
