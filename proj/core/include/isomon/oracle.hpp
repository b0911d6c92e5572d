#pragma once

// Independent construction of a Schlesinger transformation of
// A0/x + A1/(x + eps), used to cross-check the closed-form steps.
//
// The multiplier is R(x) = g (I - eps Pi / (x + eps)) with Pi = v eta^t /
// (eta^t v), v an eigenvector of A0 for the exponent raised by one and eta a
// left eigenvector of A1 for the exponent lowered by one. The constant g
// restores the upper / lower triangular gauge with prescribed diagonal
// orders, found as intersections of the two eigenvector flags.

#include <vector>

#include "isomon/garnier.hpp"

namespace isomon {

struct OracleShift {
  /// Slot in `order0` raised by one; -1 for the identity transformation.
  int up = 0;
  /// Slot in `order1` lowered by one.
  int down = 0;
};

struct OracleResult {
  RationalSystem system;  // Abar0 / x + Abar1 / (x + eps)
  TriangularPair pair;
  cplx eps;
  CMatrix R0;  // R(x) = R0 + R1 / (x + eps)
  CMatrix R1;

  CMatrix multiplier(cplx x) const { return R0 + R1 / (x + eps); }
};

/// sys must have exactly the two Fuchsian points 0 and -eps and no
/// polynomial part. order0 / order1 list the exponents at 0 / -eps in the
/// desired diagonal order of the result (before the shift).
/// Errors: InvalidArgument, NoSolution (degenerate eigen data),
/// NonUnique (repeated target exponents).
OracleResult schlesinger_oracle(const RationalSystem& sys, const std::vector<cplx>& order0,
                                const std::vector<cplx>& order1, OracleShift shift);

}  // namespace isomon
