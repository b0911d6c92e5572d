#pragma once

// Gauge that makes the pair
//   A0 = [[lambda, 0], [b, B]],  A1 = [[mu, c^t], [0, C]]
// (B upper, C lower triangular) upper / lower triangular at the same time:
//
//   G = diag(1/l1, U22) [[1, c^t (mu - C)^-1], [-(lambda - B)^-1 b, I]]
//
// where l1 and U22 come from the pivot-free LU factorization
//   [[1, y^t], [0, I]] [[1, 0], [x, I]] = L U,
//   x = (lambda - B)^-1 b,  y^t = c^t (mu - C)^-1.

#include "isomon/linalg.hpp"

namespace isomon {

struct LuGaugeInput {
  cplx lambda;
  CVector b;
  CMatrix B;
  cplx mu;
  CVector c;
  CMatrix C;

  CMatrix A0() const;
  CMatrix A1() const;
};

struct LuGauge {
  CMatrix G;
  /// G A0 G^-1 and G A1 G^-1 from the closed block formulas.
  CMatrix A0bar;
  CMatrix A1bar;
  LUFactors lu;
};

/// Errors: SpectralCollision when lambda is within 1e-12 (relative) of a
/// diagonal entry of B or mu of C; InvalidArgument when B is not upper or C
/// not lower triangular (1e-8 relative); ZeroPivot from the factorization.
LuGauge lu_gauge(const LuGaugeInput& in, LuNormalization normalization = LuNormalization::UnitDiagonalU);

/// g a g^-1 by an LU solve.
CMatrix conjugate(const CMatrix& g, const CMatrix& a);

}  // namespace isomon
