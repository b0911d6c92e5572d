#pragma once

// Phase-space point of the discrete two-variable Garnier system and the two
// linear systems built from it: the rank-2 system with five regular points
// 0, 1, t1, t2, infinity, and the rank-4 Fuchsian system with regular points
// 0, -eps, infinity whose confluence gives the Laplace image of the first.

#include <array>

#include "isomon/systems.hpp"

namespace isomon {

struct DerivedExponents {
  /// Diagonal of A0: (t1/eps, t2/eps, 1/eps, 0).
  std::array<cplx, 4> rho;
  /// Diagonal of A1: (th_t1 - t1/eps, th_t2 - t2/eps, th_1 - 1/eps, th_0).
  std::array<cplx, 4> sigma;
};

struct GarnierState {
  cplx q1, p1, q2, p2;
  std::array<cplx, 4> w{1, 1, 1, 1};
  cplx u{1};
  cplx theta0, theta1, theta_t1, theta_t2, theta_inf2;
  cplx t1, t2;
  cplx eps{1};

  /// Fixed by the Fuchs relation: the six thetas sum to zero.
  cplx theta_inf1() const { return -(theta0 + theta1 + theta_t1 + theta_t2 + theta_inf2); }
  DerivedExponents exponents() const;

  /// Throws InvalidArgument naming the violated invariant: t1, t2 not in
  /// {0, 1} and distinct, eps, u and every w_i nonzero, all entries finite.
  void validate() const;
};

struct TriangularPair {
  CMatrix A0;  // upper triangular
  CMatrix A1;  // lower triangular
};

/// Qhat (2x4) and Phat (4x2) of the parametrization.
struct GarnierHats {
  CMatrix Qhat;
  CMatrix Phat;
};
GarnierHats garnier_hats(const GarnierState& s);

/// W^-1 Phat Qhat W; the 4x4 residue of the rank-4 system (u cancels).
CMatrix garnier_pq(const GarnierState& s);

/// T = diag(t1, t2, 1, 0), Q = U^-1 Qhat W, P = W^-1 Phat U, S = 0.
FactoredSystem build_garnier_2x2(const GarnierState& s);

/// A0 = strictly upper part of PQ + diag(rho), A1 = strictly lower part + diag(sigma).
TriangularPair build_fuchsian_211(const GarnierState& s);

/// A0 / x + A1 / (x + eps).
RationalSystem pair_system(const TriangularPair& pair, cplx eps);

}  // namespace isomon
