#pragma once

#include "isomon/systems.hpp"

namespace isomon {

/// A_nu^(0) -> A_nu^(0) + alpha I at finite point `point`.
RationalSystem addition(const RationalSystem& sys, int point, cplx alpha);

/// z = (a x + b) / (c x + d).
struct MoebiusMap {
  cplx a{1}, b{0}, c{0}, d{1};

  static MoebiusMap translation(cplx shift) { return {1, shift, 0, 1}; }
  static MoebiusMap inversion() { return {0, 1, 1, 0}; }
  cplx operator()(cplx x) const { return (a * x + b) / (c * x + d); }
};

/// Rewrites dY/dx = A(x) Y in the coordinate z. Singular points move to
/// their images. Affine maps accept any system; maps with c != 0 accept
/// finite Poincare rank <= 1 and r_inf <= 1.
/// Errors: DegenerateMap (ad - bc ~ 0), Unsupported.
RationalSystem moebius(const RationalSystem& sys, const MoebiusMap& map);

/// (T, Q, P, S) -> (S, P, -Q, -T), i.e. A'(x) = -P (x - S)^-1 Q - T.
FactoredSystem laplace(const FactoredSystem& fs);

struct Separation {
  RationalSystem system;
  /// Constant gauge g with system(eps -> 0) -> g^-1 sys g.
  CMatrix gauge;
  /// Block sizes of the leading matrix, in order.
  std::vector<int> block_sizes;
};

/// Splits the rank-1 point at x = 0 into regular points 0 and -eps:
///   A_0 / x + A_1 / (x + eps), A_0 block upper with diagonal t_j / eps,
///   A_1 block lower with diagonal blocks Theta_j - t_j / eps.
/// Other points are carried along in the new gauge.
/// Errors: ZeroEpsilon, NotDiagonalizable, InvalidArgument.
Separation separate(const RationalSystem& sys, cplx eps, double tol = kEigenTolerance);

}  // namespace isomon
