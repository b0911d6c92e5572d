#pragma once

// Schlesinger transformations S1, S2 of the rank-4 Fuchsian system
// A0/x + A1/(x + eps) attached to a GarnierState.
//
//   S1: rho_t1 -> rho_t1 + 1, sigma_1 -> sigma_1 - 1   (t1 -> t1 + eps)
//   S2: rho_t2 -> rho_t2 + 1, sigma_2 -> sigma_2 - 1   (t2 -> t2 + eps)
//
// Both directions end in a pair (Abar0, Abar1) that is upper / lower
// triangular with the shifted diagonals; the new canonical coordinates are
// read off Abar0 + Abar1 after fixing the diagonal gauge w with w4 = 1.

#include <string_view>

#include "isomon/garnier.hpp"
#include "isomon/lu_gauge.hpp"

namespace isomon {

enum class Direction { S1, S2 };
std::string_view to_string(Direction d);

enum class ExtractionRoute {
  /// p_j t_j from rows 1, 2 and column 4 entries combined with theta_0, theta_inf1.
  Printed,
  /// p_j t_j as a difference of two entries of row 3.
  Alternate,
};

struct StepOptions {
  LuNormalization normalization = LuNormalization::UnitDiagonalU;
  ExtractionRoute route = ExtractionRoute::Printed;
};

struct StepDetail {
  GarnierState state;
  /// Transformed pair in the frame where the gauge was applied.
  CMatrix A0bar;
  CMatrix A1bar;
  /// A0bar + A1bar.
  CMatrix M;
  /// Full gauge applied in that frame.
  CMatrix gauge;
  /// Singular values of theta_inf1 + M^t, decreasing.
  Eigen::VectorXd kernel_singular_values;
  /// Relative difference between PQ of the new state and M.
  double rebuild_residual = 0;
};

StepDetail step_detailed(const GarnierState& s, Direction dir, const StepOptions& opt = {});
GarnierState schlesinger_step(const GarnierState& s, Direction dir, const StepOptions& opt = {});

/// Reads (q, p, w) of `target` off a 4x4 matrix M similar (by a diagonal
/// matrix) to PQ of the new state. `target` supplies t, theta, u, eps.
/// Errors: KernelDimension, DivideByZero.
GarnierState extract_state(const CMatrix& M, const GarnierState& target, ExtractionRoute route = ExtractionRoute::Printed,
                           Eigen::VectorXd* singular_values = nullptr);

/// Elementary Schlesinger shift at index k of A0/x + A1/(x+eps) by the
/// multiplier I - eps E_kk / (x + eps): needs column k of A0 and row k of A1
/// to vanish off the diagonal (InvalidState otherwise, 1e-8 relative).
TriangularPair elementary_shift(const CMatrix& A0, const CMatrix& A1, Eigen::Index k);

/// Dimension of { X : strictly_lower([X, A0]) = 0, strictly_upper([X, A1]) = 0 },
/// the infinitesimal gauges preserving the triangular pair.
int rigidity_nullity(const CMatrix& A0, const CMatrix& A1, double rel_tol = 1e-9);

}  // namespace isomon
