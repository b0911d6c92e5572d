#pragma once

// Small dense complex linear algebra shared by every other module.
//
// Matrices are Eigen::MatrixXcd; indices are 0-based in code even though
// the mathematical notation in docs is 1-based.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "isomon/errors.hpp"

namespace isomon {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default absolute tolerance used to cluster eigenvalues.
inline constexpr double kEigenTolerance = 1e-9;
/// Relative threshold under which an LU pivot counts as zero.
inline constexpr double kPivotTolerance = 1e-13;

/// Throws InvalidArgument when any entry is NaN or infinite.
void require_finite(const CMatrix& m, const char* what);
void require_square(const CMatrix& m, const char* what);

/// Identity of size n.
CMatrix identity(Eigen::Index n);
/// Diagonal matrix from a list of values.
CMatrix diagonal(const std::vector<cplx>& values);
CMatrix diagonal(const CVector& values);

/// Strictly-lower / strictly-upper parts with exact structural zeros.
CMatrix strictly_lower(const CMatrix& m);
CMatrix strictly_upper(const CMatrix& m);

/// Max-abs of the strictly-lower (resp. upper) part relative to max(1, ||m||_F).
double lower_defect(const CMatrix& m);
double upper_defect(const CMatrix& m);

/// ||a - b||_F / max(tiny, ||b||_F).
double relative_difference(const CMatrix& a, const CMatrix& b);

// --------------------------------------------------------------------------
// LU decomposition without pivoting.

enum class LuNormalization { UnitDiagonalU, UnitDiagonalL };

struct LUFactors {
  CMatrix L;  // lower triangular, exact zeros above the diagonal
  CMatrix U;  // upper triangular, exact zeros below the diagonal
  LuNormalization normalization;
};

/// Pivot-free LU. The normalized factor has an exactly unit diagonal.
/// Throws Error{ZeroPivot, index = k} (1-based) when the k-th leading
/// principal minor vanishes relative to ||M||_F.
LUFactors lu_decompose(const CMatrix& m, LuNormalization normalization);

// --------------------------------------------------------------------------
// Eigen-decomposition with clustering.

struct EigenCluster {
  cplx value;          // cluster mean
  int multiplicity;    // algebraic multiplicity (cluster size)
  int geometric;       // dimension of the numerical kernel of M - value
  CMatrix basis;       // n x geometric, orthonormal kernel basis

  bool diagonalizable() const { return geometric == multiplicity; }
};

struct EigenDecomposition {
  std::vector<EigenCluster> clusters;  // sorted by (Re, Im) with tolerance

  bool diagonalizable() const;
  /// Eigenvalues expanded by multiplicity, in cluster order.
  std::vector<cplx> values() const;
  /// Throws NotDiagonalizable naming `what` if any cluster is defective.
  const EigenDecomposition& require_diagonalizable(const char* what) const;
};

/// Tolerance-aware lexicographic order on (Re, Im): real parts within `tol`
/// compare equal and fall through to the imaginary part.
bool lex_less(cplx a, cplx b, double tol = kEigenTolerance);

/// Sorted eigenvalues with multiplicities and per-cluster eigenvector bases.
EigenDecomposition eigen_sorted(const CMatrix& m, double tol = kEigenTolerance);

/// Plain sorted eigenvalue list (expanded by multiplicity).
std::vector<cplx> sorted_eigenvalues(const CMatrix& m, double tol = kEigenTolerance);

/// Sort a list of complex numbers with lex_less.
std::vector<cplx> sorted_values(std::vector<cplx> values, double tol = kEigenTolerance);

/// Largest |a_i - b_i| over two equal-length lists after sorting both.
double spectrum_distance(std::vector<cplx> a, std::vector<cplx> b);

// --------------------------------------------------------------------------
// Rank-revealing helpers (SVD based).

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const CMatrix& m);

/// Orthonormal basis of the numerical kernel: singular values below
/// rel_tol * sigma_max (or below abs_floor when the matrix is ~0).
CMatrix nullspace(const CMatrix& m, double rel_tol = 1e-10);

struct RankFactorization {
  CMatrix left;   // m x r
  CMatrix right;  // r x n, left * right == input
};

/// M = left * right with r = numerical rank of M.
RankFactorization rank_factorize(const CMatrix& m, double rel_tol = 1e-10);

}  // namespace isomon
