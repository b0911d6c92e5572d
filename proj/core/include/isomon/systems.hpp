#pragma once

// Linear ODE systems dY/dx = A(x) Y with rational A, their factored
// realizations, and Riemann schemes.
//
//   A(x) = sum_nu sum_{k=0..r_nu} A_nu^(k) / (x - u_nu)^(k+1)
//        + sum_{k=1..r_inf} A_inf^(k) x^(k-1)
//
// The residue at infinity A_inf^(0) = -sum_nu A_nu^(0) is never stored.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isomon/linalg.hpp"
#include "isomon/spectral_type.hpp"

namespace isomon {

struct PolePart {
  cplx point;
  /// coeffs[k] multiplies (x - point)^-(k+1). Poincare rank = size - 1.
  std::vector<CMatrix> coeffs;

  int poincare_rank() const { return static_cast<int>(coeffs.size()) - 1; }
};

class RationalSystem {
 public:
  RationalSystem() = default;
  /// infinity[k-1] multiplies x^(k-1). Throws on shape mismatch, non-finite
  /// entries or coincident points (distance <= 1e-12).
  RationalSystem(int rank, std::vector<PolePart> finite, std::vector<CMatrix> infinity = {});

  /// Convenience constructor for a Fuchsian system from (point, residue) pairs.
  static RationalSystem fuchsian(const std::vector<std::pair<cplx, CMatrix>>& residues);

  int rank() const { return rank_; }
  const std::vector<PolePart>& finite() const { return finite_; }
  const std::vector<CMatrix>& infinity() const { return infinity_; }
  int poincare_rank_infinity() const { return static_cast<int>(infinity_.size()); }
  bool fuchsian() const;

  /// A(x); throws InvalidArgument at a pole.
  CMatrix evaluate(cplx x) const;
  CMatrix residue_at_infinity() const;
  std::vector<cplx> points() const;
  /// Index of the finite point within `tol` of x, or -1.
  int find_point(cplx x, double tol = 1e-12) const;

  /// Constant gauge change A -> g A g^-1 applied to every coefficient.
  RationalSystem conjugated(const CMatrix& g) const;

 private:
  int rank_ = 0;
  std::vector<PolePart> finite_;
  std::vector<CMatrix> infinity_;
};

/// A(x) = Q (x - T)^-1 P + S with T, S diagonal.
class FactoredSystem {
 public:
  struct Block {
    cplx value;
    Eigen::Index offset;
    Eigen::Index size;
  };

  FactoredSystem() = default;
  /// T (n x n) and S (m x m) must be diagonal with equal values contiguous.
  FactoredSystem(CMatrix T, CMatrix Q, CMatrix P, CMatrix S);

  const CMatrix& T() const { return T_; }
  const CMatrix& Q() const { return Q_; }
  const CMatrix& P() const { return P_; }
  const CMatrix& S() const { return S_; }
  Eigen::Index rank() const { return Q_.rows(); }
  Eigen::Index size() const { return T_.rows(); }

  std::vector<Block> t_blocks() const;
  std::vector<Block> s_blocks() const;

  CMatrix evaluate(cplx x) const;

 private:
  CMatrix T_, Q_, P_, S_;
};

/// Unramified HTL canonical form at one point:
///   dY/dz = (T_0/z^l0 + T_1/z^l1 + ... + Theta/z) Y,  l0 > l1 > ... > l_s = 1.
class HtlForm {
 public:
  struct Level {
    long num;
    long den;
  };

  /// levels must be l0 > ... > 1 and integral; non-integral raises Unsupported.
  /// stages.size() == levels.size() - 1; every matrix diagonal.
  HtlForm(std::vector<Level> levels, std::vector<CMatrix> stages, CMatrix theta);

  const std::vector<int>& levels() const { return levels_; }
  const std::vector<CMatrix>& stages() const { return stages_; }
  const CMatrix& theta() const { return theta_; }
  int poincare_rank() const { return levels_.front() - 1; }

 private:
  std::vector<int> levels_;
  std::vector<CMatrix> stages_;
  CMatrix theta_;
};

struct SchemePoint {
  /// nullopt for x = infinity.
  std::optional<cplx> location;
  /// Rank-1 point: leading column (eigenvalues of the leading matrix, grouped
  /// into blocks). Empty for a Fuchsian point.
  std::vector<cplx> leading;
  /// Exponents; for a rank-1 point aligned with `leading`.
  std::vector<cplx> exponents;
  /// No two exponents (within one leading block) differ by a nonzero integer.
  bool non_resonant = true;

  bool irregular() const { return !leading.empty(); }
  HtlForm htl() const;
};

struct RiemannScheme {
  int rank = 0;
  std::vector<SchemePoint> points;

  /// Sum of every exponent column entry over all points.
  cplx exponent_sum() const;
  bool non_resonant() const;
};

/// Normal form of a rank-1 pole part L/z^2 + R/z under constant gauge:
/// g^-1 L g = diag(leading) is block scalar and the diagonal blocks of
/// g^-1 R g are diagonal (the stabilizer of L acts blockwise). A leading
/// matrix that is already diagonal keeps its stored order, equal values
/// gathered at their first appearance.
struct RankOneReduction {
  CMatrix gauge;
  std::vector<cplx> leading;
  std::vector<cplx> exponents;
  std::vector<int> block_sizes;
  /// g^-1 R g with the diagonal blocks replaced by diag(exponents).
  CMatrix residue;
};

RankOneReduction reduce_rank_one(const CMatrix& leading, const CMatrix& residue, double tol = kEigenTolerance);

/// Riemann scheme of a system with Fuchsian points and at most one rank-1
/// point. Points with identically zero coefficients are not singular and
/// are skipped. Errors: Unsupported, NotDiagonalizable.
RiemannScheme riemann_scheme(const RationalSystem& sys, double tol = kEigenTolerance);

SpectralType spectral_type(const RiemannScheme& scheme, double tol = kEigenTolerance);

/// |sum of all exponents| of the scheme.
double fuchs_check(const RiemannScheme& scheme);
double fuchs_check(const RationalSystem& sys);

/// Minimal factored realization of a system whose finite points are all
/// Fuchsian and r_inf <= 1 with a diagonal constant term.
FactoredSystem realize_factored(const RationalSystem& sys);

/// Expands a factored system back into pole parts grouped by T's blocks.
RationalSystem rational_from_factored(const FactoredSystem& fs);

}  // namespace isomon
