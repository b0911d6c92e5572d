#include "isomon/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "isomon/lu_gauge.hpp"
#include "isomon/schlesinger.hpp"

namespace isomon {

namespace {

constexpr double kSeparation = 1e-9;

void require_distinct(const std::vector<cplx>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(v[i] - v[j]) <= kSeparation * std::max(1.0, std::abs(v[i])))
        throw Error(ErrorKind::NonUnique, what, static_cast<int>(i) + 1);
}

// Right eigenvectors of a for the targets, in target order.
CMatrix eigenvectors_for(const CMatrix& a, const std::vector<cplx>& targets) {
  const Eigen::ComplexEigenSolver<CMatrix> es(a);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NoSolution, "eigen decomposition failed");
  CMatrix v(a.rows(), static_cast<Eigen::Index>(targets.size()));
  const double scale = std::max(1.0, a.norm());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Eigen::Index best = 0;
    double dist = std::abs(es.eigenvalues()(0) - targets[t]);
    for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i) {
      const double d = std::abs(es.eigenvalues()(i) - targets[t]);
      if (d < dist) {
        dist = d;
        best = i;
      }
    }
    if (dist > 1e-6 * scale) throw Error(ErrorKind::NoSolution, "target exponent is not an eigenvalue", static_cast<int>(t) + 1);
    v.col(static_cast<Eigen::Index>(t)) = es.eigenvectors().col(best);
  }
  return v;
}

}  // namespace

OracleResult schlesinger_oracle(const RationalSystem& sys, const std::vector<cplx>& order0,
                                const std::vector<cplx>& order1, OracleShift shift) {
  if (sys.finite().size() != 2 || !sys.fuchsian())
    throw Error(ErrorKind::InvalidArgument, "oracle needs exactly two Fuchsian points and no polynomial part");
  const int at0 = sys.find_point(0.0);
  if (at0 < 0) throw Error(ErrorKind::InvalidArgument, "oracle: no singular point at 0");
  const auto& other = sys.finite()[static_cast<std::size_t>(1 - at0)];
  const cplx eps = -other.point;
  const CMatrix& A0 = sys.finite()[static_cast<std::size_t>(at0)].coeffs[0];
  const CMatrix& A1 = other.coeffs[0];
  const auto m = A0.rows();
  if (static_cast<Eigen::Index>(order0.size()) != m || static_cast<Eigen::Index>(order1.size()) != m)
    throw Error(ErrorKind::ShapeMismatch, "oracle: exponent orders must list m values");
  const bool identity = shift.up < 0;
  if (!identity && (shift.up >= m || shift.down < 0 || shift.down >= m))
    throw Error(ErrorKind::InvalidArgument, "oracle: shift slot out of range");

  CMatrix B0 = A0, B1 = A1, Pi = CMatrix::Zero(m, m);
  std::vector<cplx> n0 = order0, n1 = order1;
  if (!identity) {
    const CVector v = eigenvectors_for(A0, {order0[static_cast<std::size_t>(shift.up)]}).col(0);
    const CVector eta = eigenvectors_for(A1.transpose(), {order1[static_cast<std::size_t>(shift.down)]}).col(0);
    const cplx bilinear = (eta.transpose() * v)(0, 0);
    if (std::abs(bilinear) <= 1e-10 * eta.norm() * v.norm())
      throw Error(ErrorKind::NoSolution, "oracle: eigenvectors are orthogonal in the bilinear pairing");
    const CMatrix ker = nullspace(CMatrix(eta.transpose()));
    if (ker.cols() != m - 1) throw Error(ErrorKind::NoSolution, "oracle: degenerate left eigenvector");
    CMatrix H(m, m);
    H.col(0) = v;
    H.rightCols(m - 1) = ker;
    const Eigen::PartialPivLU<CMatrix> hlu(H);
    const CMatrix Hinv = hlu.inverse();
    const TriangularPair shifted = elementary_shift(Hinv * A0 * H, Hinv * A1 * H, 0);
    B0 = H * shifted.A0 * Hinv;
    B1 = H * shifted.A1 * Hinv;
    Pi = v * eta.transpose() / bilinear;
    n0[static_cast<std::size_t>(shift.up)] += 1.0;
    n1[static_cast<std::size_t>(shift.down)] -= 1.0;
  }
  require_distinct(n0, "oracle: repeated exponent at 0");
  require_distinct(n1, "oracle: repeated exponent at -eps");

  // Flag intersection: f_k in span(V0[0..k]) and span(V1[k..m-1]).
  const CMatrix V0 = eigenvectors_for(B0, n0);
  const CMatrix V1 = eigenvectors_for(B1, n1);
  CMatrix F(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    CMatrix stack(m, m + 1);
    stack.leftCols(k + 1) = V0.leftCols(k + 1);
    stack.rightCols(m - k) = -V1.rightCols(m - k);
    const CMatrix ker = nullspace(stack, 1e-9);
    if (ker.cols() != 1) throw Error(ErrorKind::NonUnique, "oracle: flag intersection is not a line", static_cast<int>(k) + 1);
    F.col(k) = V0.leftCols(k + 1) * ker.col(0).head(k + 1);
  }
  const Eigen::PartialPivLU<CMatrix> flu(F);
  const CMatrix g = flu.inverse();

  OracleResult out;
  out.eps = eps;
  out.pair.A0 = g * B0 * F;
  out.pair.A1 = g * B1 * F;
  out.R0 = g;
  out.R1 = -eps * g * Pi;
  out.system = pair_system(out.pair, eps);
  return out;
}

}  // namespace isomon
