#include "isomon/lu_gauge.hpp"

#include <algorithm>

namespace isomon {

namespace {

void check_collision(cplx value, const CMatrix& tri, const char* what) {
  for (Eigen::Index i = 0; i < tri.rows(); ++i)
    if (std::abs(value - tri(i, i)) <= 1e-12 * std::max({1.0, std::abs(value), std::abs(tri(i, i))}))
      throw Error(ErrorKind::SpectralCollision, what, static_cast<int>(i) + 2);
}

}  // namespace

CMatrix LuGaugeInput::A0() const {
  const auto n = b.size() + 1;
  CMatrix a = CMatrix::Zero(n, n);
  a(0, 0) = lambda;
  a.block(1, 0, n - 1, 1) = b;
  a.block(1, 1, n - 1, n - 1) = B;
  return a;
}

CMatrix LuGaugeInput::A1() const {
  const auto n = c.size() + 1;
  CMatrix a = CMatrix::Zero(n, n);
  a(0, 0) = mu;
  a.block(0, 1, 1, n - 1) = c.transpose();
  a.block(1, 1, n - 1, n - 1) = C;
  return a;
}

CMatrix conjugate(const CMatrix& g, const CMatrix& a) {
  // g a g^-1 = (g^-T (g a)^T)^T
  const Eigen::PartialPivLU<CMatrix> lu_t(g.transpose());
  const CMatrix ga = g * a;
  return lu_t.solve(ga.transpose()).transpose();
}

LuGauge lu_gauge(const LuGaugeInput& in, LuNormalization normalization) {
  const auto k = in.b.size();
  if (in.c.size() != k || in.B.rows() != k || in.B.cols() != k || in.C.rows() != k || in.C.cols() != k)
    throw Error(ErrorKind::ShapeMismatch, "lu_gauge: inconsistent block sizes");
  if (lower_defect(in.B) > 1e-8) throw Error(ErrorKind::InvalidArgument, "lu_gauge: B must be upper triangular");
  if (upper_defect(in.C) > 1e-8) throw Error(ErrorKind::InvalidArgument, "lu_gauge: C must be lower triangular");
  check_collision(in.lambda, in.B, "lu_gauge: lambda is an eigenvalue of B");
  check_collision(in.mu, in.C, "lu_gauge: mu is an eigenvalue of C");

  const CMatrix I = CMatrix::Identity(k, k);
  const CMatrix lam_B = in.lambda * I - in.B;
  const CMatrix mu_C = in.mu * I - in.C;
  const Eigen::PartialPivLU<CMatrix> lam_lu(lam_B), mu_lu_t(mu_C.transpose());
  const CVector x = lam_lu.solve(in.b);
  // y^t = c^t (mu - C)^-1  <=>  (mu - C)^t y = c
  const CVector y = mu_lu_t.solve(in.c);

  const auto n = k + 1;
  CMatrix upper = CMatrix::Identity(n, n), lower = CMatrix::Identity(n, n);
  upper.block(0, 1, 1, k) = y.transpose();
  lower.block(1, 0, k, 1) = x;
  LuGauge out;
  out.lu = lu_decompose(upper * lower, normalization);
  const cplx l1 = out.lu.L(0, 0), u1 = out.lu.U(0, 0);
  const CMatrix U22 = out.lu.U.block(1, 1, k, k);
  const CMatrix L22 = out.lu.L.block(1, 1, k, k);

  CMatrix left = CMatrix::Zero(n, n);
  left(0, 0) = 1.0 / l1;
  left.block(1, 1, k, k) = U22;
  CMatrix right = CMatrix::Identity(n, n);
  right.block(0, 1, 1, k) = y.transpose();
  right.block(1, 0, k, 1) = -x;
  out.G = left * right;

  // Closed forms; triangular solves keep the structural zeros exact.
  const auto U22tri = U22.triangularView<Eigen::Upper>();
  const auto L22tri = L22.triangularView<Eigen::Lower>();
  out.A0bar = CMatrix::Zero(n, n);
  out.A0bar(0, 0) = in.lambda;
  // -l1^-1 y^t (lambda - B) U22^-1, as a row vector.
  const CMatrix row = -(y.transpose() * lam_B) / l1;
  out.A0bar.block(0, 1, 1, k) = U22tri.transpose().solve(row.transpose()).transpose();
  const CMatrix UB = U22 * in.B;
  out.A0bar.block(1, 1, k, k) = CMatrix(U22tri.transpose().solve(UB.transpose()).transpose()).triangularView<Eigen::Upper>();

  out.A1bar = CMatrix::Zero(n, n);
  out.A1bar(0, 0) = in.mu;
  // -u1^-1 L22^-1 (mu - C) x
  const CVector col = -(mu_C * x) / u1;
  out.A1bar.block(1, 0, k, 1) = L22tri.solve(col);
  const CMatrix CL = in.C * L22;
  out.A1bar.block(1, 1, k, k) = CMatrix(L22tri.solve(CL)).triangularView<Eigen::Lower>();
  return out;
}

}  // namespace isomon
