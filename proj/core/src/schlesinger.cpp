#include "isomon/schlesinger.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace isomon {

std::string_view to_string(Direction d) { return d == Direction::S1 ? "s1" : "s2"; }

namespace {

CMatrix weight_matrix(const GarnierState& s, bool inverse) {
  CMatrix w = CMatrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const cplx wi = s.w[static_cast<std::size_t>(i)];
    w(i, i) = inverse ? 1.0 / wi : wi;
  }
  return w;
}

struct GaugeOutcome {
  CMatrix G;
  CMatrix A0bar;
  CMatrix A1bar;
};

// S1 works directly in the frame W = I: Ahat = Phat Qhat with the first
// exponent pair shifted.
GaugeOutcome gauge_s1(const GarnierState& s, LuNormalization norm) {
  const auto h = garnier_hats(s);
  const CMatrix ahat = h.Phat * h.Qhat;
  const auto e = s.exponents();
  LuGaugeInput in;
  in.lambda = e.rho[0] + 1.0;
  in.mu = e.sigma[0] - 1.0;
  in.b = ahat.block(1, 0, 3, 1);
  in.c = ahat.block(0, 1, 1, 3).transpose();
  const CMatrix sub = ahat.block(1, 1, 3, 3);
  in.B = strictly_upper(sub);
  in.C = strictly_lower(sub);
  for (Eigen::Index i = 0; i < 3; ++i) {
    in.B(i, i) = e.rho[static_cast<std::size_t>(i) + 1];
    in.C(i, i) = e.sigma[static_cast<std::size_t>(i) + 1];
  }
  const LuGauge g = lu_gauge(in, norm);
  return {g.G, conjugate(g.G, in.A0()), conjugate(g.G, in.A1())};
}

// S2 first rotates the (1,2) block so the second slot decouples, applies the
// elementary shift there, and then restores triangularity on the trailing
// 3x3 block in the frame W = I.
GaugeOutcome gauge_s2(const GarnierState& s, LuNormalization norm) {
  const TriangularPair pair = build_fuchsian_211(s);
  const auto e = s.exponents();
  CMatrix K = CMatrix::Identity(4, 4);
  K(0, 0) = e.rho[0] - e.rho[1];
  K(0, 1) = pair.A0(0, 1);
  K(1, 0) = -pair.A1(1, 0);
  K(1, 1) = e.sigma[0] - e.sigma[1];
  const CMatrix a0 = conjugate(K, pair.A0);
  const CMatrix a1 = conjugate(K, pair.A1);
  const TriangularPair shifted = elementary_shift(a0, a1, 1);

  const CMatrix W = weight_matrix(s, false), Winv = weight_matrix(s, true);
  const CMatrix t0 = W * shifted.A0 * Winv;
  const CMatrix t1 = W * shifted.A1 * Winv;
  LuGaugeInput in;
  in.lambda = t0(1, 1);
  in.mu = t1(1, 1);
  in.b = t0.block(2, 1, 2, 1);
  in.c = t1.block(1, 2, 1, 2).transpose();
  in.B = t0.block(2, 2, 2, 2);
  in.C = t1.block(2, 2, 2, 2);
  const LuGauge g = lu_gauge(in, norm);
  CMatrix G = CMatrix::Identity(4, 4);
  G.block(1, 1, 3, 3) = g.G;
  return {G * W * K, conjugate(G, t0), conjugate(G, t1)};
}

}  // namespace

TriangularPair elementary_shift(const CMatrix& A0, const CMatrix& A1, Eigen::Index k) {
  const auto n = A0.rows();
  const double scale = std::max({1.0, A0.norm(), A1.norm()});
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == k) continue;
    if (std::abs(A0(i, k)) > 1e-8 * scale || std::abs(A1(k, i)) > 1e-8 * scale)
      throw Error(ErrorKind::InvalidState, "elementary shift: slot is not decoupled", static_cast<int>(k) + 1);
  }
  TriangularPair out{A0, A1};
  out.A0.row(k).setZero();
  out.A0.col(k) = A1.col(k);
  out.A0(k, k) = A0(k, k) + 1.0;
  out.A1.col(k).setZero();
  out.A1.row(k) = A0.row(k);
  out.A1(k, k) = A1(k, k) - 1.0;
  return out;
}

GarnierState extract_state(const CMatrix& M, const GarnierState& target, ExtractionRoute route,
                           Eigen::VectorXd* singular_values) {
  if (M.rows() != 4 || M.cols() != 4) throw Error(ErrorKind::ShapeMismatch, "extract_state needs a 4x4 matrix");
  const cplx th_inf1 = target.theta_inf1();
  const CMatrix k = th_inf1 * CMatrix::Identity(4, 4) + M.transpose();
  const Eigen::JacobiSVD<CMatrix> svd(k, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (singular_values) *singular_values = sv;
  const double top = std::max(sv(0), 1e-300);
  // sv(2) shrinks like eps for small steps, so the test is on the gap.
  if (sv(3) > 1e-7 * top || sv(2) <= 1e4 * std::max(sv(3), 1e-16 * top))
    throw Error(ErrorKind::KernelDimension, "theta_inf1 + M^t must have a one-dimensional kernel");
  CVector w = svd.matrixV().col(3);
  if (std::abs(w(3)) <= 1e-12 * w.norm()) throw Error(ErrorKind::DivideByZero, "w4 vanishes", 4);
  w /= w(3);

  CMatrix mh = M;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) mh(i, j) *= w(i) / w(j);

  GarnierState out = target;
  for (int i = 0; i < 4; ++i) out.w[static_cast<std::size_t>(i)] = w(i);
  const cplx pq1 = mh(0, 3) - target.theta_t1;
  const cplx pq2 = mh(1, 3) - target.theta_t2;
  cplx tp1, tp2;
  if (route == ExtractionRoute::Printed) {
    const cplx common = mh(0, 3) + mh(1, 3) + target.theta0 + th_inf1;
    tp1 = mh(2, 0) + common;
    tp2 = mh(2, 1) + common;
  } else {
    tp1 = mh(2, 0) - mh(2, 3);
    tp2 = mh(2, 1) - mh(2, 3);
  }
  out.p1 = tp1 / target.t1;
  out.p2 = tp2 / target.t2;
  const double pscale = std::max(1.0, mh.norm());
  if (std::abs(tp1) <= 1e-12 * pscale) throw Error(ErrorKind::DivideByZero, "p1 vanishes", 1);
  if (std::abs(tp2) <= 1e-12 * pscale) throw Error(ErrorKind::DivideByZero, "p2 vanishes", 2);
  out.q1 = pq1 / out.p1;
  out.q2 = pq2 / out.p2;
  return out;
}

StepDetail step_detailed(const GarnierState& s, Direction dir, const StepOptions& opt) {
  s.validate();
  const GaugeOutcome g = dir == Direction::S1 ? gauge_s1(s, opt.normalization) : gauge_s2(s, opt.normalization);
  GarnierState target = s;
  if (dir == Direction::S1)
    target.t1 = s.t1 + s.eps;
  else
    target.t2 = s.t2 + s.eps;
  target.validate();

  StepDetail d;
  d.A0bar = g.A0bar;
  d.A1bar = g.A1bar;
  d.M = g.A0bar + g.A1bar;
  d.gauge = g.G;
  d.state = extract_state(d.M, target, opt.route, &d.kernel_singular_values);
  d.rebuild_residual = relative_difference(garnier_pq(d.state), d.M);
  return d;
}

GarnierState schlesinger_step(const GarnierState& s, Direction dir, const StepOptions& opt) {
  return step_detailed(s, dir, opt).state;
}

int rigidity_nullity(const CMatrix& A0, const CMatrix& A1, double rel_tol) {
  const auto n = A0.rows();
  const auto unknowns = n * n;
  const auto equations = n * (n - 1);
  CMatrix sys = CMatrix::Zero(equations, unknowns);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      CMatrix x = CMatrix::Zero(n, n);
      x(a, b) = 1.0;
      const CMatrix c0 = x * A0 - A0 * x;
      const CMatrix c1 = x * A1 - A1 * x;
      Eigen::Index row = 0;
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          if (i > j) sys(row++, a * n + b) = c0(i, j);
          if (i < j) sys(row++, a * n + b) = c1(i, j);
        }
    }
  const Eigen::VectorXd sv = singular_values(sys);
  const double top = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * top) ++rank;
  return static_cast<int>(unknowns) - rank;
}

}  // namespace isomon
