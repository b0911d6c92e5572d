#include "isomon/garnier.hpp"

#include <cmath>

namespace isomon {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

DerivedExponents GarnierState::exponents() const {
  DerivedExponents e;
  e.rho = {t1 / eps, t2 / eps, 1.0 / eps, 0.0};
  e.sigma = {theta_t1 - t1 / eps, theta_t2 - t2 / eps, theta1 - 1.0 / eps, theta0};
  return e;
}

void GarnierState::validate() const {
  for (cplx z : {q1, p1, q2, p2, u, theta0, theta1, theta_t1, theta_t2, theta_inf2, t1, t2, eps, w[0], w[1], w[2], w[3]})
    if (!finite(z)) throw Error(ErrorKind::InvalidArgument, "state: non-finite entry");
  constexpr double tiny = 1e-12;
  if (std::abs(eps) <= tiny) throw Error(ErrorKind::ZeroEpsilon, "state: eps must be nonzero");
  if (std::abs(u) <= tiny) throw Error(ErrorKind::InvalidArgument, "state: u must be nonzero");
  for (int i = 0; i < 4; ++i)
    if (std::abs(w[static_cast<std::size_t>(i)]) <= tiny)
      throw Error(ErrorKind::InvalidArgument, "state: w must be nonzero", i + 1);
  for (cplx t : {t1, t2})
    if (std::abs(t) <= tiny || std::abs(t - 1.0) <= tiny)
      throw Error(ErrorKind::InvalidArgument, "state: t1, t2 must avoid 0 and 1");
  if (std::abs(t1 - t2) <= tiny) throw Error(ErrorKind::InvalidArgument, "state: t1 and t2 must differ");
}

GarnierHats garnier_hats(const GarnierState& s) {
  GarnierHats h{CMatrix(2, 4), CMatrix(4, 2)};
  const cplx pq1 = s.p1 * s.q1, pq2 = s.p2 * s.q2;
  h.Qhat << 1.0, 1.0, 1.0, 1.0,  //
      s.t1 * s.p1, s.t2 * s.p2, pq1 + pq2 - s.theta_inf2, 0.0;
  h.Phat << s.theta_t1 + pq1, -s.q1 / s.t1,  //
      s.theta_t2 + pq2, -s.q2 / s.t2,        //
      s.theta1 + s.theta_inf2 - pq1 - pq2, 1.0, //
      s.theta0, s.q1 / s.t1 + s.q2 / s.t2 - 1.0;
  return h;
}

CMatrix garnier_pq(const GarnierState& s) {
  const auto h = garnier_hats(s);
  CMatrix m = h.Phat * h.Qhat;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) m(i, j) *= s.w[static_cast<std::size_t>(j)] / s.w[static_cast<std::size_t>(i)];
  return m;
}

FactoredSystem build_garnier_2x2(const GarnierState& s) {
  s.validate();
  const auto h = garnier_hats(s);
  CMatrix W = CMatrix::Zero(4, 4), Winv = CMatrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    W(i, i) = s.w[static_cast<std::size_t>(i)];
    Winv(i, i) = 1.0 / s.w[static_cast<std::size_t>(i)];
  }
  const CMatrix U = diagonal(std::vector<cplx>{1.0, s.u});
  const CMatrix Uinv = diagonal(std::vector<cplx>{1.0, 1.0 / s.u});
  return FactoredSystem(diagonal(std::vector<cplx>{s.t1, s.t2, 1.0, 0.0}), Uinv * h.Qhat * W, Winv * h.Phat * U,
                        CMatrix::Zero(2, 2));
}

TriangularPair build_fuchsian_211(const GarnierState& s) {
  s.validate();
  const CMatrix pq = garnier_pq(s);
  const auto e = s.exponents();
  TriangularPair pair{strictly_upper(pq), strictly_lower(pq)};
  for (Eigen::Index i = 0; i < 4; ++i) {
    pair.A0(i, i) = e.rho[static_cast<std::size_t>(i)];
    pair.A1(i, i) = e.sigma[static_cast<std::size_t>(i)];
  }
  return pair;
}

RationalSystem pair_system(const TriangularPair& pair, cplx eps) {
  if (eps == cplx(0)) throw Error(ErrorKind::ZeroEpsilon, "separation parameter must be nonzero");
  return RationalSystem(static_cast<int>(pair.A0.rows()), {{0.0, {pair.A0}}, {-eps, {pair.A1}}});
}

}  // namespace isomon
