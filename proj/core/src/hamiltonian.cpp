#include "isomon/hamiltonian.hpp"

#include <cmath>

namespace isomon {

cplx h_vi(cplx a, cplx b, cplx c, cplx d, cplx t, cplx q, cplx p) {
  const cplx poly = q * (q - 1.0) * (q - t) * p * p +
                    (d * q * (q - 1.0) - (2.0 * a + b + c + d) * q * (q - t) + c * (q - 1.0) * (q - t)) * p +
                    a * (a + b) * (q - t);
  return poly / (t * (t - 1.0));
}

namespace {

// t_i (t_i - 1) H_i with i = 0, 1 and the other index k = 1 - i.
cplx scaled_h(const GarnierState& s, int i, cplx q1, cplx p1, cplx q2, cplx p2) {
  const cplx t[2] = {s.t1, s.t2};
  const cplx q[2] = {q1, q2};
  const cplx p[2] = {p1, p2};
  const cplx th[2] = {s.theta_t1, s.theta_t2};
  const int k = 1 - i;
  const cplx ti = t[i], tk = t[k];
  cplx v = ti * (ti - 1.0) * h_vi(s.theta_inf2, s.theta1, th[i], s.theta0 + th[k] + 1.0, ti, q[i], p[i]);
  v += (2.0 * q[i] * p[i] + q[k] * p[k] - s.theta1 - 2.0 * s.theta_inf2) * q1 * q2 * p[k];
  v -= (ti * (ti - 1.0) * (p[i] * q[i] + th[i]) * p[i] * q[k] -
        ti * (tk - 1.0) * (2.0 * p[i] * q[i] + th[i]) * p[k] * q[k] +
        tk * (ti - 1.0) * (p[k] * p[k] * q[k] + th[k] * (p[k] - p[i])) * q[i]) /
       (ti - tk);
  return v;
}

void check_times(const GarnierState& s) {
  for (cplx t : {s.t1, s.t2})
    if (std::abs(t) == 0.0 || std::abs(t - 1.0) == 0.0)
      throw Error(ErrorKind::InvalidArgument, "Hamiltonian needs t_i outside {0, 1}");
  if (std::abs(s.t1 - s.t2) <= 1e-14 * std::max(1.0, std::abs(s.t1)))
    throw Error(ErrorKind::PoleAtCoincidence, "Hamiltonian has a pole at t1 = t2");
}

cplx hamiltonian(const GarnierState& s, int i, cplx q1, cplx p1, cplx q2, cplx p2) {
  const cplx t = i == 0 ? s.t1 : s.t2;
  return scaled_h(s, i, q1, p1, q2, p2) / (t * (t - 1.0));
}

}  // namespace

GarnierHamiltonians garnier_hamiltonians(const GarnierState& s) {
  check_times(s);
  return {hamiltonian(s, 0, s.q1, s.p1, s.q2, s.p2), hamiltonian(s, 1, s.q1, s.p1, s.q2, s.p2)};
}

std::array<cplx, 4> garnier_vector_field(const GarnierState& s, int j, double h) {
  check_times(s);
  if (j != 1 && j != 2) throw Error(ErrorKind::InvalidArgument, "time index must be 1 or 2");
  const std::array<cplx, 4> base{s.q1, s.p1, s.q2, s.p2};
  std::array<cplx, 4> grad{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto plus = base, minus = base;
    plus[k] += h;
    minus[k] -= h;
    grad[k] = (hamiltonian(s, j - 1, plus[0], plus[1], plus[2], plus[3]) -
               hamiltonian(s, j - 1, minus[0], minus[1], minus[2], minus[3])) /
              (2.0 * h);
  }
  return {grad[1], -grad[0], grad[3], -grad[2]};
}

}  // namespace isomon
