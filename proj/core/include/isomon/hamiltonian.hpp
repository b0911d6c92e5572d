#pragma once

// Hamiltonians of the continuous two-variable Garnier system, used to
// compare one Schlesinger step against the continuous flow.

#include "isomon/garnier.hpp"

namespace isomon {

/// Sixth Painleve Hamiltonian in the polynomial form of Kawakami, Nakamura
/// and Sakai (externally sourced; checked numerically against the discrete
/// steps in the test suite):
///   t(t-1) H = q(q-1)(q-t) p^2
///            + [d q(q-1) - (2a+b+c+d) q(q-t) + c (q-1)(q-t)] p
///            + a(a+b)(q-t)
cplx h_vi(cplx a, cplx b, cplx c, cplx d, cplx t, cplx q, cplx p);

struct GarnierHamiltonians {
  cplx h1;
  cplx h2;
};

/// H_1, H_2 at (q1, p1, q2, p2) of the state. Errors: InvalidArgument when
/// t_i in {0, 1}; PoleAtCoincidence when t1 == t2 (within 1e-14).
GarnierHamiltonians garnier_hamiltonians(const GarnierState& s);

/// dq_i/dt_j = dH_j/dp_i, dp_i/dt_j = -dH_j/dq_i by central differences with
/// step h; returns (dq1, dp1, dq2, dp2) along t_j (j = 1 or 2).
std::array<cplx, 4> garnier_vector_field(const GarnierState& s, int j, double h = 1e-6);

}  // namespace isomon
