#pragma once

// Independent numerical oracles used to check library results.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "isomon/linalg.hpp"

namespace isomon::testing {

/// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) by
/// Faddeev-LeVerrier: det(xI - A) = sum c_k x^k.
inline std::vector<cplx> charpoly(const CMatrix& a) {
  const auto n = a.rows();
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0;
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * CMatrix::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

/// Roots of a monic polynomial (coefficients low to high) by Durand-Kerner.
inline std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(cplx(0.4, 0.9), static_cast<double>(i));
  const auto eval = [&](cplx x) {
    cplx v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const cplx dz = eval(z[i]) / den;
      z[i] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-15) break;
  }
  return z;
}

inline std::vector<cplx> oracle_eigenvalues(const CMatrix& a) { return poly_roots(charpoly(a)); }

/// Greedy multiset matching distance (max over matched pairs).
inline double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (const cplx& x : a) {
    auto best = std::min_element(b.begin(), b.end(), [&](cplx p, cplx q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

inline cplx exp2pii(cplx theta) { return std::exp(cplx(0.0, 2.0 * std::numbers::pi) * theta); }

}  // namespace isomon::testing
