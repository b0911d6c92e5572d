#include <algorithm>

#include "isomon/systems.hpp"

namespace isomon {

FactoredSystem realize_factored(const RationalSystem& sys) {
  const int m = sys.rank();
  if (sys.poincare_rank_infinity() > 1)
    throw Error(ErrorKind::NotRealizable, "factored form needs Poincare rank <= 1 at infinity");
  CMatrix S = CMatrix::Zero(m, m);
  if (sys.poincare_rank_infinity() == 1) {
    S = sys.infinity()[0];
    if (strictly_lower(S).norm() != 0.0 || strictly_upper(S).norm() != 0.0)
      throw Error(ErrorKind::NotRealizable, "constant term must be diagonal");
  }

  std::vector<CMatrix> qs, ps;
  std::vector<cplx> t;
  for (std::size_t i = 0; i < sys.finite().size(); ++i) {
    const auto& p = sys.finite()[i];
    if (p.poincare_rank() != 0)
      throw Error(ErrorKind::NotRealizable, "only Fuchsian finite points can be realized", static_cast<int>(i));
    auto rf = rank_factorize(p.coeffs[0]);
    // Scale each column of Q so its first significant entry is 1; this makes
    // simple cases come out with small integer entries.
    for (Eigen::Index c = 0; c < rf.left.cols(); ++c) {
      const double big = rf.left.col(c).cwiseAbs().maxCoeff();
      Eigen::Index k = 0;
      while (std::abs(rf.left(k, c)) <= 1e-12 * big) ++k;
      const cplx s = rf.left(k, c);
      rf.left.col(c) /= s;
      rf.right.row(c) *= s;
    }
    for (Eigen::Index c = 0; c < rf.left.cols(); ++c) t.push_back(p.point);
    qs.push_back(std::move(rf.left));
    ps.push_back(std::move(rf.right));
  }
  const auto n = static_cast<Eigen::Index>(t.size());
  CMatrix Q(m, n), P(n, m);
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Q.middleCols(col, qs[i].cols()) = qs[i];
    P.middleRows(col, ps[i].rows()) = ps[i];
    col += qs[i].cols();
  }
  return FactoredSystem(diagonal(t), std::move(Q), std::move(P), std::move(S));
}

RationalSystem rational_from_factored(const FactoredSystem& fs) {
  std::vector<PolePart> parts;
  for (const auto& b : fs.t_blocks()) {
    CMatrix r = fs.Q().middleCols(b.offset, b.size) * fs.P().middleRows(b.offset, b.size);
    parts.push_back({b.value, {std::move(r)}});
  }
  std::vector<CMatrix> inf;
  if (fs.S().norm() != 0.0) inf.push_back(fs.S());
  return RationalSystem(static_cast<int>(fs.rank()), std::move(parts), std::move(inf));
}

}  // namespace isomon
