#include "isomon/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace isomon {

namespace {

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RationalSystem affine(const RationalSystem& sys, cplx a, cplx b) {
  const int m = sys.rank();
  auto finite = sys.finite();
  for (auto& p : finite) {
    p.point = a * p.point + b;
    cplx scale = 1.0;
    for (auto& c : p.coeffs) {
      c *= scale;
      scale *= a;
    }
  }
  // A_inf^(k) x^(k-1) dx/dz with x = (z - b)/a, expanded in powers of z.
  std::vector<CMatrix> inf(sys.infinity().size(), CMatrix::Zero(m, m));
  for (std::size_t idx = 0; idx < sys.infinity().size(); ++idx) {
    const int k = static_cast<int>(idx) + 1;
    const cplx ak = std::pow(a, k);
    for (int j = 0; j <= k - 1; ++j)
      inf[static_cast<std::size_t>(j)] +=
          sys.infinity()[idx] * (binomial(k - 1, j) * std::pow(-b, k - 1 - j) / ak);
  }
  return RationalSystem(m, std::move(finite), std::move(inf));
}

RationalSystem inversion(const RationalSystem& sys) {
  const int m = sys.rank();
  if (sys.poincare_rank_infinity() > 1)
    throw Error(ErrorKind::Unsupported, "inversion supports Poincare rank <= 1 at infinity");
  CMatrix res0 = CMatrix::Zero(m, m), lead0 = CMatrix::Zero(m, m), const_new = CMatrix::Zero(m, m);
  std::vector<PolePart> finite;
  for (std::size_t i = 0; i < sys.finite().size(); ++i) {
    const auto& p = sys.finite()[i];
    if (p.poincare_rank() > 1)
      throw Error(ErrorKind::Unsupported, "inversion supports Poincare rank <= 1", static_cast<int>(i));
    const CMatrix& a = p.coeffs[0];
    res0 -= a;
    if (p.point == cplx(0)) {
      // A/x -> -A/z (absorbed at z = 0 above), B/x^2 -> -B.
      if (p.coeffs.size() > 1) const_new -= p.coeffs[1];
      continue;
    }
    PolePart q{1.0 / p.point, {a}};
    if (p.coeffs.size() > 1) q.coeffs.push_back(-p.coeffs[1] / (p.point * p.point));
    finite.push_back(std::move(q));
  }
  if (sys.poincare_rank_infinity() == 1) lead0 -= sys.infinity()[0];
  if (lead0.norm() != 0.0)
    finite.push_back({0.0, {res0, lead0}});
  else if (res0.norm() != 0.0)
    finite.push_back({0.0, {res0}});
  std::vector<CMatrix> inf;
  if (const_new.norm() != 0.0) inf.push_back(const_new);
  return RationalSystem(m, std::move(finite), std::move(inf));
}

}  // namespace

RationalSystem addition(const RationalSystem& sys, int point, cplx alpha) {
  if (point < 0 || point >= static_cast<int>(sys.finite().size()))
    throw Error(ErrorKind::InvalidArgument, "addition: no such singular point", point);
  auto finite = sys.finite();
  finite[static_cast<std::size_t>(point)].coeffs[0] += alpha * CMatrix::Identity(sys.rank(), sys.rank());
  return RationalSystem(sys.rank(), std::move(finite), sys.infinity());
}

RationalSystem moebius(const RationalSystem& sys, const MoebiusMap& f) {
  const cplx det = f.a * f.d - f.b * f.c;
  const double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d)});
  if (!(std::abs(det) > 1e-14 * scale * scale)) throw Error(ErrorKind::DegenerateMap, "Moebius map with ad - bc = 0");
  if (f.c == cplx(0)) return affine(sys, f.a / f.d, f.b / f.d);
  // z = a/c - det / (c (c x + d)): affine, inversion, affine.
  const RationalSystem s1 = affine(sys, f.c, f.d);
  const RationalSystem s2 = inversion(s1);
  return affine(s2, -det / f.c, f.a / f.c);
}

FactoredSystem laplace(const FactoredSystem& fs) { return FactoredSystem(fs.S(), fs.P(), -fs.Q(), -fs.T()); }

Separation separate(const RationalSystem& sys, cplx eps, double tol) {
  if (eps == cplx(0)) throw Error(ErrorKind::ZeroEpsilon, "separation parameter must be nonzero");
  const int at = sys.find_point(0.0);
  if (at < 0) throw Error(ErrorKind::InvalidArgument, "separate: no singular point at x = 0");
  const auto& p0 = sys.finite()[static_cast<std::size_t>(at)];
  if (p0.poincare_rank() != 1) throw Error(ErrorKind::InvalidArgument, "separate: point 0 must have Poincare rank 1");
  if (sys.find_point(-eps) >= 0) throw Error(ErrorKind::InvalidArgument, "separate: -eps is already singular");

  const auto red = reduce_rank_one(p0.coeffs[1], p0.coeffs[0], tol);
  const auto m = static_cast<Eigen::Index>(sys.rank());
  CMatrix a0 = CMatrix::Zero(m, m), a1 = CMatrix::Zero(m, m);
  Eigen::Index r0 = 0;
  for (int bi : red.block_sizes) {
    Eigen::Index c0 = 0;
    for (int bj : red.block_sizes) {
      if (c0 > r0) a0.block(r0, c0, bi, bj) = red.residue.block(r0, c0, bi, bj);
      if (c0 < r0) a1.block(r0, c0, bi, bj) = red.residue.block(r0, c0, bi, bj);
      c0 += bj;
    }
    r0 += bi;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    const cplx rho = red.leading[static_cast<std::size_t>(i)] / eps;
    a0(i, i) = rho;
    a1(i, i) = red.exponents[static_cast<std::size_t>(i)] - rho;
  }

  const Eigen::PartialPivLU<CMatrix> glu(red.gauge);
  auto to_new = [&](const CMatrix& x) -> CMatrix { return glu.solve(x * red.gauge); };
  std::vector<PolePart> finite;
  for (std::size_t i = 0; i < sys.finite().size(); ++i) {
    if (static_cast<int>(i) == at) {
      finite.push_back({0.0, {a0}});
      finite.push_back({-eps, {a1}});
      continue;
    }
    PolePart q = sys.finite()[i];
    for (auto& c : q.coeffs) c = to_new(c);
    finite.push_back(std::move(q));
  }
  std::vector<CMatrix> inf;
  for (const auto& c : sys.infinity()) inf.push_back(to_new(c));
  return {RationalSystem(sys.rank(), std::move(finite), std::move(inf)), red.gauge, red.block_sizes};
}

}  // namespace isomon
