#include <algorithm>
#include <cmath>

#include "isomon/systems.hpp"

namespace isomon {

namespace {

bool is_zero(const CMatrix& m, double scale) { return m.norm() <= 1e-14 * std::max(1.0, scale); }

bool is_diagonal(const CMatrix& m) {
  return strictly_lower(m).norm() == 0.0 && strictly_upper(m).norm() == 0.0;
}

bool differ_by_nonzero_integer(cplx a, cplx b, double tol) {
  const cplx d = a - b;
  if (std::abs(d.imag()) > tol) return false;
  const double r = std::round(d.real());
  return r != 0.0 && std::abs(d.real() - r) <= tol;
}

bool non_resonant(const std::vector<cplx>& values, double tol) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (differ_by_nonzero_integer(values[i], values[j], tol)) return false;
  return true;
}

// Multiplicity partition of a list of values clustered within tol.
Partition multiplicities(const std::vector<cplx>& values, double tol) {
  const auto sorted = sorted_values(values, tol);
  Partition parts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && std::abs(sorted[i] - sorted[i - 1]) <= tol)
      ++parts.back();
    else
      parts.push_back(1);
  }
  return normalize_partition(std::move(parts));
}

SchemePoint fuchsian_point(std::optional<cplx> where, const CMatrix& residue, double tol) {
  SchemePoint p;
  p.location = where;
  p.exponents = sorted_eigenvalues(residue, tol);
  p.non_resonant = non_resonant(p.exponents, tol);
  return p;
}

SchemePoint rank_one_point(std::optional<cplx> where, const CMatrix& leading, const CMatrix& residue, double tol) {
  const auto red = reduce_rank_one(leading, residue, tol);
  SchemePoint p;
  p.location = where;
  p.leading = red.leading;
  p.exponents = red.exponents;
  std::size_t offset = 0;
  for (int size : red.block_sizes) {
    std::vector<cplx> block(p.exponents.begin() + static_cast<long>(offset),
                            p.exponents.begin() + static_cast<long>(offset) + size);
    if (!non_resonant(block, tol)) p.non_resonant = false;
    offset += static_cast<std::size_t>(size);
  }
  return p;
}

}  // namespace

RankOneReduction reduce_rank_one(const CMatrix& leading, const CMatrix& residue, double tol) {
  require_square(leading, "leading matrix");
  require_square(residue, "residue matrix");
  const auto m = leading.rows();

  // Step 1: diagonalize the leading matrix into contiguous scalar blocks.
  CMatrix v(m, m);
  std::vector<cplx> block_values;
  std::vector<int> block_sizes;
  if (is_diagonal(leading)) {
    std::vector<std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < m; ++i) {
      bool placed = false;
      for (std::size_t g = 0; g < groups.size(); ++g)
        if (std::abs(leading(i, i) - block_values[g]) <= tol) {
          groups[g].push_back(i);
          placed = true;
          break;
        }
      if (!placed) {
        groups.push_back({i});
        block_values.push_back(leading(i, i));
      }
    }
    v.setZero();
    Eigen::Index col = 0;
    for (const auto& g : groups) {
      for (auto i : g) v(i, col++) = 1.0;
      block_sizes.push_back(static_cast<int>(g.size()));
    }
  } else {
    const auto eig = eigen_sorted(leading, tol);
    eig.require_diagonalizable("leading matrix");
    Eigen::Index col = 0;
    for (const auto& c : eig.clusters) {
      v.middleCols(col, c.multiplicity) = c.basis;
      col += c.multiplicity;
      block_values.push_back(c.value);
      block_sizes.push_back(c.multiplicity);
    }
  }
  const Eigen::PartialPivLU<CMatrix> vlu(v);
  CMatrix r1 = vlu.solve(residue * v);

  // Step 2: diagonalize each diagonal block of the residue (stabilizer action).
  CMatrix w = CMatrix::Identity(m, m);
  RankOneReduction out;
  Eigen::Index offset = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    const Eigen::Index size = block_sizes[b];
    const CMatrix blk = r1.block(offset, offset, size, size);
    if (size == 1 || is_diagonal(blk)) {
      for (Eigen::Index i = 0; i < size; ++i) out.exponents.push_back(blk(i, i));
    } else {
      const auto eig = eigen_sorted(blk, tol);
      eig.require_diagonalizable("residue block");
      Eigen::Index col = 0;
      for (const auto& c : eig.clusters) {
        w.block(offset, offset + col, size, c.multiplicity) = c.basis;
        for (int k = 0; k < c.multiplicity; ++k) out.exponents.push_back(c.value);
        col += c.multiplicity;
      }
    }
    for (Eigen::Index i = 0; i < size; ++i) out.leading.push_back(block_values[b]);
    offset += size;
  }
  out.gauge = v * w;
  const Eigen::PartialPivLU<CMatrix> wlu(w);
  out.residue = wlu.solve(r1 * w);
  offset = 0;
  for (int size : block_sizes) {
    out.residue.block(offset, offset, size, size).setZero();
    offset += size;
  }
  for (Eigen::Index i = 0; i < m; ++i) out.residue(i, i) = out.exponents[static_cast<std::size_t>(i)];
  out.block_sizes = std::move(block_sizes);
  return out;
}

RiemannScheme riemann_scheme(const RationalSystem& sys, double tol) {
  RiemannScheme scheme;
  scheme.rank = sys.rank();
  double scale = 0;
  for (const auto& p : sys.finite())
    for (const auto& c : p.coeffs) scale = std::max(scale, c.norm());
  for (const auto& c : sys.infinity()) scale = std::max(scale, c.norm());

  int irregular = 0;
  for (std::size_t i = 0; i < sys.finite().size(); ++i) {
    const auto& p = sys.finite()[i];
    if (p.poincare_rank() > 1)
      throw Error(ErrorKind::Unsupported, "Poincare rank >= 2 is not supported", static_cast<int>(i));
    if (p.poincare_rank() == 1 && !is_zero(p.coeffs[1], scale)) {
      ++irregular;
      scheme.points.push_back(rank_one_point(p.point, p.coeffs[1], p.coeffs[0], tol));
    } else if (!is_zero(p.coeffs[0], scale)) {
      scheme.points.push_back(fuchsian_point(p.point, p.coeffs[0], tol));
    }
  }
  if (sys.poincare_rank_infinity() > 1)
    throw Error(ErrorKind::Unsupported, "Poincare rank >= 2 at infinity is not supported");
  const CMatrix res_inf = sys.residue_at_infinity();
  if (sys.poincare_rank_infinity() == 1 && !is_zero(sys.infinity()[0], scale)) {
    ++irregular;
    // z = 1/x turns S + R_inf-part into -S/z^2 + A_inf^(0)/z + ...
    scheme.points.push_back(rank_one_point(std::nullopt, -sys.infinity()[0], res_inf, tol));
  } else if (!is_zero(res_inf, scale)) {
    scheme.points.push_back(fuchsian_point(std::nullopt, res_inf, tol));
  }
  if (irregular > 1) throw Error(ErrorKind::Unsupported, "at most one irregular point is supported");
  return scheme;
}

SpectralType spectral_type(const RiemannScheme& scheme, double tol) {
  std::vector<PointType> points;
  for (const auto& p : scheme.points) {
    if (!p.irregular()) {
      points.push_back(PointType::fuchsian(multiplicities(p.exponents, tol)));
      continue;
    }
    // Group the exponents by clustered leading values.
    std::vector<cplx> keys;
    std::vector<std::vector<cplx>> groups;
    for (std::size_t i = 0; i < p.leading.size(); ++i) {
      std::size_t g = 0;
      while (g < keys.size() && std::abs(keys[g] - p.leading[i]) > tol) ++g;
      if (g == keys.size()) {
        keys.push_back(p.leading[i]);
        groups.emplace_back();
      }
      groups[g].push_back(p.exponents[i]);
    }
    std::vector<Partition> blocks;
    for (const auto& g : groups) blocks.push_back(multiplicities(g, tol));
    points.push_back(PointType::rank_one(std::move(blocks)));
  }
  return SpectralType(std::move(points));
}

double fuchs_check(const RiemannScheme& scheme) { return std::abs(scheme.exponent_sum()); }

double fuchs_check(const RationalSystem& sys) { return fuchs_check(riemann_scheme(sys)); }

}  // namespace isomon
