#include "isomon/linalg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace isomon {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::ZeroPivot: return "ZeroPivot";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotARefinement: return "NotARefinement";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::ZeroEpsilon: return "ZeroEpsilon";
    case ErrorKind::SpectralCollision: return "SpectralCollision";
    case ErrorKind::KernelDimension: return "KernelDimension";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::PoleAtCoincidence: return "PoleAtCoincidence";
    case ErrorKind::StepFloor: return "StepFloor";
  }
  return "Unknown";
}

void require_finite(const CMatrix& m, const char* what) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has a non-finite entry");
}

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a non-empty square matrix");
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix diagonal(const std::vector<cplx>& values) {
  CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                            static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
  return d;
}

CMatrix diagonal(const CVector& values) {
  CMatrix d = CMatrix::Zero(values.size(), values.size());
  d.diagonal() = values;
  return d;
}

CMatrix strictly_lower(const CMatrix& m) {
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  out.triangularView<Eigen::StrictlyLower>() = m.triangularView<Eigen::StrictlyLower>();
  return out;
}

CMatrix strictly_upper(const CMatrix& m) {
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  out.triangularView<Eigen::StrictlyUpper>() = m.triangularView<Eigen::StrictlyUpper>();
  return out;
}

double lower_defect(const CMatrix& m) {
  const double scale = std::max(1.0, m.norm());
  return strictly_lower(m).cwiseAbs().maxCoeff() / scale;
}

double upper_defect(const CMatrix& m) {
  const double scale = std::max(1.0, m.norm());
  return strictly_upper(m).cwiseAbs().maxCoeff() / scale;
}

double relative_difference(const CMatrix& a, const CMatrix& b) {
  const double denom = std::max(b.norm(), 1e-300);
  return (a - b).norm() / denom;
}

LUFactors lu_decompose(const CMatrix& m, LuNormalization normalization) {
  require_square(m, "lu_decompose input");
  require_finite(m, "lu_decompose input");
  const Eigen::Index n = m.rows();
  const double scale = std::max(m.norm(), 1e-300);

  // Doolittle elimination: unit-diagonal L, pivots on U's diagonal.
  CMatrix L = CMatrix::Identity(n, n);
  CMatrix U = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = k; j < n; ++j) {
      cplx sum = m(k, j);
      for (Eigen::Index s = 0; s < k; ++s) sum -= L(k, s) * U(s, j);
      U(k, j) = sum;
    }
    if (std::abs(U(k, k)) <= kPivotTolerance * scale)
      throw Error(ErrorKind::ZeroPivot,
                  "leading principal minor " + std::to_string(k + 1) + " vanishes",
                  static_cast<int>(k + 1));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      cplx sum = m(i, k);
      for (Eigen::Index s = 0; s < k; ++s) sum -= L(i, s) * U(s, k);
      L(i, k) = sum / U(k, k);
    }
  }

  if (normalization == LuNormalization::UnitDiagonalU) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx pivot = U(k, k);
      for (Eigen::Index i = k; i < n; ++i) L(i, k) *= pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) U(k, j) /= pivot;
      U(k, k) = 1.0;
    }
  }
  return {std::move(L), std::move(U), normalization};
}

bool lex_less(cplx a, cplx b, double tol) {
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag() - tol;
}

namespace {

// Order indices by real part, then re-sort runs whose consecutive real parts
// agree within tol by imaginary part. Unlike a tolerant comparator this is
// a well-defined total preorder for std::sort.
template <class Key>
void tolerant_lex_sort(std::vector<std::size_t>& idx, Key key, double tol) {
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return key(a).real() < key(b).real(); });
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t stop = start + 1;
    while (stop < idx.size() && key(idx[stop]).real() - key(idx[stop - 1]).real() <= tol) ++stop;
    std::sort(idx.begin() + static_cast<std::ptrdiff_t>(start),
              idx.begin() + static_cast<std::ptrdiff_t>(stop),
              [&](std::size_t a, std::size_t b) { return key(a).imag() < key(b).imag(); });
    start = stop;
  }
}

}  // namespace

std::vector<cplx> sorted_values(std::vector<cplx> values, double tol) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  tolerant_lex_sort(idx, [&](std::size_t i) { return values[i]; }, tol);
  std::vector<cplx> out;
  out.reserve(values.size());
  for (auto i : idx) out.push_back(values[i]);
  return out;
}

double spectrum_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  a = sorted_values(std::move(a));
  b = sorted_values(std::move(b));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool EigenDecomposition::diagonalizable() const {
  return std::all_of(clusters.begin(), clusters.end(),
                     [](const EigenCluster& c) { return c.diagonalizable(); });
}

std::vector<cplx> EigenDecomposition::values() const {
  std::vector<cplx> out;
  for (const auto& c : clusters)
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.value);
  return out;
}

const EigenDecomposition& EigenDecomposition::require_diagonalizable(const char* what) const {
  for (const auto& c : clusters) {
    if (!c.diagonalizable()) {
      std::ostringstream msg;
      msg << what << ": eigenvalue " << c.value << " has algebraic multiplicity "
          << c.multiplicity << " but geometric multiplicity " << c.geometric;
      throw Error(ErrorKind::NotDiagonalizable, msg.str());
    }
  }
  return *this;
}

EigenDecomposition eigen_sorted(const CMatrix& m, double tol) {
  require_square(m, "eigen_sorted input");
  require_finite(m, "eigen_sorted input");
  const Eigen::Index n = m.rows();

  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidArgument, "eigenvalue iteration did not converge");
  const CVector ev = solver.eigenvalues();

  // Single-linkage clustering within tol.
  std::vector<std::size_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(ev(i) - ev(j)) <= tol)
        parent[find(static_cast<std::size_t>(i))] = find(static_cast<std::size_t>(j));

  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> group_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const std::size_t root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[root])].push_back(i);
  }

  std::vector<cplx> means;
  for (const auto& g : groups) {
    cplx sum = 0.0;
    for (auto i : g) sum += ev(static_cast<Eigen::Index>(i));
    means.push_back(sum / static_cast<double>(g.size()));
  }
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  tolerant_lex_sort(order, [&](std::size_t i) { return means[i]; }, tol);

  const double threshold = tol * std::max(1.0, m.norm());
  EigenDecomposition out;
  for (auto gi : order) {
    EigenCluster c;
    c.value = means[gi];
    c.multiplicity = static_cast<int>(groups[gi].size());
    const CMatrix shifted = m - c.value * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    int geometric = 0;
    for (int k = 0; k < c.multiplicity; ++k)
      if (sv(n - 1 - k) <= threshold) ++geometric;
    c.geometric = geometric;
    c.basis = svd.matrixV().rightCols(geometric);
    out.clusters.push_back(std::move(c));
  }
  return out;
}

std::vector<cplx> sorted_eigenvalues(const CMatrix& m, double tol) {
  return eigen_sorted(m, tol).values();
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

CMatrix nullspace(const CMatrix& m, double rel_tol) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = std::max(rel_tol * smax, 1e-300);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

RankFactorization rank_factorize(const CMatrix& m, double rel_tol) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax && sv(i) > 0.0) ++rank;
  RankFactorization out;
  out.left = svd.matrixU().leftCols(rank) * sv.head(rank).cast<cplx>().asDiagonal();
  out.right = svd.matrixV().leftCols(rank).adjoint();
  return out;
}

}  // namespace isomon
