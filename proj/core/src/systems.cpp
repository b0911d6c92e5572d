#include "isomon/systems.hpp"

#include <cmath>

namespace isomon {

namespace {

bool is_diagonal(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && m(i, j) != cplx(0)) return false;
  return true;
}

std::vector<FactoredSystem::Block> diagonal_blocks(const CMatrix& d, const char* what) {
  std::vector<FactoredSystem::Block> blocks;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    const cplx v = d(i, i);
    if (!blocks.empty() && blocks.back().value == v) {
      ++blocks.back().size;
      continue;
    }
    for (const auto& b : blocks)
      if (b.value == v)
        throw Error(ErrorKind::InvalidArgument,
                    std::string(what) + ": equal diagonal values must be contiguous", static_cast<int>(i));
    blocks.push_back({v, i, 1});
  }
  return blocks;
}

}  // namespace

RationalSystem::RationalSystem(int rank, std::vector<PolePart> finite, std::vector<CMatrix> infinity)
    : rank_(rank), finite_(std::move(finite)), infinity_(std::move(infinity)) {
  if (rank_ <= 0) throw Error(ErrorKind::InvalidArgument, "system rank must be positive");
  auto check = [&](const CMatrix& a, const char* what) {
    if (a.rows() != rank_ || a.cols() != rank_)
      throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": coefficient is not m x m");
    require_finite(a, what);
  };
  for (std::size_t i = 0; i < finite_.size(); ++i) {
    const auto& p = finite_[i];
    if (!std::isfinite(p.point.real()) || !std::isfinite(p.point.imag()))
      throw Error(ErrorKind::InvalidArgument, "singular point is not finite", static_cast<int>(i));
    if (p.coeffs.empty())
      throw Error(ErrorKind::InvalidArgument, "pole part without coefficients", static_cast<int>(i));
    for (const auto& a : p.coeffs) check(a, "pole coefficient");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(finite_[j].point - p.point) <= 1e-12)
        throw Error(ErrorKind::InvalidArgument, "singular points coincide", static_cast<int>(i));
  }
  for (const auto& a : infinity_) check(a, "polynomial coefficient");
}

RationalSystem RationalSystem::fuchsian(const std::vector<std::pair<cplx, CMatrix>>& residues) {
  if (residues.empty()) throw Error(ErrorKind::InvalidArgument, "no residues given");
  std::vector<PolePart> parts;
  for (const auto& [u, a] : residues) parts.push_back({u, {a}});
  return RationalSystem(static_cast<int>(residues.front().second.rows()), std::move(parts));
}

bool RationalSystem::fuchsian() const {
  if (!infinity_.empty()) return false;
  for (const auto& p : finite_)
    if (p.coeffs.size() != 1) return false;
  return true;
}

CMatrix RationalSystem::evaluate(cplx x) const {
  CMatrix a = CMatrix::Zero(rank_, rank_);
  for (const auto& p : finite_) {
    const cplx d = x - p.point;
    if (d == cplx(0)) throw Error(ErrorKind::InvalidArgument, "evaluation at a singular point");
    cplx inv = 1.0 / d, power = inv;
    for (const auto& c : p.coeffs) {
      a += c * power;
      power *= inv;
    }
  }
  cplx power = 1.0;
  for (const auto& c : infinity_) {
    a += c * power;
    power *= x;
  }
  return a;
}

CMatrix RationalSystem::residue_at_infinity() const {
  CMatrix r = CMatrix::Zero(rank_, rank_);
  for (const auto& p : finite_) r -= p.coeffs.front();
  return r;
}

std::vector<cplx> RationalSystem::points() const {
  std::vector<cplx> out;
  for (const auto& p : finite_) out.push_back(p.point);
  return out;
}

int RationalSystem::find_point(cplx x, double tol) const {
  for (std::size_t i = 0; i < finite_.size(); ++i)
    if (std::abs(finite_[i].point - x) <= tol) return static_cast<int>(i);
  return -1;
}

RationalSystem RationalSystem::conjugated(const CMatrix& g) const {
  require_square(g, "gauge");
  if (g.rows() != rank_) throw Error(ErrorKind::ShapeMismatch, "gauge size differs from system rank");
  const Eigen::PartialPivLU<CMatrix> lu(g);
  const CMatrix gi = lu.inverse();
  auto finite = finite_;
  for (auto& p : finite)
    for (auto& c : p.coeffs) c = g * c * gi;
  auto inf = infinity_;
  for (auto& c : inf) c = g * c * gi;
  return RationalSystem(rank_, std::move(finite), std::move(inf));
}

FactoredSystem::FactoredSystem(CMatrix T, CMatrix Q, CMatrix P, CMatrix S)
    : T_(std::move(T)), Q_(std::move(Q)), P_(std::move(P)), S_(std::move(S)) {
  require_square(T_, "T");
  require_square(S_, "S");
  const auto n = T_.rows(), m = S_.rows();
  if (Q_.rows() != m || Q_.cols() != n || P_.rows() != n || P_.cols() != m)
    throw Error(ErrorKind::ShapeMismatch, "factored system: Q must be m x n and P n x m");
  for (const CMatrix* a : {&T_, &Q_, &P_, &S_}) require_finite(*a, "factored system");
  if (!is_diagonal(T_)) throw Error(ErrorKind::InvalidArgument, "T must be stored diagonal");
  if (!is_diagonal(S_)) throw Error(ErrorKind::InvalidArgument, "S must be stored diagonal");
  diagonal_blocks(T_, "T");
  diagonal_blocks(S_, "S");
}

std::vector<FactoredSystem::Block> FactoredSystem::t_blocks() const { return diagonal_blocks(T_, "T"); }
std::vector<FactoredSystem::Block> FactoredSystem::s_blocks() const { return diagonal_blocks(S_, "S"); }

CMatrix FactoredSystem::evaluate(cplx x) const {
  CMatrix scaled_p = P_;
  for (Eigen::Index i = 0; i < T_.rows(); ++i) {
    const cplx d = x - T_(i, i);
    if (d == cplx(0)) throw Error(ErrorKind::InvalidArgument, "evaluation at a singular point");
    scaled_p.row(i) /= d;
  }
  return Q_ * scaled_p + S_;
}

HtlForm::HtlForm(std::vector<Level> levels, std::vector<CMatrix> stages, CMatrix theta)
    : stages_(std::move(stages)), theta_(std::move(theta)) {
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "HTL form needs at least one level");
  for (const auto& l : levels) {
    if (l.den == 0) throw Error(ErrorKind::InvalidArgument, "HTL level with zero denominator");
    if (l.num % l.den != 0) throw Error(ErrorKind::Unsupported, "ramified HTL levels are not supported");
    levels_.push_back(static_cast<int>(l.num / l.den));
  }
  if (levels_.back() != 1) throw Error(ErrorKind::InvalidArgument, "last HTL level must be 1");
  for (std::size_t i = 1; i < levels_.size(); ++i)
    if (levels_[i] >= levels_[i - 1]) throw Error(ErrorKind::InvalidArgument, "HTL levels must decrease");
  if (stages_.size() + 1 != levels_.size())
    throw Error(ErrorKind::ShapeMismatch, "need one stage matrix per level above 1");
  require_square(theta_, "HTL residue");
  for (const auto& s : stages_) {
    if (s.rows() != theta_.rows() || s.cols() != theta_.cols())
      throw Error(ErrorKind::ShapeMismatch, "HTL stage size differs from residue");
    if (!is_diagonal(s)) throw Error(ErrorKind::InvalidArgument, "HTL stage matrices must be diagonal");
  }
  if (!is_diagonal(theta_)) throw Error(ErrorKind::InvalidArgument, "HTL residue must be diagonal");
}

HtlForm SchemePoint::htl() const {
  const CMatrix theta = diagonal(exponents);
  if (!irregular()) return HtlForm({{1, 1}}, {}, theta);
  return HtlForm({{2, 1}, {1, 1}}, {diagonal(leading)}, theta);
}

cplx RiemannScheme::exponent_sum() const {
  cplx s = 0;
  for (const auto& p : points)
    for (const auto& e : p.exponents) s += e;
  return s;
}

bool RiemannScheme::non_resonant() const {
  for (const auto& p : points)
    if (!p.non_resonant) return false;
  return true;
}

}  // namespace isomon
