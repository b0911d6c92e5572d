#pragma once

// Numerical monodromy by integrating dY/dx = A(x) Y along explicit paths.
//
// Convention: Y(x0) = I and continuation along a loop gamma sends Y to
// Y M_gamma, so M_gamma is the transfer matrix of gamma and
// transfer(p1 then p2) = transfer(p2) * transfer(p1).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isomon/systems.hpp"

namespace isomon {

struct Segment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  cplx from, to;          // line endpoints
  cplx center;            // arc data
  double radius = 0;
  double angle0 = 0, angle1 = 0;  // radians; angle1 > angle0 is counterclockwise

  cplx at(double s) const;          // s in [0, 1]
  cplx derivative(double s) const;  // d/ds
  double length() const;
};

class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  static Path line(cplx from, cplx to);
  /// Full circle around `center` starting at angle `start`; turns = +1 is
  /// counterclockwise, -1 clockwise.
  static Path circle(cplx center, double radius, double start, int turns = 1);

  /// This path followed by `next`.
  Path then(const Path& next) const;
  Path reversed() const;

  const std::vector<Segment>& segments() const { return segments_; }
  cplx start() const;
  cplx end() const;
  double length() const;
  /// Smallest distance from the path to any of the points (sampled densely).
  double min_distance(const std::vector<cplx>& points) const;

 private:
  std::vector<Segment> segments_;
};

struct IntegratorStats {
  long steps = 0;
  long rejected = 0;
  double min_step = 0;  // smallest accepted step, in path length

  void merge(const IntegratorStats& o);
};

inline constexpr double kDefaultIntegratorTol = 1e-12;
/// Bound on the cyclic relation defect.
inline constexpr double kDefaultRepTol = 1e-8;
/// Trace agreement between two representations; the traces inherit the
/// conditioning of the generators, so this is looser than kDefaultRepTol.
inline constexpr double kDefaultCompareTol = 1e-6;

/// Errors: StepFloor when the step would fall below 1e-14 of the path length.
CMatrix transfer_matrix(const RationalSystem& sys, const Path& path, double tol = kDefaultIntegratorTol,
                        IntegratorStats* stats = nullptr);

struct MonodromyRep {
  cplx base;
  std::vector<cplx> points;          // finite singular points in loop order
  std::vector<CMatrix> generators;   // M_nu for `points`
  /// Integrated directly along a big clockwise circle through the base, not
  /// as (M_n ... M_1)^-1: the inverse loses digits when generators are large.
  CMatrix infinity;
  /// ||M_inf M_n ... M_1 - I|| / max(1, ||M_inf|| ||M_n ... M_1||).
  double cyclic_defect = 0;
  /// The same residual without the normalization.
  double cyclic_defect_abs = 0;
  /// Pair-product traces read off single loops, keyed like "M1*Minf". Filled
  /// when there are two finite points: each pair product is then conjugate to
  /// the inverse of the remaining generator, so its trace comes from one
  /// reversed loop instead of a product of two possibly huge matrices.
  std::map<std::string, cplx> pair_traces;
  IntegratorStats stats;
};

struct MonodromyOptions {
  std::optional<cplx> base;
  /// Indices into sys.finite() giving the loop order; default orders the
  /// rays from the base point counterclockwise as seen from the base.
  std::optional<std::vector<int>> ordering;
  double tol = kDefaultIntegratorTol;
};

MonodromyRep monodromy_rep(const RationalSystem& sys, const MonodromyOptions& opt = {});

struct TraceEntry {
  std::string label;  // "M1", "M1*M3", "Minf", ...
  cplx first;
  cplx second;
  double mismatch;  // |first - second| / max(1, |first|, |second|)
};

struct RepComparison {
  bool compatible = true;
  double max_mismatch = 0;
  std::string worst;
  std::vector<TraceEntry> entries;
};

/// Traces of every generator (infinity included) and of every product of two
/// distinct generators, taken from pair_traces when both sides have the entry.
/// Throws ShapeMismatch on different point counts.
RepComparison compare_reps(const MonodromyRep& a, const MonodromyRep& b, double rep_tol = kDefaultCompareTol);

}  // namespace isomon
