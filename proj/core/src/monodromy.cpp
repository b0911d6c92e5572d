#include "isomon/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>

#include <boost/numeric/odeint.hpp>

namespace isomon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStepFloor = 1e-14;

double distance_to_segment(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(std::real((p - a) * std::conj(d)) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// The integration runs in extended precision: generator norms grow like
// exp(2 pi |Im exponent|) and trace words of products cancel heavily, so the
// double roundoff floor, not the step tolerance, limits the comparison.
using Real = long double;
using LCplx = std::complex<Real>;
using LMatrix = Eigen::Matrix<LCplx, Eigen::Dynamic, Eigen::Dynamic>;
using State = std::vector<Real>;

constexpr Real kPiL = std::numbers::pi_v<Real>;

LCplx widen(cplx z) { return {static_cast<Real>(z.real()), static_cast<Real>(z.imag())}; }

// Real split of Y (column-major, re then im per entry).
void pack(const LMatrix& y, State& out) {
  const auto n = y.size();
  out.resize(static_cast<std::size_t>(2 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(2 * i)] = y.data()[i].real();
    out[static_cast<std::size_t>(2 * i + 1)] = y.data()[i].imag();
  }
}

LMatrix unpack(const State& in, Eigen::Index m) {
  LMatrix y(m, m);
  for (Eigen::Index i = 0; i < m * m; ++i)
    y.data()[i] = LCplx(in[static_cast<std::size_t>(2 * i)], in[static_cast<std::size_t>(2 * i + 1)]);
  return y;
}

struct WideSystem {
  struct Point {
    LCplx at;
    std::vector<LMatrix> coeffs;
  };
  std::vector<Point> finite;
  std::vector<LMatrix> infinity;
  Eigen::Index m;

  explicit WideSystem(const RationalSystem& sys) : m(sys.rank()) {
    for (const auto& p : sys.finite()) {
      Point w{widen(p.point), {}};
      for (const auto& c : p.coeffs) w.coeffs.push_back(c.unaryExpr(&widen));
      finite.push_back(std::move(w));
    }
    for (const auto& c : sys.infinity()) infinity.push_back(c.unaryExpr(&widen));
  }

  LMatrix evaluate(LCplx x) const {
    LMatrix a = LMatrix::Zero(m, m);
    for (const auto& p : finite) {
      const LCplx inv = Real(1) / (x - p.at);
      LCplx power = inv;
      for (const auto& c : p.coeffs) {
        a += c * power;
        power *= inv;
      }
    }
    LCplx power = 1;
    for (const auto& c : infinity) {
      a += c * power;
      power *= x;
    }
    return a;
  }
};

// Segment parametrized in extended precision. An arc starts exactly where the
// previous segment ended and full turns use the extended-precision pi, so
// closed loops close to working precision.
struct WideSegment {
  bool line = true;
  LCplx from, delta;  // line: from + s delta
  LCplx center, radius_vec;
  Real span = 0;

  WideSegment(const Segment& seg, const std::optional<LCplx>& previous_end) {
    if (seg.kind == Segment::Kind::Line) {
      from = widen(seg.from);
      delta = widen(seg.to) - from;
      return;
    }
    line = false;
    center = widen(seg.center);
    const LCplx nominal = widen(seg.at(0.0));
    radius_vec = nominal - center;
    if (previous_end && std::abs(*previous_end - nominal) <= 1e-9L * static_cast<Real>(seg.radius))
      radius_vec = *previous_end - center;
    const double raw = seg.angle1 - seg.angle0;
    const double turns = std::round(raw / (2.0 * kPi));
    span = std::abs(raw - turns * 2.0 * kPi) < 1e-9 ? static_cast<Real>(turns) * 2 * kPiL : static_cast<Real>(raw);
  }

  LCplx at(Real s) const {
    if (line) return from + s * delta;
    return center + radius_vec * std::exp(LCplx(0, s * span));
  }
  LCplx derivative(Real s) const {
    if (line) return delta;
    return LCplx(0, span) * radius_vec * std::exp(LCplx(0, s * span));
  }
};

struct SegmentRhs {
  const WideSystem* sys;
  const WideSegment* seg;

  void operator()(const State& y, State& dy, Real s) const {
    const LMatrix a = sys->evaluate(seg->at(s)) * seg->derivative(s);
    pack(a * unpack(y, sys->m), dy);
  }
};

}  // namespace

cplx Segment::at(double s) const {
  if (kind == Kind::Line) return from + s * (to - from);
  return center + radius * std::exp(cplx(0.0, angle0 + s * (angle1 - angle0)));
}

cplx Segment::derivative(double s) const {
  if (kind == Kind::Line) return to - from;
  const double w = angle1 - angle0;
  return cplx(0.0, w) * radius * std::exp(cplx(0.0, angle0 + s * w));
}

double Segment::length() const {
  if (kind == Kind::Line) return std::abs(to - from);
  return radius * std::abs(angle1 - angle0);
}

Path Path::line(cplx from, cplx to) {
  Segment s;
  s.kind = Segment::Kind::Line;
  s.from = from;
  s.to = to;
  return Path({s});
}

Path Path::circle(cplx center, double radius, double start, int turns) {
  if (radius <= 0) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
  if (turns == 0) throw Error(ErrorKind::InvalidArgument, "circle needs a nonzero number of turns");
  Segment s;
  s.kind = Segment::Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.angle0 = start;
  s.angle1 = start + 2.0 * kPi * turns;
  return Path({s});
}

Path Path::then(const Path& next) const {
  std::vector<Segment> all = segments_;
  all.insert(all.end(), next.segments_.begin(), next.segments_.end());
  return Path(std::move(all));
}

Path Path::reversed() const {
  std::vector<Segment> out;
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    Segment s = *it;
    if (s.kind == Segment::Kind::Line)
      std::swap(s.from, s.to);
    else
      std::swap(s.angle0, s.angle1);
    out.push_back(s);
  }
  return Path(std::move(out));
}

cplx Path::start() const {
  if (segments_.empty()) throw Error(ErrorKind::InvalidState, "empty path");
  return segments_.front().at(0.0);
}

cplx Path::end() const {
  if (segments_.empty()) throw Error(ErrorKind::InvalidState, "empty path");
  return segments_.back().at(1.0);
}

double Path::length() const {
  double l = 0;
  for (const auto& s : segments_) l += s.length();
  return l;
}

double Path::min_distance(const std::vector<cplx>& points) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : segments_) {
    for (const cplx& p : points) {
      if (s.kind == Segment::Kind::Line) {
        best = std::min(best, distance_to_segment(p, s.from, s.to));
      } else {
        constexpr int samples = 512;
        for (int k = 0; k <= samples; ++k) best = std::min(best, std::abs(p - s.at(static_cast<double>(k) / samples)));
      }
    }
  }
  return best;
}

void IntegratorStats::merge(const IntegratorStats& o) {
  steps += o.steps;
  rejected += o.rejected;
  if (o.min_step > 0) min_step = min_step > 0 ? std::min(min_step, o.min_step) : o.min_step;
}

CMatrix transfer_matrix(const RationalSystem& sys, const Path& path, double tol, IntegratorStats* stats) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "integrator tolerance must be positive");
  if (path.segments().empty()) throw Error(ErrorKind::InvalidArgument, "empty path");
  const Eigen::Index m = sys.rank();
  const double total = path.length();
  namespace ode = boost::numeric::odeint;
  using Stepper = ode::runge_kutta_fehlberg78<State, Real>;

  const WideSystem wide(sys);
  IntegratorStats local;
  State y;
  pack(LMatrix::Identity(m, m), y);
  std::optional<LCplx> previous_end;
  for (const Segment& seg : path.segments()) {
    const double len = seg.length();
    if (len == 0.0) continue;
    const WideSegment ws(seg, previous_end);
    previous_end = ws.at(1);
    auto stepper = ode::make_controlled(static_cast<Real>(tol), static_cast<Real>(tol), Stepper());
    const SegmentRhs rhs{&wide, &ws};
    Real s = 0;
    Real ds = 0.01L;
    while (s < 1) {
      if (s + ds > 1) ds = 1 - s;
      const Real before = s;
      const auto res = stepper.try_step(rhs, y, s, ds);
      if (res == ode::success) {
        ++local.steps;
        const double taken = static_cast<double>(s - before) * len;
        if (s < 1) local.min_step = local.min_step > 0 ? std::min(local.min_step, taken) : taken;
      } else {
        ++local.rejected;
      }
      if (static_cast<double>(ds) * len < kStepFloor * total)
        throw Error(ErrorKind::StepFloor, "integrator step fell below the floor; path too close to a singular point");
    }
  }
  for (Real v : y)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidState, "transfer matrix overflowed");
  if (stats) stats->merge(local);
  const LMatrix out = unpack(y, m);
  CMatrix narrow(m, m);
  for (Eigen::Index i = 0; i < m * m; ++i)
    narrow.data()[i] = cplx(static_cast<double>(out.data()[i].real()), static_cast<double>(out.data()[i].imag()));
  return narrow;
}

MonodromyRep monodromy_rep(const RationalSystem& sys, const MonodromyOptions& opt) {
  const auto pts = sys.points();
  const std::size_t n = pts.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "system has no finite singular points");

  cplx center = 0;
  for (const cplx& p : pts) center += p;
  center /= static_cast<double>(n);
  double spread = 0, dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    spread = std::max(spread, std::abs(pts[i] - center));
    for (std::size_t j = 0; j < i; ++j) dmin = std::min(dmin, std::abs(pts[i] - pts[j]));
  }
  if (n == 1) dmin = std::max(1.0, spread);
  if (spread == 0.0) spread = dmin;

  // Straight rays from the base to each point must keep clear of the others.
  const auto rays_clear = [&](cplx base) {
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(base - pts[i]) < 0.25 * dmin) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && distance_to_segment(pts[j], base, pts[i]) < 0.2 * dmin) return false;
    }
    return true;
  };

  cplx base;
  if (opt.base) {
    base = *opt.base;
    if (!rays_clear(base))
      throw Error(ErrorKind::InvalidArgument, "base point is too close to a singular point or its rays are blocked");
  } else {
    const double radius = 1.5 * spread + 0.5 * dmin;
    bool found = false;
    for (int k = 0; k < 64 && !found; ++k) {
      const cplx cand = center + radius * std::exp(cplx(0.0, -kPi / 2 + 0.37 * k));
      if (rays_clear(cand)) {
        base = cand;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::NoSolution, "no admissible base point found");
  }

  std::vector<int> order(n);
  if (opt.ordering) {
    order = *opt.ordering;
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < n; ++i)
      if (check.size() != n || check[i] != static_cast<int>(i))
        throw Error(ErrorKind::InvalidArgument, "ordering must be a permutation of the finite points");
  } else {
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    const cplx ref = center - base;
    const cplx axis = std::abs(ref) > 0 ? ref : cplx(1.0, 0.0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::arg((pts[static_cast<std::size_t>(a)] - base) / axis) <
             std::arg((pts[static_cast<std::size_t>(b)] - base) / axis);
    });
  }

  // Keyhole loop: ray in, counterclockwise circle, ray out.
  std::vector<Path> loops;
  for (int idx : order) {
    const cplx u = pts[static_cast<std::size_t>(idx)];
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(j) != idx) nearest = std::min(nearest, std::abs(pts[j] - u));
    if (n == 1) nearest = std::abs(base - u);
    const double r = std::min(0.5 * nearest, 0.5 * std::abs(base - u));
    const cplx dir = (u - base) / std::abs(u - base);
    const cplx entry = u - r * dir;
    const Path in = Path::line(base, entry);
    loops.push_back(in.then(Path::circle(u, r, std::arg(-dir), 1)).then(in.reversed()));
  }

  MonodromyRep rep;
  rep.base = base;
  const Eigen::Index m = sys.rank();
  std::vector<std::future<std::pair<CMatrix, IntegratorStats>>> jobs;
  for (const Path& loop : loops)
    jobs.push_back(std::async(std::launch::async, [&sys, loop, tol = opt.tol] {
      IntegratorStats st;
      CMatrix mm = transfer_matrix(sys, loop, tol, &st);
      return std::make_pair(std::move(mm), st);
    }));
  // Independent loop around infinity: clockwise circle through the base.
  const double big = std::abs(base - center);
  const Path around_inf = Path::circle(center, big, std::arg(base - center), -1);
  IntegratorStats inf_stats;
  const CMatrix m_inf_direct = transfer_matrix(sys, around_inf, opt.tol, &inf_stats);

  // With two finite points: M1 M2 ~ Minf^-1, M1 Minf ~ M2^-1, M2 Minf ~ M1^-1.
  std::vector<std::pair<std::string, std::future<std::pair<CMatrix, IntegratorStats>>>> words;
  if (n == 2) {
    const std::pair<std::string, Path> word_loops[] = {
        {"M1*M2", around_inf.reversed()}, {"M1*Minf", loops[1].reversed()}, {"M2*Minf", loops[0].reversed()}};
    for (const auto& [name, loop] : word_loops)
      words.emplace_back(name, std::async(std::launch::async, [&sys, loop = loop, tol = opt.tol] {
                           IntegratorStats st;
                           CMatrix mm = transfer_matrix(sys, loop, tol, &st);
                           return std::make_pair(std::move(mm), st);
                         }));
  }

  CMatrix product = CMatrix::Identity(m, m);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    auto [mm, st] = jobs[k].get();
    rep.stats.merge(st);
    rep.points.push_back(pts[static_cast<std::size_t>(order[k])]);
    product = mm * product;
    rep.generators.push_back(std::move(mm));
  }
  rep.stats.merge(inf_stats);
  for (auto& [name, job] : words) {
    auto [mm, st] = job.get();
    rep.stats.merge(st);
    rep.pair_traces[name] = mm.trace();
  }
  rep.infinity = m_inf_direct;
  rep.cyclic_defect_abs = (m_inf_direct * product - CMatrix::Identity(m, m)).norm();
  rep.cyclic_defect = rep.cyclic_defect_abs / std::max(1.0, m_inf_direct.norm() * product.norm());
  return rep;
}

RepComparison compare_reps(const MonodromyRep& a, const MonodromyRep& b, double rep_tol) {
  if (a.generators.size() != b.generators.size())
    throw Error(ErrorKind::ShapeMismatch, "representations have different numbers of generators");
  const auto gens = [](const MonodromyRep& r) {
    std::vector<CMatrix> g = r.generators;
    g.push_back(r.infinity);
    return g;
  };
  const auto ga = gens(a), gb = gens(b);
  const std::size_t n = ga.size();
  const auto label = [n](std::size_t i) {
    return i + 1 == n ? std::string("Minf") : "M" + std::to_string(i + 1);
  };

  RepComparison out;
  const auto add = [&](std::string name, cplx x, cplx y) {
    const double mis = std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
    if (mis >= out.max_mismatch) {
      out.max_mismatch = mis;
      out.worst = name;
    }
    out.entries.push_back({std::move(name), x, y, mis});
  };
  for (std::size_t i = 0; i < n; ++i) add(label(i), ga[i].trace(), gb[i].trace());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string name = label(i) + "*" + label(j);
      const auto da = a.pair_traces.find(name), db = b.pair_traces.find(name);
      if (da != a.pair_traces.end() && db != b.pair_traces.end())
        add(std::move(name), da->second, db->second);
      else
        add(std::move(name), (ga[i] * ga[j]).trace(), (gb[i] * gb[j]).trace());
    }
  out.compatible = out.max_mismatch <= rep_tol;
  return out;
}

}  // namespace isomon
