#include "isomon/io.hpp"

#include <cstdio>
#include <sstream>

namespace isomon::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, "json: " + what);
}

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

json complex_list(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(to_json(z));
  return out;
}

void write(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << json(it.key()).dump() << ": ";
        write(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Short numeric arrays (complex pairs) stay on one line.
      bool flat = j.size() <= 2;
      for (const auto& e : j) flat = flat && e.is_number();
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write(os, j[i], indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write(os, j[i], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), "complex must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json to_json(const RationalSystem& sys) {
  json finite = json::array();
  for (const auto& p : sys.finite()) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
    finite.push_back({{"point", to_json(p.point)}, {"coeffs", coeffs}});
  }
  json inf = json::array();
  for (const auto& c : sys.infinity()) inf.push_back(to_json(c));
  return {{"rank", sys.rank()}, {"finite", finite}, {"infinity", inf}};
}

RationalSystem system_from_json(const json& j) {
  const int rank = field(j, "rank").get<int>();
  std::vector<PolePart> finite;
  for (const auto& p : field(j, "finite")) {
    PolePart part;
    part.point = complex_from_json(field(p, "point"));
    for (const auto& c : field(p, "coeffs")) part.coeffs.push_back(matrix_from_json(c));
    finite.push_back(std::move(part));
  }
  std::vector<CMatrix> inf;
  if (j.contains("infinity"))
    for (const auto& c : j.at("infinity")) inf.push_back(matrix_from_json(c));
  return RationalSystem(rank, std::move(finite), std::move(inf));
}

json to_json(const RiemannScheme& scheme) {
  json pts = json::array();
  for (const auto& p : scheme.points) {
    pts.push_back({{"location", p.location ? to_json(*p.location) : json(nullptr)},
                   {"leading", complex_list(p.leading)},
                   {"exponents", complex_list(p.exponents)},
                   {"non_resonant", p.non_resonant}});
  }
  return {{"rank", scheme.rank}, {"points", pts}};
}

json to_json(const SpectralType& t) {
  json pts = json::array();
  for (const auto& p : t.points()) pts.push_back(p.str());
  return {{"type", t.str()}, {"rank", t.rank()}, {"points", pts}};
}

SpectralType spectral_type_from_json(const json& j) {
  if (j.is_string()) return SpectralType::parse(j.get<std::string>());
  return SpectralType::parse(field(j, "type").get<std::string>());
}

json to_json(const GarnierState& s) {
  const auto e = s.exponents();
  json w = json::array();
  for (const cplx& x : s.w) w.push_back(to_json(x));
  json rho = json::array(), sigma = json::array();
  for (const cplx& x : e.rho) rho.push_back(to_json(x));
  for (const cplx& x : e.sigma) sigma.push_back(to_json(x));
  return {{"q1", to_json(s.q1)},
          {"p1", to_json(s.p1)},
          {"q2", to_json(s.q2)},
          {"p2", to_json(s.p2)},
          {"w", w},
          {"u", to_json(s.u)},
          {"theta0", to_json(s.theta0)},
          {"theta1", to_json(s.theta1)},
          {"theta_t1", to_json(s.theta_t1)},
          {"theta_t2", to_json(s.theta_t2)},
          {"theta_inf1", to_json(s.theta_inf1())},
          {"theta_inf2", to_json(s.theta_inf2)},
          {"t1", to_json(s.t1)},
          {"t2", to_json(s.t2)},
          {"eps", to_json(s.eps)},
          {"derived", {{"rho", rho}, {"sigma", sigma}}}};
}

GarnierState state_from_json(const json& j) {
  require(j.is_object(), "state must be an object");
  GarnierState s;
  s.q1 = complex_from_json(field(j, "q1"));
  s.p1 = complex_from_json(field(j, "p1"));
  s.q2 = complex_from_json(field(j, "q2"));
  s.p2 = complex_from_json(field(j, "p2"));
  s.theta0 = complex_from_json(field(j, "theta0"));
  s.theta1 = complex_from_json(field(j, "theta1"));
  s.theta_t1 = complex_from_json(field(j, "theta_t1"));
  s.theta_t2 = complex_from_json(field(j, "theta_t2"));
  s.theta_inf2 = complex_from_json(field(j, "theta_inf2"));
  s.t1 = complex_from_json(field(j, "t1"));
  s.t2 = complex_from_json(field(j, "t2"));
  if (j.contains("eps")) s.eps = complex_from_json(j.at("eps"));
  if (j.contains("u")) s.u = complex_from_json(j.at("u"));
  if (j.contains("w")) {
    const json& w = j.at("w");
    require(w.is_array() && w.size() == 4, "w must have four entries");
    for (std::size_t i = 0; i < 4; ++i) s.w[i] = complex_from_json(w[i]);
  }
  if (j.contains("theta_inf1")) {
    const cplx given = complex_from_json(j.at("theta_inf1"));
    const cplx expected = s.theta_inf1();
    if (std::abs(given - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
      throw Error(ErrorKind::InvalidState,
                  "Fuchs relation violated: theta0 + theta1 + theta_t1 + theta_t2 + theta_inf1 + theta_inf2 != 0");
  }
  s.validate();
  return s;
}

json to_json(const TypeMove& m) {
  json out = {{"kind", std::string(to_string(m.kind))}, {"before", m.before.str()}, {"after", m.after.str()}};
  if (m.i >= 0) out["i"] = m.i;
  if (m.j >= 0) out["j"] = m.j;
  return out;
}

json to_json(const DegenerationGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) nodes.push_back({{"type", n.str()}, {"rank", n.rank()}});
  json edges = json::array();
  for (const auto& e : g.edges) {
    json witness = json::array();
    for (const auto& m : e.witness) witness.push_back(to_json(m));
    edges.push_back({{"from", e.from.str()}, {"to", e.to.str()}, {"witness", witness}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"note", g.note}};
}

json to_json(const MonodromyRep& rep) {
  json gens = json::array();
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    gens.push_back({{"point", to_json(rep.points[i])},
                    {"trace", to_json(rep.generators[i].trace())},
                    {"determinant", to_json(rep.generators[i].determinant())},
                    {"matrix", to_json(rep.generators[i])}});
  json pair_traces = json::object();
  for (const auto& [name, tr] : rep.pair_traces) pair_traces[name] = to_json(tr);
  return {{"base", to_json(rep.base)},
          {"generators", gens},
          {"infinity", {{"trace", to_json(rep.infinity.trace())}, {"matrix", to_json(rep.infinity)}}},
          {"pair_traces", pair_traces},
          {"cyclic_defect", rep.cyclic_defect},
          {"cyclic_defect_abs", rep.cyclic_defect_abs},
          {"integrator", {{"steps", rep.stats.steps}, {"rejected", rep.stats.rejected}, {"min_step", rep.stats.min_step}}}};
}

json to_json(const RepComparison& cmp) {
  json entries = json::array();
  for (const auto& e : cmp.entries)
    entries.push_back({{"word", e.label}, {"first", to_json(e.first)}, {"second", to_json(e.second)}, {"mismatch", e.mismatch}});
  return {{"verdict", cmp.compatible ? "CONJUGATE-COMPATIBLE" : "INCOMPATIBLE"},
          {"max_mismatch", cmp.max_mismatch},
          {"worst", cmp.worst},
          {"traces", entries}};
}

std::string orbit_csv_header() {
  std::string h = "step,direction";
  for (const char* name : {"q1", "p1", "q2", "p2", "w1", "w2", "w3", "w4", "t1", "t2", "rho_t1", "rho_t2", "sigma1", "sigma2"}) {
    h += std::string(",") + name + "_re";
    h += std::string(",") + name + "_im";
  }
  return h + ",rebuild_residual,kernel_ratio";
}

std::string orbit_csv_row(int step, const std::string& direction, const GarnierState& s, double rebuild_residual,
                          double kernel_gap) {
  const auto e = s.exponents();
  std::string row = std::to_string(step) + "," + direction;
  for (cplx z : {s.q1, s.p1, s.q2, s.p2, s.w[0], s.w[1], s.w[2], s.w[3], s.t1, s.t2, e.rho[0], e.rho[1], e.sigma[0], e.sigma[1]})
    row += "," + format_double(z.real()) + "," + format_double(z.imag());
  return row + "," + format_double(rebuild_residual) + "," + format_double(kernel_gap);
}

std::string dump(const json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace isomon::io
