#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "commands.hpp"
#include "isomon/io.hpp"
#include "isomon/linalg.hpp"
#include "isomon/monodromy.hpp"
#include "isomon/oracle.hpp"
#include "isomon/schlesinger.hpp"

namespace isomon::cli {

namespace {

struct Check {
  std::string name;
  double value;  // the measured defect
  double tol;
  bool pass;
};

std::vector<cplx> as_vector(const std::array<cplx, 4>& a) { return {a.begin(), a.end()}; }

double coord_distance(const GarnierState& a, const GarnierState& b) {
  double worst = 0;
  for (auto [x, y] : {std::pair{a.q1, b.q1}, {a.p1, b.p1}, {a.q2, b.q2}, {a.p2, b.p2}})
    worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(y)));
  return worst;
}

Check measured(std::string name, double value, double tol) { return {std::move(name), value, tol, value <= tol}; }

// Expected spectra after the step, from the derived exponents.
std::pair<std::vector<cplx>, std::vector<cplx>> shifted_spectra(const GarnierState& s, Direction dir) {
  auto rho = as_vector(s.exponents().rho), sigma = as_vector(s.exponents().sigma);
  const std::size_t k = dir == Direction::S1 ? 0 : 1;
  rho[k] += 1.0;
  sigma[k] -= 1.0;
  return {rho, sigma};
}

void exponent_suite(const GarnierState& s, std::vector<Check>& out) {
  const double tol = tolerance(1e-9);
  const auto pair = build_fuchsian_211(s);
  for (Direction dir : {Direction::S1, Direction::S2}) {
    const auto d = step_detailed(s, dir);
    const auto [rho, sigma] = shifted_spectra(s, dir);
    const double err = std::max(spectrum_distance(sorted_eigenvalues(d.A0bar), rho),
                                spectrum_distance(sorted_eigenvalues(d.A1bar), sigma));
    out.push_back(measured("exponent shift " + std::string(to_string(dir)), err, tol));
    const double trace = std::abs(d.M.trace() - (pair.A0 + pair.A1).trace()) / std::max(1.0, d.M.norm());
    out.push_back(measured("trace conservation " + std::string(to_string(dir)), trace, tol));
  }
}

void gauge_suite(const GarnierState& s, std::vector<Check>& out) {
  const double tri_tol = tolerance(1e-10), norm_tol = tolerance(1e-9), oracle_tol = tolerance(1e-8);
  for (Direction dir : {Direction::S1, Direction::S2}) {
    const std::string tag = std::string(to_string(dir));
    const auto d = step_detailed(s, dir);
    out.push_back(measured("triangularity " + tag, std::max(lower_defect(d.A0bar), upper_defect(d.A1bar)), tri_tol));
    const auto u = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalU, ExtractionRoute::Printed});
    const auto l = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalL, ExtractionRoute::Printed});
    out.push_back(measured("normalization independence " + tag, coord_distance(u, l), norm_tol));
    const auto alt = schlesinger_step(s, dir, {LuNormalization::UnitDiagonalU, ExtractionRoute::Alternate});
    out.push_back(measured("extraction routes " + tag, coord_distance(u, alt), norm_tol));
    out.push_back(measured("rebuild residual " + tag, d.rebuild_residual, norm_tol));

    const auto e = s.exponents();
    const int slot = dir == Direction::S1 ? 0 : 1;
    const auto o = schlesinger_oracle(pair_system(build_fuchsian_211(s), s.eps), as_vector(e.rho), as_vector(e.sigma),
                                      {slot, slot});
    GarnierState target = s;
    (dir == Direction::S1 ? target.t1 : target.t2) += s.eps;
    out.push_back(measured("oracle agreement " + tag, coord_distance(d.state, extract_state(o.pair.A0 + o.pair.A1, target)),
                           oracle_tol));
    const int nullity = rigidity_nullity(d.A0bar, d.A1bar);
    out.push_back({"gauge rigidity " + tag + " (nullity " + std::to_string(nullity) + ")", std::abs(nullity - 4.0), 0.0,
                   nullity == 4});
  }
}

void monodromy_suite(const GarnierState& s, std::vector<Check>& out) {
  const double rep_tol = tolerance(kDefaultCompareTol), cyc_tol = tolerance(kDefaultRepTol);
  const auto before = monodromy_rep(pair_system(build_fuchsian_211(s), s.eps));
  out.push_back(measured("cyclic relation", before.cyclic_defect, cyc_tol));
  for (Direction dir : {Direction::S1, Direction::S2}) {
    const auto next = schlesinger_step(s, dir);
    const auto after = monodromy_rep(pair_system(build_fuchsian_211(next), next.eps));
    out.push_back(measured("monodromy invariance " + std::string(to_string(dir)),
                           compare_reps(before, after, rep_tol).max_mismatch, rep_tol));
  }
}

}  // namespace

int cmd_verify(const VerifyOptions& opt) {
  const GarnierState s = read_state(opt.state_file);
  std::vector<Check> checks;
  const bool all = opt.suite == "all";
  try {
    if (all || opt.suite == "exponents") exponent_suite(s, checks);
    if (all || opt.suite == "gauge") gauge_suite(s, checks);
    if (all || opt.suite == "monodromy") monodromy_suite(s, checks);
  } catch (const Error& e) {
    throw Failure{kNonGeneric, std::string("verification could not run: ") + e.what()};
  }

  bool ok = true;
  std::printf("%-44s %-24s %-10s %s\n", "check", "defect", "tol", "result");
  for (const auto& c : checks) {
    ok = ok && c.pass;
    std::printf("%-44s %-24s %-10.1e %s\n", c.name.c_str(), io::format_double(c.value).c_str(), c.tol,
                c.pass ? "PASS" : "FAIL");
  }
  std::printf("%s: %zu checks\n", ok ? "PASS" : "FAIL", checks.size());
  return ok ? kOk : kVerificationFailed;
}

}  // namespace isomon::cli
