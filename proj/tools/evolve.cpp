#include <algorithm>
#include <iostream>
#include <limits>
#include <sstream>

#include "commands.hpp"
#include "isomon/io.hpp"
#include "isomon/monodromy.hpp"
#include "isomon/schlesinger.hpp"

namespace isomon::cli {

namespace {

MonodromyRep rep_of(const GarnierState& s) { return monodromy_rep(pair_system(build_fuchsian_211(s), s.eps)); }

Direction direction_at(const std::string& dir, int step) {
  if (dir == "s1") return Direction::S1;
  if (dir == "s2") return Direction::S2;
  return step % 2 == 1 ? Direction::S1 : Direction::S2;
}

}  // namespace

int cmd_evolve(const EvolveOptions& opt) {
  const GarnierState start = read_state(opt.state_file);
  const double rep_tol = tolerance(kDefaultCompareTol);

  if (opt.steps == 0) {
    std::cout << io::dump(io::to_json(start)) << "\n";
    if (!opt.out.empty()) write_output(opt.out, io::orbit_csv_header() + "\n");
    return kOk;
  }

  std::ostringstream csv;
  csv << io::orbit_csv_header() << "\n";
  std::ostringstream checks;
  bool all_compatible = true;
  std::optional<MonodromyRep> reference;
  if (opt.verify_every > 0) reference = rep_of(start);

  GarnierState s = start;
  for (int step = 1; step <= opt.steps; ++step) {
    const Direction dir = direction_at(opt.dir, step);
    StepDetail d;
    try {
      d = step_detailed(s, dir);
    } catch (const Error& e) {
      // Keep the rows computed so far.
      write_output(opt.out, csv.str());
      throw Failure{kNonGeneric, "non-generic step " + std::to_string(step) + " (" + std::string(to_string(dir)) +
                                     "): " + e.what()};
    }
    s = d.state;
    const auto& sv = d.kernel_singular_values;
    const double ratio = sv(2) / std::max(sv(3), std::numeric_limits<double>::min());
    csv << io::orbit_csv_row(step, std::string(to_string(dir)), s, d.rebuild_residual, ratio) << "\n";

    if (opt.verify_every > 0 && step % opt.verify_every == 0) {
      const auto cmp = compare_reps(*reference, rep_of(s), rep_tol);
      const char* verdict = cmp.compatible ? "CONJUGATE-COMPATIBLE" : "INCOMPATIBLE";
      all_compatible = all_compatible && cmp.compatible;
      checks << "# checkpoint," << step << "," << verdict << "," << io::format_double(cmp.max_mismatch) << ","
             << cmp.worst << "\n";
      std::cerr << "checkpoint " << step << ": " << verdict << " (max mismatch "
                << io::format_double(cmp.max_mismatch) << " at " << cmp.worst << ")\n";
    }
  }
  if (opt.verify_every > 0) csv << "# checkpoint,step,verdict,max_mismatch,worst\n" << checks.str();
  write_output(opt.out, csv.str());
  return all_compatible ? kOk : kVerificationFailed;
}

}  // namespace isomon::cli
