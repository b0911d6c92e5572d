#pragma once

#include <optional>
#include <string>

#include "isomon/garnier.hpp"

namespace isomon::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kNonGeneric = 3 };

/// Thrown by the commands; main prints the message and exits with `code`.
struct Failure {
  int code;
  std::string message;
};

/// Reads and validates a state file. Failure{kInputError} on any problem.
GarnierState read_state(const std::string& path);

/// ISOMON_TOL when set, otherwise `fallback`.
double tolerance(double fallback);

/// Writes to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

struct EvolveOptions {
  std::string state_file;
  std::string dir = "s1";
  int steps = 1;
  std::string out;
  int verify_every = 0;
};
int cmd_evolve(const EvolveOptions& opt);

struct DegenerationOptions {
  std::optional<std::string> seeds_file;
  bool oshima_3pt = false;
  std::string out;
  std::string dot;
  std::string expected;
};
int cmd_degenerations(const DegenerationOptions& opt);

struct VerifyOptions {
  std::string state_file;
  std::string suite = "all";
};
int cmd_verify(const VerifyOptions& opt);

}  // namespace isomon::cli
