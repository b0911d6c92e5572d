#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "isomon/io.hpp"

namespace isomon::cli {

GarnierState read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kInputError, "cannot open state file '" + path + "'"};
  try {
    return io::state_from_json(io::json::parse(in));
  } catch (const io::json::exception& e) {
    throw Failure{kInputError, "state file '" + path + "': " + e.what()};
  } catch (const Error& e) {
    throw Failure{kInputError, "state file '" + path + "': " + e.what()};
  }
}

double tolerance(double fallback) {
  const char* env = std::getenv("ISOMON_TOL");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0) || !std::isfinite(v))
    throw Failure{kInputError, std::string("ISOMON_TOL must be a positive number, got '") + env + "'"};
  return v;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kInputError, "cannot write '" + path + "'"};
  out << text;
}

}  // namespace isomon::cli
