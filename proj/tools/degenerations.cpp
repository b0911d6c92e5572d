#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "isomon/catalog.hpp"
#include "isomon/io.hpp"
#include "isomon/spectral_calculus.hpp"

namespace isomon::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kInputError, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Non-empty lines with '#' comments removed.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

SpectralType parse_type(const io::json& j, const std::string& where) {
  try {
    return io::spectral_type_from_json(j);
  } catch (const Error& e) {
    throw Failure{kInputError, where + ": " + e.what()};
  }
}

// A JSON array of types, or one type per line.
std::vector<SpectralType> read_seeds(const std::string& path) {
  const std::string text = read_file(path);
  const std::string body = trim(text);
  std::vector<SpectralType> seeds;
  if (!body.empty() && body.front() == '[') {
    io::json j;
    try {
      j = io::json::parse(body);
    } catch (const io::json::exception& e) {
      throw Failure{kInputError, path + ": " + e.what()};
    }
    for (std::size_t i = 0; i < j.size(); ++i) seeds.push_back(parse_type(j[i], path + " entry " + std::to_string(i + 1)));
    return seeds;
  }
  int n = 0;
  for (const auto& line : content_lines(text)) seeds.push_back(parse_type(io::json(line), path + " line " + std::to_string(++n)));
  return seeds;
}

std::vector<Arrow> read_expected(const std::string& path) {
  std::vector<Arrow> out;
  for (const auto& line : content_lines(read_file(path))) {
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Failure{kInputError, path + ": expected 'from -> to', got '" + line + "'"};
    const auto from = parse_type(io::json(trim(line.substr(0, arrow))), path);
    const auto to = parse_type(io::json(trim(line.substr(arrow + 2))), path);
    out.emplace_back(calculus_normal(from).str(), calculus_normal(to).str());
  }
  return out;
}

}  // namespace

int cmd_degenerations(const DegenerationOptions& opt) {
  std::vector<SpectralType> seeds;
  if (opt.oshima_3pt) {
    for (const auto& s : catalog::four_parameter_three_point_types()) seeds.push_back(SpectralType::parse(s));
  } else {
    seeds = read_seeds(*opt.seeds_file);
  }
  std::vector<Arrow> expected;
  if (!opt.expected.empty()) expected = read_expected(opt.expected);

  const DegenerationGraph g = degeneration_graph(seeds);
  write_output(opt.out, io::dump(io::to_json(g)) + "\n");
  if (!opt.dot.empty()) write_output(opt.dot, g.to_dot());

  if (opt.expected.empty()) return kOk;
  const auto cmp = compare_arrows(g, expected);
  // Keep stdout clean for the JSON when it goes there.
  std::ostream& report = opt.out.empty() || opt.out == "-" ? std::cerr : std::cout;
  for (const auto& [from, to] : cmp.unmatched) report << "UNMATCHED " << from << " -> " << to << "\n";
  for (const auto& [from, to] : cmp.spurious) report << "SPURIOUS " << from << " -> " << to << "\n";
  report << "matched " << cmp.matched.size() << "/" << expected.size() << ", unmatched " << cmp.unmatched.size()
         << ", spurious " << cmp.spurious.size() << "\n";
  return cmp.unmatched.empty() ? kOk : kVerificationFailed;
}

}  // namespace isomon::cli
