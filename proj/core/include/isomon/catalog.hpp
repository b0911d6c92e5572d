#pragma once

// Reference spectral-type data: the Fuchsian types with four accessory
// parameters, those with two, and the expected degeneration arrows among the
// four-parameter classes.

#include <string>
#include <utility>
#include <vector>

namespace isomon::catalog {

/// All 13 Fuchsian types with four accessory parameters.
const std::vector<std::string>& four_parameter_types();
/// The nine of them with three singular points.
const std::vector<std::string>& four_parameter_three_point_types();
/// The four Fuchsian types with two accessory parameters.
const std::vector<std::string>& two_parameter_types();
/// Expected arrows [from] -> [to] among the four-parameter classes.
const std::vector<std::pair<std::string, std::string>>& four_parameter_arrows();
/// Expected chain among the two-parameter three-point classes.
const std::vector<std::pair<std::string, std::string>>& two_parameter_arrows();

}  // namespace isomon::catalog
