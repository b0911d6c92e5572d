#include "isomon/catalog.hpp"

namespace isomon::catalog {

const std::vector<std::string>& four_parameter_types() {
  static const std::vector<std::string> v{
      "11,11,11,11,11",   "21,21,111,111",   "31,22,22,1111",    "22,22,22,211",    "211,1111,1111",
      "221,221,11111",    "32,11111,11111",  "222,222,2211",     "33,2211,111111",  "44,2222,22211",
      "44,332,11111111",  "55,3331,22222",   "66,444,2222211",
  };
  return v;
}

const std::vector<std::string>& four_parameter_three_point_types() {
  static const std::vector<std::string> v{
      "211,1111,1111",  "221,221,11111",   "32,11111,11111", "222,222,2211",   "33,2211,111111",
      "44,2222,22211",  "44,332,11111111", "55,3331,22222",  "66,444,2222211",
  };
  return v;
}

const std::vector<std::string>& two_parameter_types() {
  static const std::vector<std::string> v{"11,11,11,11", "111,111,111", "22,1111,1111", "33,222,111111"};
  return v;
}

const std::vector<std::pair<std::string, std::string>>& four_parameter_arrows() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"44,332,11111111", "32,11111,11111"}, {"66,444,2222211", "44,2222,22211"},
      {"32,11111,11111", "211,1111,1111"},   {"33,2211,111111", "221,221,11111"},
      {"33,2211,111111", "211,1111,1111"},   {"44,2222,22211", "222,222,2211"},
      {"211,1111,1111", "11,11,11,11,11"},   {"211,1111,1111", "21,21,111,111"},
      {"221,221,11111", "21,21,111,111"},    {"221,221,11111", "31,22,22,1111"},
      {"222,222,2211", "22,22,22,211"},
  };
  return v;
}

const std::vector<std::pair<std::string, std::string>>& two_parameter_arrows() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"33,222,111111", "22,1111,1111"}, {"22,1111,1111", "111,111,111"}};
  return v;
}

}  // namespace isomon::catalog
