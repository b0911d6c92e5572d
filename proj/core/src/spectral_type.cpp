#include "isomon/spectral_type.hpp"

#include <algorithm>
#include <numeric>

#include "isomon/errors.hpp"

namespace isomon {

Partition normalize_partition(Partition p) {
  p.erase(std::remove_if(p.begin(), p.end(), [](int x) { return x <= 0; }), p.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string format_partition(const Partition& p) {
  std::string out;
  for (int part : p) {
    if (part < 10)
      out += static_cast<char>('0' + part);
    else
      out += "(" + std::to_string(part) + ")";
  }
  return out;
}

bool fuchsian_key_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PointType PointType::fuchsian(Partition p) {
  p = normalize_partition(std::move(p));
  if (p.empty()) throw Error(ErrorKind::InvalidArgument, "empty partition");
  return PointType{std::move(p), {}};
}

PointType PointType::rank_one(std::vector<Partition> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidArgument, "rank-1 point without blocks");
  for (auto& b : blocks) {
    b = normalize_partition(std::move(b));
    if (b.empty()) throw Error(ErrorKind::InvalidArgument, "empty inner partition");
  }
  std::sort(blocks.begin(), blocks.end(), [](const Partition& a, const Partition& b) {
    const int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa > sb;
    return fuchsian_key_less(a, b);
  });
  PointType pt;
  for (const auto& b : blocks) pt.outer.push_back(partition_size(b));
  pt.inner = std::move(blocks);
  return pt;
}

Partition PointType::refined() const {
  if (!irregular()) return outer;
  Partition all;
  for (const auto& b : inner) all.insert(all.end(), b.begin(), b.end());
  return normalize_partition(std::move(all));
}

std::string PointType::str() const {
  if (!irregular()) return format_partition(outer);
  std::string out;
  for (const auto& b : inner) out += "(" + format_partition(b) + ")";
  return out;
}

bool point_type_less(const PointType& a, const PointType& b) {
  if (a.irregular() != b.irregular()) return a.irregular();
  if (!a.irregular()) return fuchsian_key_less(a.outer, b.outer);
  if (a.outer != b.outer) return fuchsian_key_less(a.outer, b.outer);
  return std::lexicographical_compare(
      a.inner.begin(), a.inner.end(), b.inner.begin(), b.inner.end(),
      [](const Partition& x, const Partition& y) { return fuchsian_key_less(x, y); });
}

SpectralType::SpectralType(std::vector<PointType> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const int m = points_.front().rank();
  for (const auto& p : points_) {
    if (p.rank() != m)
      throw Error(ErrorKind::InvalidArgument,
                  "point type " + p.str() + " has rank " + std::to_string(p.rank()) +
                      ", expected " + std::to_string(m));
    for (std::size_t j = 0; j < p.inner.size(); ++j)
      if (partition_size(p.inner[j]) != p.outer[j])
        throw Error(ErrorKind::InvalidArgument, "inner partition does not sum to its block");
  }
  std::stable_sort(points_.begin(), points_.end(), point_type_less);
}

int SpectralType::irregular_count() const {
  return static_cast<int>(
      std::count_if(points_.begin(), points_.end(), [](const PointType& p) { return p.irregular(); }));
}

std::string SpectralType::str() const {
  std::string out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ",";
    out += points_[i].str();
  }
  return out;
}

namespace {

// Parses a Fuchsian partition string; returns false on any malformed input.
bool parse_partition(std::string_view s, Partition& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c >= '1' && c <= '9') {
      out.push_back(c - '0');
      ++i;
    } else if (c == '(') {
      const auto close = s.find(')', i);
      if (close == std::string_view::npos || close == i + 1) return false;
      int value = 0;
      for (std::size_t k = i + 1; k < close; ++k) {
        if (s[k] < '0' || s[k] > '9') return false;
        value = value * 10 + (s[k] - '0');
        if (value > 1'000'000) return false;
      }
      if (value <= 0 || s[i + 1] == '0') return false;
      out.push_back(value);
      i = close + 1;
    } else {
      return false;
    }
  }
  return !out.empty();
}

// Splits "(...)(...)" into group contents honoring nested parentheses.
bool split_groups(std::string_view s, std::vector<std::string_view>& groups) {
  groups.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') return false;
    int depth = 0;
    std::size_t k = i;
    for (; k < s.size(); ++k) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')' && --depth == 0) break;
    }
    if (k == s.size()) return false;
    groups.push_back(s.substr(i + 1, k - i - 1));
    i = k + 1;
  }
  return !groups.empty();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

PointType parse_point(std::string_view token) {
  token = trim(token);
  std::vector<std::string_view> groups;
  if (split_groups(token, groups) && groups.size() >= 2) {
    std::vector<Partition> blocks;
    bool ok = true;
    for (auto g : groups) {
      Partition p;
      if (!parse_partition(g, p)) {
        ok = false;
        break;
      }
      blocks.push_back(std::move(p));
    }
    if (ok) return PointType::rank_one(std::move(blocks));
  }
  Partition p;
  if (!parse_partition(token, p))
    throw Error(ErrorKind::InvalidArgument, "cannot parse point type '" + std::string(token) + "'");
  return PointType::fuchsian(std::move(p));
}

}  // namespace

SpectralType SpectralType::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty spectral type");
  std::vector<PointType> points;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      points.push_back(parse_point(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return SpectralType(std::move(points));
}

}  // namespace isomon
