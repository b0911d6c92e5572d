#pragma once

// Spectral types: multiplicity data of a Riemann scheme.
//
// String grammar (canonical form is what str() produces):
//   type      := point ("," point)*
//   fuchsian  := part+            part is a digit 1-9 or "(NN)" for NN >= 10
//   rank-1    := "(" fuchsian ")" "(" fuchsian ")" ...   (two or more groups)
// A token made only of parenthesized groups is read as a rank-1 point when it
// has at least two groups and every group parses as a partition; otherwise it
// is a Fuchsian partition with multi-digit parts, e.g. "(10)1".
//
// Canonical order: rank-1 points first; Fuchsian points by ascending number
// of parts, ties broken by descending lexicographic order of the parts
// ("22,22,22,211", "31,22,22,1111"). Inside a rank-1 point the blocks are
// ordered by descending block size, then by the same Fuchsian key.

#include <string>
#include <string_view>
#include <vector>

namespace isomon {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

/// Sorts parts into weakly decreasing order and drops zeros.
Partition normalize_partition(Partition p);
int partition_size(const Partition& p);
std::string format_partition(const Partition& p);

/// Fuchsian key: ascending number of parts, then descending parts.
bool fuchsian_key_less(const Partition& a, const Partition& b);

struct PointType {
  /// Fuchsian point: the partition itself. Rank-1 point: block sizes
  /// (the outer partition lambda).
  Partition outer;
  /// Rank-1 point: one partition per block, inner[j] sums to outer[j].
  /// Empty for a Fuchsian point.
  std::vector<Partition> inner;

  static PointType fuchsian(Partition p);
  static PointType rank_one(std::vector<Partition> blocks);

  bool irregular() const { return !inner.empty(); }
  int rank() const { return partition_size(outer); }
  /// The arranged partition mu of a rank-1 point (all inner parts).
  Partition refined() const;
  std::string str() const;

  friend bool operator==(const PointType&, const PointType&) = default;
};

/// Total order used for canonical point ordering.
bool point_type_less(const PointType& a, const PointType& b);

class SpectralType {
 public:
  SpectralType() = default;
  /// Validates (equal ranks, inner sums) and sorts into canonical order.
  explicit SpectralType(std::vector<PointType> points);

  static SpectralType parse(std::string_view text);

  const std::vector<PointType>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  int rank() const { return points_.empty() ? 0 : points_.front().rank(); }
  int irregular_count() const;
  bool fuchsian() const { return irregular_count() == 0; }
  std::string str() const;

  friend bool operator==(const SpectralType& a, const SpectralType& b) { return a.points_ == b.points_; }
  friend bool operator<(const SpectralType& a, const SpectralType& b) { return a.str() < b.str(); }

 private:
  std::vector<PointType> points_;
};

}  // namespace isomon
