#pragma once

#include <random>
#include <vector>

#include "isomon/spectral_calculus.hpp"

namespace isomon::testing {

/// Random rank-1 types in calculus normal form satisfying the strict padding
/// condition, whose minimal Laplace image has (irregular_image) or lacks a
/// rank-1 point.
inline std::vector<SpectralType> random_admissible(std::mt19937_64& gen, int count, bool irregular_image) {
  const auto random_partition = [&](int n) {
    Partition p;
    while (n > 0) {
      const int part = std::uniform_int_distribution<int>(1, n)(gen);
      p.push_back(part);
      n -= part;
    }
    return normalize_partition(p);
  };
  std::vector<SpectralType> out;
  for (int trial = 0; static_cast<int>(out.size()) < count && trial < 200000; ++trial) {
    const int m = std::uniform_int_distribution<int>(2, 6)(gen);
    const Partition outer = random_partition(m);
    std::vector<Partition> inner;
    for (int part : outer) inner.push_back(random_partition(part));
    std::vector<PointType> pts{PointType::rank_one(inner)};
    const int extra = std::uniform_int_distribution<int>(1, 3)(gen);
    for (int e = 0; e < extra; ++e) pts.push_back(PointType::fuchsian(random_partition(m)));
    const SpectralType t(pts);
    if (calculus_normal(t) != t || !laplace_strictly_admissible(t)) continue;
    if ((laplace_on_type(t).irregular_count() == 1) != irregular_image) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace isomon::testing
