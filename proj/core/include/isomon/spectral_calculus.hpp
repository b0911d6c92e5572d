#pragma once

// Moves on spectral types: Laplace, confluence, and the equivalence classes
// and degeneration graph they generate.
//
// Types are first brought to calculus normal form: Fuchsian points with a
// single part carry no information and are dropped, and a rank-1 point with a
// single block is a Fuchsian point in disguise (its leading term is scalar
// and gauges away).

#include <map>
#include <string>
#include <vector>

#include "isomon/spectral_type.hpp"

namespace isomon {

SpectralType calculus_normal(const SpectralType& t);

/// (n-1) m^2 - sum m_{nu,j}^2 + 2 for a Fuchsian type with n+1 points.
/// Throws Unsupported on irregular point types.
int accessory_count(const SpectralType& t);

enum class MoveKind { Laplace, Confluence, Addition, Moebius };
std::string_view to_string(MoveKind kind);

struct TypeMove {
  MoveKind kind;
  SpectralType before;
  SpectralType after;
  /// Laplace / Moebius on a Fuchsian type: index of the point sent to
  /// infinity. Confluence: the merged pair. Unused entries are -1.
  int i = -1;
  int j = -1;
};

/// Checks that `after` is a legal outcome of applying the move to `before`.
bool replay(const TypeMove& move);

struct LaplaceVariant {
  int infinity_index;  // -1 when the input already has a rank-1 point
  SpectralType result;
};

/// Every Laplace image of t. A type with a rank-1 point has at most one image;
/// a Fuchsian type has one candidate per choice of the point at infinity,
/// plus one for a regular point (index == number of points).
/// Images use the relaxed zero-padding condition n >= m_j.
std::vector<LaplaceVariant> laplace_variants(const SpectralType& t);

/// Laplace image with minimal rank (ties by canonical string).
/// Throws ShapeMismatch when no image exists.
SpectralType laplace_on_type(const SpectralType& t);

/// Whether [lambda, mu] with the given Fuchsian points satisfies the strict
/// padding condition n - m_j >= max(mu_j) for every block.
bool laplace_strictly_admissible(const SpectralType& t);

/// Every way of merging Fuchsian points i, j into one rank-1 point. Either
/// partition may serve as the coarser one. Throws NotARefinement when
/// neither refines the other.
std::vector<SpectralType> confluences_on_type(const SpectralType& t, int i, int j);
/// First element of confluences_on_type.
SpectralType confluence_on_type(const SpectralType& t, int i, int j);

/// Whether mu can be grouped into blocks of sizes lambda.
bool refines(const Partition& mu, const Partition& lambda);

struct EquivalenceClass {
  SpectralType canonical;
  std::vector<SpectralType> members;  // sorted by (rank, string)
  /// Moves leading from the input type to `canonical`.
  std::vector<TypeMove> witness;
};

inline constexpr int kDefaultRankCap = 40;

EquivalenceClass equivalence_class(const SpectralType& t, int rank_cap = kDefaultRankCap);

struct GraphEdge {
  SpectralType from;
  SpectralType to;
  std::vector<TypeMove> witness;
};

struct DegenerationGraph {
  std::vector<SpectralType> nodes;  // canonical representatives, sorted
  std::vector<GraphEdge> edges;     // sorted by (from, to) strings
  std::string note;

  bool has_edge(const std::string& from, const std::string& to) const;
  std::string to_dot() const;
};

DegenerationGraph degeneration_graph(const std::vector<SpectralType>& seeds, int rank_cap = kDefaultRankCap);

using Arrow = std::pair<std::string, std::string>;

/// Transitive reduction of the edges among the given classes.
std::vector<Arrow> reduced_arrows(const DegenerationGraph& g, const std::vector<std::string>& classes);

struct ArrowComparison {
  std::vector<Arrow> matched;
  std::vector<Arrow> unmatched;  // expected but not found by confluence
  std::vector<Arrow> spurious;   // found (after reduction) but not expected
};

ArrowComparison compare_arrows(const DegenerationGraph& g, const std::vector<Arrow>& expected);

}  // namespace isomon
