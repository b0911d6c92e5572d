#include "isomon/spectral_calculus.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "isomon/errors.hpp"

namespace isomon {

namespace {

bool rank_then_string_less(const SpectralType& a, const SpectralType& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.str() < b.str();
}

std::vector<Partition> fuchsian_parts(const SpectralType& t) {
  std::vector<Partition> out;
  for (const auto& p : t.points())
    if (!p.irregular()) out.push_back(p.outer);
  return out;
}

const PointType* rank_one_point(const SpectralType& t) {
  for (const auto& p : t.points())
    if (p.irregular()) return &p;
  return nullptr;
}

// Laplace image of [blocks] plus Fuchsian points, or nothing.
std::optional<SpectralType> laplace_core(const std::vector<Partition>& blocks, const std::vector<Partition>& fuchs,
                                         int m) {
  int n = 0;
  for (const auto& f : fuchs) {
    const int ni = m - f.front();
    if (ni < 1) return std::nullopt;
    n += ni;
  }
  if (n == 0) return std::nullopt;
  std::vector<PointType> points;
  for (const auto& mu : blocks) {
    const int mj = partition_size(mu);
    if (n < mj) return std::nullopt;
    Partition g = mu;
    g.push_back(n - mj);
    points.push_back(PointType::fuchsian(std::move(g)));
  }
  std::vector<Partition> inner;
  for (const auto& f : fuchs) inner.emplace_back(f.begin() + 1, f.end());
  inner.erase(std::remove_if(inner.begin(), inner.end(), [](const Partition& p) { return p.empty(); }),
              inner.end());
  if (inner.size() >= 2)
    points.push_back(PointType::rank_one(std::move(inner)));
  else if (inner.size() == 1)
    points.push_back(PointType::fuchsian(std::move(inner.front())));
  return calculus_normal(SpectralType(std::move(points)));
}

// All ways to split the multiset `mu` into consecutive blocks with sums lambda.
void groupings_rec(const Partition& lambda, std::size_t block, std::vector<int> remaining,
                   std::vector<Partition>& acc, std::set<std::vector<Partition>>& out) {
  if (block == lambda.size()) {
    if (remaining.empty()) out.insert(acc);
    return;
  }
  const int target = lambda[block];
  const std::size_t r = remaining.size();
  // Enumerate subsets by bitmask; part counts are small (< 20).
  std::set<Partition> seen;
  for (unsigned long mask = 1; mask < (1ul << r); ++mask) {
    int sum = 0;
    Partition chosen;
    std::vector<int> rest;
    for (std::size_t k = 0; k < r; ++k) {
      if (mask & (1ul << k)) {
        sum += remaining[k];
        chosen.push_back(remaining[k]);
      } else {
        rest.push_back(remaining[k]);
      }
    }
    if (sum != target) continue;
    chosen = normalize_partition(std::move(chosen));
    if (!seen.insert(chosen).second) continue;
    acc.push_back(chosen);
    groupings_rec(lambda, block + 1, std::move(rest), acc, out);
    acc.pop_back();
  }
}

std::set<std::vector<Partition>> groupings(const Partition& lambda, const Partition& mu) {
  std::set<std::vector<Partition>> out;
  if (partition_size(lambda) != partition_size(mu) || mu.size() > 20) return out;
  std::vector<Partition> acc;
  groupings_rec(lambda, 0, mu, acc, out);
  return out;
}

std::vector<TypeMove> laplace_moves(const SpectralType& before, const LaplaceVariant& v) {
  std::vector<TypeMove> moves;
  if (v.infinity_index >= 0) moves.push_back({MoveKind::Moebius, before, before, v.infinity_index, -1});
  moves.push_back({MoveKind::Addition, before, before, -1, -1});
  moves.push_back({MoveKind::Laplace, before, v.result, v.infinity_index, -1});
  return moves;
}

}  // namespace

SpectralType calculus_normal(const SpectralType& t) {
  std::vector<PointType> points;
  for (const auto& p : t.points()) {
    if (!p.irregular()) {
      if (p.outer.size() >= 2) points.push_back(p);
    } else if (p.inner.size() == 1) {
      if (p.inner.front().size() >= 2) points.push_back(PointType::fuchsian(p.inner.front()));
    } else {
      points.push_back(p);
    }
  }
  return SpectralType(std::move(points));
}

int accessory_count(const SpectralType& t) {
  if (!t.fuchsian()) throw Error(ErrorKind::Unsupported, "accessory count needs a Fuchsian type");
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty spectral type");
  const int m = t.rank();
  const int n = static_cast<int>(t.size()) - 1;
  int squares = 0;
  for (const auto& p : t.points())
    for (int part : p.outer) squares += part * part;
  return (n - 1) * m * m - squares + 2;
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Laplace: return "laplace";
    case MoveKind::Confluence: return "confluence";
    case MoveKind::Addition: return "addition";
    case MoveKind::Moebius: return "moebius";
  }
  return "unknown";
}

std::vector<LaplaceVariant> laplace_variants(const SpectralType& input) {
  const SpectralType t = calculus_normal(input);
  std::vector<LaplaceVariant> out;
  if (t.empty()) return out;
  if (t.irregular_count() > 1) return out;
  const int m = t.rank();
  if (const PointType* r1 = rank_one_point(t)) {
    if (auto img = laplace_core(r1->inner, fuchsian_parts(t), m)) out.push_back({-1, *img});
    return out;
  }
  const auto& pts = t.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Partition> others;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (k != i) others.push_back(pts[k].outer);
    if (auto img = laplace_core({pts[i].outer}, others, m)) out.push_back({static_cast<int>(i), *img});
  }
  // A regular point sent to infinity: a trivial point of type (m).
  std::vector<Partition> all;
  for (const auto& p : pts) all.push_back(p.outer);
  if (auto img = laplace_core({Partition{m}}, all, m)) out.push_back({static_cast<int>(pts.size()), *img});
  return out;
}

SpectralType laplace_on_type(const SpectralType& t) {
  const auto variants = laplace_variants(t);
  if (variants.empty()) throw Error(ErrorKind::ShapeMismatch, "no Laplace image for " + t.str());
  const auto best = std::min_element(variants.begin(), variants.end(), [](const auto& a, const auto& b) {
    return rank_then_string_less(a.result, b.result);
  });
  return best->result;
}

bool laplace_strictly_admissible(const SpectralType& input) {
  const SpectralType t = calculus_normal(input);
  const PointType* r1 = rank_one_point(t);
  if (!r1 || t.irregular_count() != 1) return false;
  const int m = t.rank();
  int n = 0;
  for (const auto& f : fuchsian_parts(t)) {
    if (m - f.front() < 1) return false;
    n += m - f.front();
  }
  for (const auto& mu : r1->inner)
    if (n - partition_size(mu) < mu.front()) return false;
  return n > 0;
}

bool refines(const Partition& mu, const Partition& lambda) { return !groupings(lambda, mu).empty(); }

std::vector<SpectralType> confluences_on_type(const SpectralType& input, int i, int j) {
  const SpectralType t = calculus_normal(input);
  const auto& pts = t.points();
  const auto n = static_cast<int>(pts.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw Error(ErrorKind::InvalidArgument, "confluence indices out of range");
  if (pts[i].irregular() || pts[j].irregular())
    throw Error(ErrorKind::InvalidArgument, "confluence needs two Fuchsian points");
  std::vector<PointType> rest;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) rest.push_back(pts[k]);
  std::set<std::string> seen;
  std::vector<SpectralType> out;
  for (const auto& [lambda, mu] : {std::pair{pts[i].outer, pts[j].outer}, std::pair{pts[j].outer, pts[i].outer}}) {
    for (const auto& g : groupings(lambda, mu)) {
      auto points = rest;
      if (g.size() >= 2)
        points.push_back(PointType::rank_one(g));
      else
        points.push_back(PointType::fuchsian(g.front()));
      SpectralType r = calculus_normal(SpectralType(std::move(points)));
      if (seen.insert(r.str()).second) out.push_back(std::move(r));
    }
  }
  if (out.empty())
    throw Error(ErrorKind::NotARefinement,
                "neither " + pts[i].str() + " nor " + pts[j].str() + " refines the other");
  std::sort(out.begin(), out.end(), rank_then_string_less);
  return out;
}

SpectralType confluence_on_type(const SpectralType& t, int i, int j) { return confluences_on_type(t, i, j).front(); }

bool replay(const TypeMove& move) {
  try {
    switch (move.kind) {
      case MoveKind::Addition:
      case MoveKind::Moebius:
        return move.before == move.after;
      case MoveKind::Laplace:
        for (const auto& v : laplace_variants(move.before))
          if (v.infinity_index == move.i && v.result == move.after) return true;
        return false;
      case MoveKind::Confluence:
        for (const auto& r : confluences_on_type(move.before, move.i, move.j))
          if (r == move.after) return true;
        return false;
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

EquivalenceClass equivalence_class(const SpectralType& input, int rank_cap) {
  const SpectralType start = calculus_normal(input);
  struct Node {
    SpectralType type;
    std::string parent;
    std::vector<TypeMove> moves;  // from parent to this node
  };
  std::map<std::string, Node> seen;
  std::deque<std::string> queue;
  seen.emplace(start.str(), Node{start, "", {}});
  queue.push_back(start.str());
  while (!queue.empty()) {
    const std::string key = queue.front();
    queue.pop_front();
    const SpectralType cur = seen.at(key).type;
    for (const auto& v : laplace_variants(cur)) {
      if (v.result.rank() > rank_cap) continue;
      const std::string k = v.result.str();
      if (seen.count(k)) continue;
      seen.emplace(k, Node{v.result, key, laplace_moves(cur, v)});
      queue.push_back(k);
    }
  }

  EquivalenceClass ec;
  for (const auto& [k, node] : seen) ec.members.push_back(node.type);
  std::sort(ec.members.begin(), ec.members.end(), rank_then_string_less);
  const auto fuchsian = std::find_if(ec.members.begin(), ec.members.end(),
                                     [](const SpectralType& s) { return s.fuchsian(); });
  ec.canonical = fuchsian != ec.members.end() ? *fuchsian : ec.members.front();

  std::vector<std::vector<TypeMove>> chain;
  for (std::string k = ec.canonical.str(); k != start.str();) {
    const auto& node = seen.at(k);
    chain.push_back(node.moves);
    k = node.parent;
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    ec.witness.insert(ec.witness.end(), it->begin(), it->end());
  return ec;
}

// Path from the canonical representative to a member, using the parent
// pointers of a search started at the canonical type.
namespace {

std::vector<TypeMove> path_from_canonical(const SpectralType& canonical, const SpectralType& member, int rank_cap) {
  struct Node {
    std::string parent;
    std::vector<TypeMove> moves;
  };
  std::map<std::string, Node> seen;
  std::deque<SpectralType> queue{canonical};
  seen.emplace(canonical.str(), Node{});
  while (!queue.empty() && !seen.count(member.str())) {
    const SpectralType cur = queue.front();
    queue.pop_front();
    for (const auto& v : laplace_variants(cur)) {
      if (v.result.rank() > rank_cap || seen.count(v.result.str())) continue;
      seen.emplace(v.result.str(), Node{cur.str(), laplace_moves(cur, v)});
      queue.push_back(v.result);
    }
  }
  std::vector<std::vector<TypeMove>> chain;
  for (std::string k = member.str(); k != canonical.str();) {
    const auto& node = seen.at(k);
    chain.push_back(node.moves);
    k = node.parent;
  }
  std::vector<TypeMove> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

}  // namespace

bool DegenerationGraph::has_edge(const std::string& from, const std::string& to) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const GraphEdge& e) { return e.from.str() == from && e.to.str() == to; });
}

std::string DegenerationGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph degenerations {\n";
  if (!note.empty()) os << "  // " << note << "\n";
  for (const auto& n : nodes) os << "  \"" << n.str() << "\";\n";
  for (const auto& e : edges) os << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\";\n";
  os << "}\n";
  return os.str();
}

DegenerationGraph degeneration_graph(const std::vector<SpectralType>& seeds, int rank_cap) {
  std::map<std::string, EquivalenceClass> classes;
  auto class_of = [&](const SpectralType& t) -> const EquivalenceClass& {
    EquivalenceClass ec = equivalence_class(t, rank_cap);
    const std::string key = ec.canonical.str();
    auto it = classes.find(key);
    if (it == classes.end()) it = classes.emplace(key, std::move(ec)).first;
    return it->second;
  };

  DegenerationGraph g;
  g.note = "arrows found by confluence of singular points only; HTL-form degenerations are not explored";
  std::map<std::string, SpectralType> nodes;
  std::map<Arrow, GraphEdge> edges;
  std::deque<std::string> queue;
  for (const auto& s : seeds) {
    const auto& ec = class_of(s);
    if (nodes.emplace(ec.canonical.str(), ec.canonical).second) queue.push_back(ec.canonical.str());
  }
  while (!queue.empty()) {
    const std::string key = queue.front();
    queue.pop_front();
    const EquivalenceClass cls = classes.at(key);
    for (const auto& member : cls.members) {
      if (!member.fuchsian()) continue;
      const auto n = static_cast<int>(member.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<SpectralType> results;
          try {
            results = confluences_on_type(member, i, j);
          } catch (const Error&) {
            continue;
          }
          for (const auto& y : results) {
            EquivalenceClass target = equivalence_class(y, rank_cap);
            const std::string to = target.canonical.str();
            if (to == key) continue;
            const Arrow arrow{key, to};
            if (!edges.count(arrow)) {
              GraphEdge e{cls.canonical, target.canonical, path_from_canonical(cls.canonical, member, rank_cap)};
              e.witness.push_back({MoveKind::Confluence, member, y, i, j});
              e.witness.insert(e.witness.end(), target.witness.begin(), target.witness.end());
              edges.emplace(arrow, std::move(e));
            }
            if (!classes.count(to)) classes.emplace(to, target);
            if (nodes.emplace(to, target.canonical).second) queue.push_back(to);
          }
        }
    }
  }
  for (auto& [k, t] : nodes) g.nodes.push_back(t);
  for (auto& [k, e] : edges) g.edges.push_back(std::move(e));
  return g;
}

std::vector<Arrow> reduced_arrows(const DegenerationGraph& g, const std::vector<std::string>& classes) {
  const std::set<std::string> keep(classes.begin(), classes.end());
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& e : g.edges) {
    const auto from = e.from.str(), to = e.to.str();
    if (keep.count(from) && keep.count(to)) adj[from].insert(to);
  }
  // An edge a -> b is redundant when b is reachable from a through another
  // successor of a.
  auto reachable = [&](const std::string& src, const std::string& dst, const std::string& skip_first) {
    std::set<std::string> seen;
    std::deque<std::string> q;
    for (const auto& s : adj[src])
      if (s != skip_first) q.push_back(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      if (x == dst) return true;
      if (!seen.insert(x).second) continue;
      for (const auto& y : adj[x]) q.push_back(y);
    }
    return false;
  };
  std::vector<Arrow> out;
  for (auto& [from, tos] : adj)
    for (const auto& to : tos)
      if (!reachable(from, to, to)) out.emplace_back(from, to);
  std::sort(out.begin(), out.end());
  return out;
}

ArrowComparison compare_arrows(const DegenerationGraph& g, const std::vector<Arrow>& expected) {
  std::vector<Arrow> canon;
  std::set<std::string> classes;
  for (const auto& [a, b] : expected) {
    Arrow c{equivalence_class(SpectralType::parse(a)).canonical.str(),
            equivalence_class(SpectralType::parse(b)).canonical.str()};
    classes.insert(c.first);
    classes.insert(c.second);
    canon.push_back(std::move(c));
  }
  const auto reduced = reduced_arrows(g, {classes.begin(), classes.end()});
  const std::set<Arrow> found(reduced.begin(), reduced.end());
  const std::set<Arrow> want(canon.begin(), canon.end());
  ArrowComparison cmp;
  for (const auto& a : want) (found.count(a) ? cmp.matched : cmp.unmatched).push_back(a);
  for (const auto& a : found)
    if (!want.count(a)) cmp.spurious.push_back(a);
  return cmp;
}

}  // namespace isomon
