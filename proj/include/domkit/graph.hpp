#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domkit/bitset.hpp"

namespace domkit {

/// Set of vertex ids, kept sorted and duplicate-free. The common currency
/// between solvers, the transform, and the CLI.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet from_bits(const DynamicBitset& bits) {
    std::vector<int> m;
    m.reserve(size_t(bits.count()));
    bits.for_each_set([&](int v) { m.push_back(v); });
    VertexSet s;
    s.members_ = std::move(m);
    return s;
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return int(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  DynamicBitset to_bits(int bit_count) const {
    DynamicBitset b(bit_count);
    for (int v : members_) b.set(v);
    return b;
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

private:
  std::vector<int> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> r;
  r.reserve(a.members().size() + b.members().size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return VertexSet(std::move(r));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return VertexSet(std::move(r));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return VertexSet(std::move(r));
}

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Keeps both sorted adjacency lists (for ordered iteration) and adjacency
/// bitsets (for set-algebra queries).
class Graph {
public:
  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adj_[size_t(v)]; }
  const DynamicBitset& neighbor_bits(int v) const { return adj_bits_[size_t(v)]; }
  int degree(int v) const { return int(adj_[size_t(v)].size()); }
  bool has_edge(int u, int v) const { return adj_bits_[size_t(u)].test(v); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

private:
  Graph() = default;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<DynamicBitset> adj_bits_;
};

/// Builds a graph from an edge list. Duplicate edges collapse silently;
/// self-loops and out-of-range endpoints are errors.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.adj_.resize(size_t(n));
  g.adj_bits_.assign(size_t(n), DynamicBitset(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                  " out of range for " + std::to_string(n) + " vertices");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.adj_bits_[size_t(u)].test(v)) continue;
    g.adj_bits_[size_t(u)].set(v);
    g.adj_bits_[size_t(v)].set(u);
    g.adj_[size_t(u)].push_back(v);
    g.adj_[size_t(v)].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

inline void validate_vertex_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.members().front() < 0 || s.members().back() >= g.vertex_count()))
    throw std::invalid_argument("vertex set contains an id outside the graph");
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// Union of open neighborhoods N(v) over v in s. Members of s appear in the
/// result only when some other member is adjacent to them.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  DynamicBitset acc(g.vertex_count());
  for (int v : s) acc |= g.neighbor_bits(v);
  return VertexSet::from_bits(acc);
}

/// True when every vertex is in s or adjacent to a member of s.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  DynamicBitset covered = s.to_bits(g.vertex_count());
  for (int v : s) covered |= g.neighbor_bits(v);
  return covered.all();
}

/// True when no two members of s are adjacent.
inline bool is_independent(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  DynamicBitset bits = s.to_bits(g.vertex_count());
  for (int v : s)
    if (g.neighbor_bits(v).intersects(bits)) return false;
  return true;
}

/// Connected components, ordered by their lowest vertex id; vertices within
/// a component are sorted ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(size_t(n), 0);
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (seen[size_t(start)]) continue;
    queue.assign(1, start);
    seen[size_t(start)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace domkit
