#pragma once

#include <algorithm>
#include <variant>
#include <vector>

#include "domkit/graph.hpp"

namespace domkit {

enum class Part : unsigned char { a, b };

/// A 2-coloring of the vertices such that every edge joins part A to part B.
struct Bipartition {
  std::vector<Part> color;
  VertexSet part_a;
  VertexSet part_b;
};

/// Witness that a graph is not bipartite: a cyclic vertex sequence of odd
/// length in which consecutive entries (and the last/first pair) are adjacent.
struct OddCycle {
  std::vector<int> vertices;
};

/// Canonical BFS 2-coloring. Components are visited in increasing order of
/// their lowest vertex id; the lowest id of each component goes to part A and
/// neighbors are scanned in ascending order, so the result is unique for a
/// given graph. Returns an OddCycle instead when no 2-coloring exists.
inline std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<signed char> color(size_t(n), -1);
  std::vector<int> parent(size_t(n), -1);
  std::vector<int> depth(size_t(n), 0);
  std::vector<int> queue;

  for (int start = 0; start < n; ++start) {
    if (color[size_t(start)] != -1) continue;
    color[size_t(start)] = 0;
    queue.assign(1, start);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (color[size_t(w)] == -1) {
          color[size_t(w)] = char(1 - color[size_t(u)]);
          parent[size_t(w)] = u;
          depth[size_t(w)] = depth[size_t(u)] + 1;
          queue.push_back(w);
        } else if (color[size_t(w)] == color[size_t(u)]) {
          // Conflict edge (u, w) closes an odd cycle through the BFS tree.
          // Both endpoints sit at equal depth, so walk the parent chains in
          // lockstep until they meet.
          std::vector<int> chain_u{u};
          std::vector<int> chain_w{w};
          int cu = u, cw = w;
          while (cu != cw) {
            cu = parent[size_t(cu)];
            cw = parent[size_t(cw)];
            chain_u.push_back(cu);
            chain_w.push_back(cw);
          }
          chain_w.pop_back();  // drop the meeting vertex, kept in chain_u
          OddCycle cycle;
          cycle.vertices = std::move(chain_u);
          for (auto it = chain_w.rbegin(); it != chain_w.rend(); ++it)
            cycle.vertices.push_back(*it);
          return cycle;
        }
      }
    }
  }

  Bipartition parts;
  parts.color.resize(size_t(n));
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) {
    parts.color[size_t(v)] = color[size_t(v)] == 0 ? Part::a : Part::b;
    (color[size_t(v)] == 0 ? a : b).push_back(v);
  }
  parts.part_a = VertexSet(std::move(a));
  parts.part_b = VertexSet(std::move(b));
  return parts;
}

inline bool is_bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(bipartition(g));
}

}  // namespace domkit
