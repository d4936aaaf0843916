#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domkit/bitset.hpp"
#include "domkit/graph.hpp"

namespace domkit {

enum class Target { domination, independent_domination };
enum class Method { oracle, branch_and_bound };

inline const char* to_string(Target t) {
  return t == Target::domination ? "domination" : "independent-domination";
}
inline const char* to_string(Method m) {
  return m == Method::oracle ? "oracle" : "branch-and-bound";
}

/// Certified optimum for one parameter on one graph. `nodes_explored` is a
/// deterministic work counter: complete candidate subsets tested for the
/// oracle, search-tree nodes entered for branch-and-bound.
struct SolveResult {
  int value = 0;
  VertexSet witness;
  Target target = Target::domination;
  Method method = Method::oracle;
  uint64_t nodes_explored = 0;
};

/// Largest vertex count the enumeration oracle accepts by default. The CLI
/// honors the DOMKIT_ORACLE_CAP environment variable as an override.
inline constexpr int kDefaultOracleCap = 24;

namespace detail {

/// Both parameters are additive over connected components and every
/// tie-break below is by ascending vertex id, so solving components in
/// increasing order of their lowest id and concatenating witnesses is
/// equivalent to solving the whole graph at once.

struct LocalGraph {
  std::vector<int> verts;                   // local index -> global id, ascending
  std::vector<std::vector<int>> adj;        // sorted local adjacency
  std::vector<std::vector<int>> closed;     // sorted local closed neighborhoods
  int delta = 0;
};

inline LocalGraph make_local(const Graph& g, const std::vector<int>& comp) {
  LocalGraph lg;
  lg.verts = comp;
  const int t = int(comp.size());
  lg.adj.resize(size_t(t));
  lg.closed.resize(size_t(t));
  for (int i = 0; i < t; ++i) {
    for (int w : g.neighbors(comp[size_t(i)])) {
      auto it = std::lower_bound(comp.begin(), comp.end(), w);
      lg.adj[size_t(i)].push_back(int(it - comp.begin()));
    }
    lg.delta = std::max(lg.delta, int(lg.adj[size_t(i)].size()));
    lg.closed[size_t(i)] = lg.adj[size_t(i)];
    lg.closed[size_t(i)].insert(
        std::lower_bound(lg.closed[size_t(i)].begin(), lg.closed[size_t(i)].end(), i), i);
  }
  return lg;
}

// ---- enumeration oracle ----------------------------------------------------

struct OracleSearch {
  int t = 0;
  int k = 0;
  uint64_t full = 0;
  std::vector<uint64_t> closed;
  std::vector<uint64_t> adj;
  bool independent_only = false;
  std::vector<int> chosen;
  uint64_t steps = 0;

  // Enumerates k-subsets in lexicographic order; the first subset that
  // passes is therefore the lexicographically least witness of size k.
  // For independent domination, prefixes that already contain an adjacent
  // pair are skipped: no completion of such a prefix is a candidate.
  bool rec(int pos, int start, uint64_t cover, uint64_t members) {
    if (pos == k) {
      ++steps;
      return cover == full;
    }
    for (int v = start; v <= t - (k - pos); ++v) {
      if (independent_only && (adj[size_t(v)] & members)) continue;
      chosen[size_t(pos)] = v;
      if (rec(pos + 1, v + 1, cover | closed[size_t(v)], members | (1ULL << v))) return true;
    }
    return false;
  }
};

inline void oracle_component(const Graph& g, const std::vector<int>& comp, bool independent_only,
                             SolveResult& acc) {
  const int t = int(comp.size());
  if (t > 64)
    throw std::invalid_argument("oracle component limit is 64 vertices, got " +
                                std::to_string(t));
  LocalGraph lg = make_local(g, comp);

  OracleSearch search;
  search.t = t;
  search.full = t == 64 ? ~0ULL : (1ULL << t) - 1ULL;
  search.independent_only = independent_only;
  search.closed.assign(size_t(t), 0);
  search.adj.assign(size_t(t), 0);
  for (int v = 0; v < t; ++v) {
    for (int w : lg.adj[size_t(v)]) search.adj[size_t(v)] |= 1ULL << w;
    search.closed[size_t(v)] = search.adj[size_t(v)] | (1ULL << v);
  }

  for (int k = 0; k <= t; ++k) {
    search.k = k;
    search.chosen.assign(size_t(k), 0);
    if (search.rec(0, 0, 0, 0)) {
      acc.value += k;
      acc.nodes_explored += search.steps;
      std::vector<int> wit = acc.witness.members();
      for (int local : search.chosen) wit.push_back(comp[size_t(local)]);
      acc.witness = VertexSet(std::move(wit));
      return;
    }
  }
  throw std::logic_error("subset enumeration exhausted without a solution");
}

// ---- branch and bound ------------------------------------------------------

struct BnbSearch {
  int t = 0;
  int delta = 0;
  bool independent_only = false;
  std::vector<DynamicBitset> closed;
  std::vector<DynamicBitset> adj;
  const std::vector<std::vector<int>>* closed_list = nullptr;
  DynamicBitset all;
  DynamicBitset members;
  std::vector<int> partial;
  std::vector<int> best_set;
  int best_value = 0;
  uint64_t nodes = 0;

  void dfs(const DynamicBitset& dominated) {
    ++nodes;
    const int undominated = t - dominated.count();
    if (undominated == 0) {
      if (int(partial.size()) < best_value) {
        best_value = int(partial.size());
        best_set = partial;
      }
      return;
    }
    const int lower = (undominated + delta) / (delta + 1);
    if (int(partial.size()) + lower >= best_value) return;

    const DynamicBitset und = all.and_not(dominated);
    int branch = -1;
    if (independent_only) {
      // Lowest-id undominated vertex.
      branch = und.find_first();
    } else {
      // Undominated vertex with the fewest undominated neighbors,
      // ties broken by lowest id.
      int best_res = t + 1;
      und.for_each_set([&](int u) {
        const int res = (adj[size_t(u)] & und).count();
        if (res < best_res) {
          best_res = res;
          branch = u;
        }
      });
    }

    for (int u : (*closed_list)[size_t(branch)]) {
      if (independent_only && adj[size_t(u)].intersects(members)) continue;
      partial.push_back(u);
      members.set(u);
      dfs(dominated | closed[size_t(u)]);
      members.reset(u);
      partial.pop_back();
    }
  }
};

/// Greedy max-coverage dominating set; for independent domination the
/// candidate pool is exactly the undominated vertices, which keeps the
/// result independent. Supplies the initial incumbent.
inline std::vector<int> greedy_incumbent(const BnbSearch& s) {
  DynamicBitset undominated = s.all;
  std::vector<int> set;
  while (undominated.any()) {
    int best = -1;
    int best_cover = -1;
    auto consider = [&](int u) {
      const int cover = (s.closed[size_t(u)] & undominated).count();
      if (cover > best_cover) {
        best_cover = cover;
        best = u;
      }
    };
    if (s.independent_only) {
      undominated.for_each_set(consider);
    } else {
      for (int u = 0; u < s.t; ++u) consider(u);
    }
    set.push_back(best);
    undominated = undominated.and_not(s.closed[size_t(best)]);
  }
  return set;
}

inline void bnb_component(const Graph& g, const std::vector<int>& comp, bool independent_only,
                          SolveResult& acc) {
  const int t = int(comp.size());
  LocalGraph lg = make_local(g, comp);

  BnbSearch search;
  search.t = t;
  search.delta = lg.delta;
  search.independent_only = independent_only;
  search.closed.assign(size_t(t), DynamicBitset(t));
  search.adj.assign(size_t(t), DynamicBitset(t));
  for (int v = 0; v < t; ++v)
    for (int w : lg.adj[size_t(v)]) {
      search.adj[size_t(v)].set(w);
      search.closed[size_t(v)].set(w);
    }
  for (int v = 0; v < t; ++v) search.closed[size_t(v)].set(v);
  search.closed_list = &lg.closed;
  search.all = DynamicBitset::all_set(t);
  search.members = DynamicBitset(t);

  search.best_set = greedy_incumbent(search);
  search.best_value = int(search.best_set.size());
  search.dfs(DynamicBitset(t));

  acc.value += search.best_value;
  acc.nodes_explored += search.nodes;
  std::vector<int> wit = acc.witness.members();
  for (int local : search.best_set) wit.push_back(comp[size_t(local)]);
  acc.witness = VertexSet(std::move(wit));
}

inline SolveResult solve(const Graph& g, Target target, Method method, int oracle_cap) {
  if (method == Method::oracle && g.vertex_count() > oracle_cap)
    throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, oracle cap is " + std::to_string(oracle_cap));
  SolveResult r;
  r.target = target;
  r.method = method;
  const bool independent_only = target == Target::independent_domination;
  for (const auto& comp : connected_components(g)) {
    if (method == Method::oracle)
      oracle_component(g, comp, independent_only, r);
    else
      bnb_component(g, comp, independent_only, r);
  }
  return r;
}

}  // namespace detail

/// Domination number by exhaustive enumeration: subsets are tried in
/// increasing cardinality and lexicographic order, so the witness is the
/// lexicographically least minimum dominating set.
inline SolveResult gamma_oracle(const Graph& g, int oracle_cap = kDefaultOracleCap) {
  return detail::solve(g, Target::domination, Method::oracle, oracle_cap);
}

/// Independent domination number by the same enumeration; the witness is the
/// lexicographically least minimum independent dominating set.
inline SolveResult i_oracle(const Graph& g, int oracle_cap = kDefaultOracleCap) {
  return detail::solve(g, Target::independent_domination, Method::oracle, oracle_cap);
}

/// Domination number by branch-and-bound. Branches on an undominated vertex
/// with the fewest undominated neighbors (ties to the lowest id); children
/// add one vertex of its closed neighborhood in ascending id order; a node is
/// pruned when |partial| + ceil(undominated / (delta + 1)) cannot beat the
/// incumbent. The initial incumbent is the greedy max-coverage set.
inline SolveResult gamma_bnb(const Graph& g) {
  return detail::solve(g, Target::domination, Method::branch_and_bound, 0);
}

/// Independent domination number by branch-and-bound. Branches on the
/// lowest-id undominated vertex; children are the closed-neighborhood
/// vertices not adjacent to the partial set, in ascending id order.
inline SolveResult i_bnb(const Graph& g) {
  return detail::solve(g, Target::independent_domination, Method::branch_and_bound, 0);
}

/// Oracle when the graph fits under the cap, branch-and-bound otherwise.
inline SolveResult solve_gamma(const Graph& g, int oracle_cap = kDefaultOracleCap) {
  return g.vertex_count() <= oracle_cap ? gamma_oracle(g, oracle_cap) : gamma_bnb(g);
}

inline SolveResult solve_i(const Graph& g, int oracle_cap = kDefaultOracleCap) {
  return g.vertex_count() <= oracle_cap ? i_oracle(g, oracle_cap) : i_bnb(g);
}

}  // namespace domkit
