#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domkit/graph.hpp"
#include "domkit/prng.hpp"

namespace domkit {

/// Complete bipartite graph K_{m,m}: part A is 0..m-1, part B is m..2m-1.
inline Graph complete_bipartite(int m) {
  if (m < 1) throw std::invalid_argument("complete_bipartite requires m >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(m) * size_t(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) edges.emplace_back(a, m + b);
  return build_graph(2 * m, edges);
}

/// Balanced double star: centers 0 and 1 are adjacent, each carries s leaves.
/// Leaves of center 0 are 2..s+1, leaves of center 1 are s+2..2s+1.
inline Graph double_star(int s) {
  if (s < 1) throw std::invalid_argument("double_star requires s >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  for (int p = 0; p < s; ++p) {
    edges.emplace_back(0, 2 + p);
    edges.emplace_back(1, 2 + s + p);
  }
  return build_graph(2 * s + 2, edges);
}

/// Cycle 0-1-...-(n-1)-0.
inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(n));
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

/// Odd cycle C_{2k+1} on vertices 0..2k, plus s pendant leaves on every cycle
/// vertex; pendant p of cycle vertex j has id 2k+1 + j*s + p. This family
/// shows the halved-degree bound fails for non-bipartite graphs once
/// s > 2k+2: gamma = 2k+1 and i = k + (k+1)s while delta = s+2.
inline Graph odd_cycle_corona(int k, int s) {
  if (k < 1) throw std::invalid_argument("odd_cycle_corona requires k >= 1");
  if (s < 1) throw std::invalid_argument("odd_cycle_corona requires s >= 1");
  const int cycle_len = 2 * k + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(cycle_len) * size_t(s + 1));
  for (int j = 0; j < cycle_len; ++j) edges.emplace_back(j, (j + 1) % cycle_len);
  for (int j = 0; j < cycle_len; ++j)
    for (int p = 0; p < s; ++p) edges.emplace_back(j, cycle_len + j * s + p);
  return build_graph(cycle_len * (s + 1), edges);
}

/// Random bipartite graph: part A is 0..na-1, part B is na..na+nb-1, and
/// every cross pair (a, b) is drawn once in row-major order (a outer, b
/// inner) from SplitMix64(seed), included when uniform01() < edge_prob.
/// Identical arguments give identical graphs on every platform.
inline Graph random_bipartite(int na, int nb, double edge_prob, uint64_t seed) {
  if (na < 1 || nb < 1) throw std::invalid_argument("random_bipartite requires na, nb >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("edge_prob must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      if (rng.uniform01() < edge_prob) edges.emplace_back(a, na + b);
  return build_graph(na + nb, edges);
}

enum class FamilyTag { complete_bipartite, double_star, cycle, odd_cycle_corona, random_bipartite };

struct FamilyParams {
  FamilyTag tag = FamilyTag::cycle;
  int m = 0;
  int s = 0;
  int k = 0;
  int n = 0;
  int na = 0;
  int nb = 0;
  double edge_prob = 0.0;
  uint64_t seed = 0;
};

struct ClosedForms {
  long long gamma = 0;
  long long i = 0;
  long long delta = 0;
};

/// Known exact values, where the family admits them:
///   complete_bipartite, m >= 2:  gamma = 2, i = m,          delta = m
///   double_star,        s >= 1:  gamma = 2, i = s + 1,      delta = s + 1
///   odd_cycle_corona:             gamma = 2k+1, i = k+(k+1)s, delta = s + 2
/// Everything else returns nullopt.
inline std::optional<ClosedForms> family_closed_forms(const FamilyParams& p) {
  switch (p.tag) {
    case FamilyTag::complete_bipartite:
      if (p.m >= 2) return ClosedForms{2, p.m, p.m};
      return std::nullopt;
    case FamilyTag::double_star:
      if (p.s >= 1) return ClosedForms{2, p.s + 1, p.s + 1};
      return std::nullopt;
    case FamilyTag::odd_cycle_corona:
      if (p.k >= 1 && p.s >= 1)
        return ClosedForms{2LL * p.k + 1, p.k + (p.k + 1LL) * p.s, p.s + 2LL};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace domkit
