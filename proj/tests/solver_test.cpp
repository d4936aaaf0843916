#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "test_support.hpp"

using namespace domkit;
using testsupport::brute_minimum;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

void check_witness(const Graph& g, const SolveResult& r) {
  REQUIRE(r.witness.size() == r.value);
  REQUIRE(is_dominating(g, r.witness));
  if (r.target == Target::independent_domination) REQUIRE(is_independent(g, r.witness));
}

std::vector<Graph> mixed_instances() {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 9; ++n) graphs.push_back(cycle_graph(n));
  for (int m = 1; m <= 4; ++m) graphs.push_back(complete_bipartite(m));
  for (int s = 1; s <= 4; ++s) graphs.push_back(double_star(s));
  graphs.push_back(odd_cycle_corona(1, 1));
  graphs.push_back(odd_cycle_corona(1, 3));
  graphs.push_back(odd_cycle_corona(2, 1));
  SplitMix64 seeds(0x5071e5ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + int(seeds.below(11));
    const double p = 0.15 + 0.15 * double(seeds.below(5));
    graphs.push_back(testsupport::general_random(n, p, seeds.next()));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int na = 2 + int(seeds.below(6));
    const int nb = 2 + int(seeds.below(6));
    const double p = 0.2 + 0.2 * double(seeds.below(4));
    graphs.push_back(random_bipartite(na, nb, p, seeds.next()));
  }
  return graphs;
}

}  // namespace

TEST_CASE("oracle matches subset-scan reference on a 4-cycle", "[solvers]") {
  Graph c4 = cycle_graph(4);
  auto ref_dom = brute_minimum(c4, false);
  REQUIRE(ref_dom.value == 2);  // no single vertex covers the opposite corner

  SolveResult gamma = gamma_oracle(c4);
  REQUIRE(gamma.value == 2);
  REQUIRE(gamma.witness.members() == ref_dom.witness);
  REQUIRE(gamma.witness == VertexSet({0, 1}));
  REQUIRE(gamma.method == Method::oracle);
  REQUIRE(gamma.target == Target::domination);

  auto ref_ind = brute_minimum(c4, true);
  SolveResult ind = i_oracle(c4);
  REQUIRE(ind.value == 2);
  REQUIRE(ind.witness.members() == ref_ind.witness);
  REQUIRE(ind.witness == VertexSet({0, 2}));
  REQUIRE(ind.target == Target::independent_domination);
}

TEST_CASE("oracle witnesses on complete bipartite 3+3", "[solvers]") {
  Graph g = complete_bipartite(3);
  SolveResult gamma = gamma_oracle(g);
  REQUIRE(gamma.value == 2);
  REQUIRE(gamma.witness == VertexSet({0, 3}));  // one endpoint per part

  SolveResult ind = i_oracle(g);
  REQUIRE(ind.value == 3);
  REQUIRE(ind.witness == VertexSet({0, 1, 2}));  // a whole part

  auto ref = brute_minimum(g, true);
  REQUIRE(ref.value == 3);
  REQUIRE(ind.witness.members() == ref.witness);
}

TEST_CASE("oracle on the smallest corona", "[solvers]") {
  // Triangle with one pendant per vertex: gamma = 3, i = 3.
  Graph g = odd_cycle_corona(1, 1);
  auto ref_dom = brute_minimum(g, false);
  auto ref_ind = brute_minimum(g, true);
  REQUIRE(ref_dom.value == 3);
  REQUIRE(ref_ind.value == 3);

  SolveResult gamma = gamma_oracle(g);
  SolveResult ind = i_oracle(g);
  REQUIRE(gamma.value == 3);
  REQUIRE(gamma.witness == VertexSet({0, 1, 2}));
  REQUIRE(ind.value == 3);
  REQUIRE(ind.witness == VertexSet({0, 4, 5}));
  REQUIRE(ind.witness.members() == ref_ind.witness);
}

TEST_CASE("degenerate inputs", "[solvers]") {
  Graph empty = build_graph(0, {});
  REQUIRE(gamma_oracle(empty).value == 0);
  REQUIRE(i_bnb(empty).value == 0);

  Graph single = build_graph(1, {});
  REQUIRE(gamma_oracle(single).value == 1);
  REQUIRE(gamma_oracle(single).witness == VertexSet({0}));

  Graph edge = build_graph(2, {{0, 1}});
  REQUIRE(gamma_oracle(edge).value == 1);
  REQUIRE(i_oracle(edge).value == 1);
  REQUIRE(gamma_bnb(edge).witness == VertexSet({0}));

  Graph edgeless = build_graph(5, {});
  REQUIRE(gamma_oracle(edgeless).value == 5);
  REQUIRE(i_oracle(edgeless).value == 5);
  REQUIRE(gamma_bnb(edgeless).value == 5);
}

TEST_CASE("oracle cap is enforced and overridable", "[solvers]") {
  Graph big = build_graph(25, {});
  REQUIRE_THROWS_AS(gamma_oracle(big), std::invalid_argument);
  REQUIRE_THROWS_AS(i_oracle(big, 24), std::invalid_argument);
  REQUIRE(gamma_oracle(big, 25).value == 25);
  REQUIRE(gamma_bnb(big).value == 25);  // branch-and-bound has no cap
}

TEST_CASE("independent domination of a star and a double star", "[solvers]") {
  Graph star = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}});
  REQUIRE(i_oracle(star).value == 1);
  REQUIRE(i_bnb(star).value == 1);
  REQUIRE(i_bnb(star).witness == VertexSet({0}));

  Graph ds = double_star(3);
  auto ref = brute_minimum(ds, true);
  REQUIRE(ref.value == 4);
  SolveResult ind = i_oracle(ds);
  REQUIRE(ind.value == 4);
  REQUIRE(ind.witness == VertexSet({0, 5, 6, 7}));  // one center plus far leaves
  REQUIRE(gamma_oracle(ds).value == 2);
}

TEST_CASE("branch-and-bound equals the oracle and the subset scan", "[solvers]") {
  for (const Graph& g : mixed_instances()) {
    SolveResult og = g.vertex_count() <= kDefaultOracleCap ? gamma_oracle(g) : gamma_bnb(g);
    SolveResult bg = gamma_bnb(g);
    REQUIRE(og.value == bg.value);
    check_witness(g, og);
    check_witness(g, bg);

    SolveResult oi = g.vertex_count() <= kDefaultOracleCap ? i_oracle(g) : i_bnb(g);
    SolveResult bi = i_bnb(g);
    REQUIRE(oi.value == bi.value);
    check_witness(g, oi);
    check_witness(g, bi);

    REQUIRE(og.value <= oi.value);  // every independent dominating set dominates

    if (g.vertex_count() <= 12) {
      REQUIRE(brute_minimum(g, false).value == og.value);
      auto ref = brute_minimum(g, true);
      REQUIRE(ref.value == oi.value);
      REQUIRE(oi.witness.members() == ref.witness);  // lexicographically least
      REQUIRE(gamma_oracle(g).witness.members() == brute_minimum(g, false).witness);
    }
  }
}

TEST_CASE("adding an edge never increases the domination number", "[solvers]") {
  SplitMix64 seeds(0xadd3d9eULL);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 40; ++trial) {
    const int n = 4 + int(seeds.below(9));
    Graph g = testsupport::general_random(n, 0.3, seeds.next());
    const int u = int(seeds.below(uint64_t(n)));
    const int v = int(seeds.below(uint64_t(n)));
    if (u == v || g.has_edge(u, v)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b : g.neighbors(a))
        if (a < b) edges.emplace_back(a, b);
    edges.emplace_back(u, v);
    Graph augmented = build_graph(n, edges);
    REQUIRE(gamma_bnb(augmented).value <= gamma_bnb(g).value);
    ++checked;
  }
  REQUIRE(checked == 40);
}

TEST_CASE("solver runs are deterministic including node counts", "[solvers]") {
  std::vector<Graph> graphs = {complete_bipartite(4), odd_cycle_corona(1, 3),
                               testsupport::general_random(12, 0.35, 77),
                               random_bipartite(6, 6, 0.4, 123)};
  for (const Graph& g : graphs) {
    SolveResult a = gamma_bnb(g);
    SolveResult b = gamma_bnb(g);
    REQUIRE(a.value == b.value);
    REQUIRE(a.witness == b.witness);
    REQUIRE(a.nodes_explored == b.nodes_explored);

    SolveResult c = i_bnb(g);
    SolveResult d = i_bnb(g);
    REQUIRE(c.witness == d.witness);
    REQUIRE(c.nodes_explored == d.nodes_explored);

    SolveResult e = gamma_oracle(g);
    SolveResult f = gamma_oracle(g);
    REQUIRE(e.witness == f.witness);
    REQUIRE(e.nodes_explored == f.nodes_explored);
  }
}

TEST_CASE("solvers decompose over components", "[solvers]") {
  // Two 4-cycles and an isolated vertex: gamma = 2 + 2 + 1.
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                            {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  Graph g = build_graph(9, edges);
  SolveResult gamma = gamma_oracle(g);
  REQUIRE(gamma.value == 5);
  REQUIRE(gamma.witness == VertexSet({0, 1, 4, 5, 8}));
  REQUIRE(gamma_bnb(g).value == 5);
  REQUIRE(i_oracle(g).value == 5);
  REQUIRE(i_oracle(g).witness == VertexSet({0, 2, 4, 6, 8}));
}

TEST_CASE("solve_gamma and solve_i pick the right engine", "[solvers]") {
  Graph small = complete_bipartite(3);
  REQUIRE(solve_gamma(small).method == Method::oracle);
  REQUIRE(solve_i(small).method == Method::oracle);

  Graph big = odd_cycle_corona(2, 4);  // 25 vertices
  REQUIRE(big.vertex_count() == 25);
  SolveResult r = solve_gamma(big);
  REQUIRE(r.method == Method::branch_and_bound);
  REQUIRE(r.value == 5);
  REQUIRE(solve_i(big).value == 2 + 3 * 4);
}
