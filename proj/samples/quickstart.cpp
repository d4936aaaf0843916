// Minimal library tour: build graphs, solve both domination parameters
// exactly, rewrite a dominating set into an independent one, and compare
// a ratio against the known bounds.
//
// Build with the `quickstart` target, or standalone:
//   c++ -std=c++20 -I include samples/quickstart.cpp -o quickstart

#include <iostream>

#include <domkit/domkit.hpp>

using namespace domkit;

static void show(const char* label, const VertexSet& s) {
  std::cout << label << " {";
  bool first = true;
  for (int v : s) {
    std::cout << (first ? "" : ", ") << v;
    first = false;
  }
  std::cout << "}\n";
}

int main() {
  // Part 1: the rewrite, on a bipartite graph. A double star has two
  // adjacent centers (0 and 1) with three leaves each; the two centers
  // dominate everything but are adjacent to each other.
  Graph ds = double_star(3);
  auto parts = std::get<Bipartition>(bipartition(ds));
  VertexSet centers(std::vector<int>{0, 1});
  TransformTrace trace = independent_dominating_from(ds, parts, centers);
  show("dominating set:", centers);
  show("rewritten independent dominating set:", trace.result);
  std::cout << "rewrite is independent: " << std::boolalpha
            << is_independent(ds, trace.result)
            << ", dominating: " << is_dominating(ds, trace.result) << "\n\n";

  // Part 2: exact solving and ratios, on a family that is NOT bipartite:
  // a 3-cycle where every cycle vertex carries five pendant leaves. Here
  // i/gamma exceeds delta/2, which no bipartite graph can do.
  Graph g = odd_cycle_corona(1, 5);
  std::cout << "corona: n=" << g.vertex_count() << " m=" << g.edge_count()
            << " delta=" << max_degree(g) << "\n";

  // Under kDefaultOracleCap vertices these use exhaustive search; larger
  // graphs fall back to branch-and-bound (still exact).
  SolveResult gamma = solve_gamma(g);
  SolveResult indep = solve_i(g);
  std::cout << "gamma=" << gamma.value << "  i=" << indep.value << "\n";
  show("minimum dominating set:", gamma.witness);
  show("minimum independent dominating set:", indep.witness);

  Rational ratio(indep.value, gamma.value);
  std::cout << "i/gamma = " << ratio.to_string()
            << "  delta/2 = " << conjecture_bound(max_degree(g)).to_string()
            << "  proven bound = " << rad_volkmann_bound(max_degree(g)).to_string() << "\n";
  std::cout << "exceeds delta/2: " << (ratio > conjecture_bound(max_degree(g))) << "\n";
  return 0;
}
