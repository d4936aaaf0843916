#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "domkit/graph.hpp"
#include "domkit/rational.hpp"
#include "domkit/solvers.hpp"

namespace domkit {

/// Proven upper bound on i/gamma for any graph with max degree delta >= 3:
///   delta/2                      for 3 <= delta <= 5
///   delta - 3 + 2/(delta - 1)    for delta >= 6
inline Rational rad_volkmann_bound(int delta) {
  if (delta < 3) throw std::invalid_argument("rad_volkmann_bound requires delta >= 3");
  if (delta <= 5) return Rational(delta, 2);
  return Rational((delta - 3LL) * (delta - 1) + 2, delta - 1);
}

/// The halved-degree bound delta/2, conjectured for every graph with
/// delta >= 3 and proven for bipartite graphs with delta >= 2.
inline Rational conjecture_bound(int delta) {
  if (delta < 2) throw std::invalid_argument("conjecture_bound requires delta >= 2");
  return Rational(delta, 2);
}

/// Whether the bound delta - 2*sqrt(delta) + 2 exceeds delta/2. Rearranged to
/// the integer comparison (delta + 4)^2 > 16*delta, so no square roots or
/// floating point: both sides of delta/2 + 2 > 2*sqrt(delta) are positive and
/// squaring is monotone. False exactly at delta = 4, where the two coincide.
inline bool furuya_exceeds_half_delta(int delta) {
  if (delta < 3) throw std::invalid_argument("furuya_exceeds_half_delta requires delta >= 3");
  const long long d = delta;
  return (d + 4) * (d + 4) > 16 * d;
}

/// Exact ratio i/gamma for one graph next to the relevant bounds. Fields that
/// need delta >= 3 stay empty for delta = 2.
struct RatioReport {
  int n = 0;
  int m = 0;
  int delta = 0;
  int gamma = 0;
  int i = 0;
  Rational ratio;
  Rational conjecture;
  std::optional<Rational> rad_volkmann;
  std::optional<bool> furuya_exceeds;
  bool within_conjecture = false;
  std::optional<bool> within_rad_volkmann;
};

/// Assembles a report from precomputed solve results.
inline RatioReport ratio_report(const Graph& g, const SolveResult& gamma_result,
                                const SolveResult& i_result) {
  const int delta = max_degree(g);
  if (delta < 2) throw std::invalid_argument("ratio_report requires max degree >= 2");
  RatioReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.delta = delta;
  r.gamma = gamma_result.value;
  r.i = i_result.value;
  r.ratio = Rational(r.i, r.gamma);
  r.conjecture = conjecture_bound(delta);
  r.within_conjecture = r.ratio <= r.conjecture;
  if (delta >= 3) {
    r.rad_volkmann = rad_volkmann_bound(delta);
    r.furuya_exceeds = furuya_exceeds_half_delta(delta);
    r.within_rad_volkmann = r.ratio <= *r.rad_volkmann;
  }
  return r;
}

/// Solves both parameters (oracle under the cap, branch-and-bound above it)
/// and assembles the report.
inline RatioReport ratio_report(const Graph& g, int oracle_cap = kDefaultOracleCap) {
  return ratio_report(g, solve_gamma(g, oracle_cap), solve_i(g, oracle_cap));
}

inline std::string ratio_csv_header() {
  return "n,m,delta,gamma,i,ratio_num,ratio_den,conj_bound_num,conj_bound_den,"
         "within_conjecture,within_rv";
}

/// One CSV row matching ratio_csv_header(); within_rv is empty for delta = 2.
inline std::string to_csv_row(const RatioReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.m << ',' << r.delta << ',' << r.gamma << ',' << r.i << ','
      << r.ratio.num() << ',' << r.ratio.den() << ',' << r.conjecture.num() << ','
      << r.conjecture.den() << ',' << (r.within_conjecture ? "true" : "false") << ',';
  if (r.within_rad_volkmann) out << (*r.within_rad_volkmann ? "true" : "false");
  return out.str();
}

}  // namespace domkit
