#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domkit/domkit.hpp"

namespace {

using namespace domkit;

/// Failure that already knows its process exit code.
struct CliError {
  int code;
  std::string message;
};

int oracle_cap_from_env() {
  const char* raw = std::getenv("DOMKIT_ORACLE_CAP");
  if (raw == nullptr) return kDefaultOracleCap;
  long long value = 0;
  if (!detail::parse_int(raw, value) || value < 1)
    throw CliError{2, "DOMKIT_ORACLE_CAP must be a positive integer, got \"" +
                          std::string(raw) + "\""};
  return int(value);
}

/// Primary output goes to --output when given, stdout otherwise.
struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw CliError{2, "cannot open output file " + path};
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

std::string format_set(const VertexSet& s) {
  std::ostringstream o;
  o << '[';
  bool first = true;
  for (int v : s) {
    if (!first) o << ' ';
    o << v;
    first = false;
  }
  o << ']';
  return o.str();
}

std::string format_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
  return buf;
}

std::string solve_line(const SolveResult& r, const char* label) {
  std::ostringstream o;
  o << label << '=' << r.value << " witness=" << format_set(r.witness)
    << " method=" << to_string(r.method) << " nodes=" << r.nodes_explored;
  return o.str();
}

// ---- solve ------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string output;
};

int cmd_solve(const SolveOptions& opt) {
  Graph g = read_edge_list_file(opt.input);
  OutputTarget target(opt.output);
  std::ostream& out = target.out();

  const int delta = max_degree(g);
  out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " delta=" << delta << "\n";

  SolveResult gamma = gamma_bnb(g);
  SolveResult indep = i_bnb(g);
  out << solve_line(gamma, "gamma") << "\n";
  out << solve_line(indep, "i") << "\n";

  std::ostringstream summary;
  summary << "gamma=" << gamma.value << " i=" << indep.value << " delta=" << delta;
  if (gamma.value > 0) {
    Rational ratio(indep.value, gamma.value);
    summary << " ratio=" << ratio.to_string();
    if (delta >= 2) {
      Rational conj = conjecture_bound(delta);
      summary << " conjecture_bound=" << conj.to_string()
              << " within_conjecture=" << (ratio <= conj ? "true" : "false");
    }
    if (delta >= 3) {
      Rational rv = rad_volkmann_bound(delta);
      summary << " rv_bound=" << rv.to_string()
              << " within_rv=" << (ratio <= rv ? "true" : "false");
    }
  }
  out << summary.str() << "\n";
  return 0;
}

// ---- transform --------------------------------------------------------

struct TransformOptions {
  std::string input;
  std::string dominating_set;
  std::string output;
};

int cmd_transform(const TransformOptions& opt) {
  Graph g = read_edge_list_file(opt.input);
  VertexSet d = read_vertex_set_file(opt.dominating_set, g.vertex_count());

  auto bip = bipartition(g);
  if (std::holds_alternative<OddCycle>(bip)) {
    const auto& cycle = std::get<OddCycle>(bip);
    std::cerr << "error: graph is not bipartite; odd cycle: "
              << format_set(VertexSet(cycle.vertices)) << "\n";
    return 3;
  }
  const auto& parts = std::get<Bipartition>(bip);

  TransformTrace trace = independent_dominating_from(g, parts, d);

  const int delta = max_degree(g);
  const int mid = d.size() + (delta - 2) * trace.b1.size();
  const int cap = d.size() * delta / 2;

  OutputTarget target(opt.output);
  std::ostream& out = target.out();
  out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " delta=" << delta << "\n";
  out << "D=" << format_set(d) << " size=" << d.size() << "\n";
  out << "I0=" << format_set(trace.i0) << " A0=" << format_set(trace.a0)
      << " A1=" << format_set(trace.a1) << " B0=" << format_set(trace.b0)
      << " B1=" << format_set(trace.b1) << " A2=" << format_set(trace.a2)
      << " swapped=" << (trace.swapped ? "true" : "false") << "\n";
  out << "I=" << format_set(trace.result) << " size=" << trace.result.size() << "\n";

  const bool indep = is_independent(g, trace.result);
  const bool dom = is_dominating(g, trace.result);
  out << "independent=" << (indep ? "true" : "false")
      << " dominating=" << (dom ? "true" : "false") << "\n";
  out << "size_chain: " << trace.result.size() << " <= " << mid << " <= " << cap << "\n";

  if (!indep || !dom || trace.result.size() > mid || mid > cap) {
    std::cerr << "error: transform guarantee violated on this input\n";
    return 5;
  }
  return 0;
}

// ---- generate ---------------------------------------------------------

struct GenerateOptions {
  std::string output;
  std::optional<Graph> graph;
};

int cmd_generate(const GenerateOptions& opt) {
  OutputTarget target(opt.output);
  write_edge_list(target.out(), *opt.graph);
  return 0;
}

// ---- verify -----------------------------------------------------------

struct VerifyOptions {
  long long count = 100;
  int min_n = 6;
  int max_n = 16;
  double edge_prob = 0.3;
  uint64_t seed = 1;
  std::string output;
};

int cmd_verify(const VerifyOptions& opt, int oracle_cap) {
  if (opt.count < 0) throw CliError{2, "--count must be nonnegative"};
  if (opt.min_n < 2) throw CliError{2, "--min-n must be at least 2"};
  if (opt.max_n < opt.min_n) throw CliError{2, "--max-n must be >= --min-n"};
  if (opt.max_n > oracle_cap)
    throw CliError{2, "--max-n exceeds the oracle cap of " + std::to_string(oracle_cap)};
  if (!(opt.edge_prob >= 0.0 && opt.edge_prob <= 1.0))
    throw CliError{2, "--edge-prob must lie in [0, 1]"};

  OutputTarget target(opt.output);
  std::ostream& out = target.out();
  out << ratio_csv_header() << "\n";

  SplitMix64 stream(opt.seed);
  long long verified = 0;
  long long skipped = 0;
  for (long long idx = 0; idx < opt.count; ++idx) {
    const int n = opt.min_n + int(stream.below(uint64_t(opt.max_n - opt.min_n + 1)));
    const int na = n / 2;
    const uint64_t graph_seed = stream.next();
    Graph g = random_bipartite(na, n - na, opt.edge_prob, graph_seed);
    if (max_degree(g) < 2) {
      ++skipped;
      continue;
    }
    BoundCheckReport report = check_halved_degree_bound(g, oracle_cap);
    out << to_csv_row(ratio_report(g, report.gamma_result, report.i_result)) << "\n";
    ++verified;
    if (!report.holds || report.transform_size > report.bound_floor ||
        report.i > report.transform_size) {
      std::cerr << "error: bound violated at instance " << idx << " (seed " << opt.seed
                << ", graph seed " << graph_seed << "); offending graph:\n";
      write_edge_list(std::cerr, g);
      return 5;
    }
  }
  std::cerr << "instances=" << opt.count << " verified=" << verified
            << " skipped=" << skipped << " violations=0\n";
  return 0;
}

// ---- sweep ------------------------------------------------------------

struct SweepOptions {
  int k_min = 1;
  int k_max = 3;
  int s_min = 1;
  int s_max = 8;
  std::string output;
};

int cmd_sweep(const SweepOptions& opt, int oracle_cap) {
  if (opt.k_min < 1 || opt.s_min < 1)
    throw CliError{2, "--k-min and --s-min must be at least 1"};

  OutputTarget target(opt.output);
  std::ostream& out = target.out();
  out << "k,s,n,delta,gamma,i,ratio_num,ratio_den,ratio_decimal,"
         "half_delta_num,half_delta_den,exceeds,oracle_gamma,oracle_i\n";

  for (int k = opt.k_min; k <= opt.k_max; ++k) {
    for (int s = opt.s_min; s <= opt.s_max; ++s) {
      FamilyParams params;
      params.tag = FamilyTag::odd_cycle_corona;
      params.k = k;
      params.s = s;
      const ClosedForms cf = *family_closed_forms(params);
      const long long n = (2LL * k + 1) * (s + 1);
      const Rational ratio(cf.i, cf.gamma);
      const Rational half(cf.delta, 2);
      const bool exceeds = ratio > half;

      out << k << ',' << s << ',' << n << ',' << cf.delta << ',' << cf.gamma << ','
          << cf.i << ',' << ratio.num() << ',' << ratio.den() << ','
          << format_decimal(ratio) << ',' << half.num() << ',' << half.den() << ','
          << (exceeds ? "true" : "false") << ',';

      if (n <= oracle_cap) {
        Graph g = odd_cycle_corona(k, s);
        SolveResult og = gamma_oracle(g, oracle_cap);
        SolveResult oi = i_oracle(g, oracle_cap);
        if (og.value != cf.gamma || oi.value != cf.i) {
          std::cerr << "error: oracle disagrees with closed forms at k=" << k
                    << " s=" << s << "\n";
          return 5;
        }
        out << og.value << ',' << oi.value;
      } else {
        out << ',';
      }
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation of domination and independent domination numbers"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "compute gamma and i for an edge-list graph");
  solve->add_option("--input", solve_opt.input, "edge-list file")->required();
  solve->add_option("--output", solve_opt.output, "write results to this file");

  TransformOptions transform_opt;
  auto* transform = app.add_subcommand(
      "transform", "rewrite a dominating set of a bipartite graph into an independent one");
  transform->add_option("--input", transform_opt.input, "edge-list file")->required();
  transform->add_option("--dominating-set", transform_opt.dominating_set,
                        "file with whitespace-separated vertex ids")
      ->required();
  transform->add_option("--output", transform_opt.output, "write the trace to this file");

  auto* generate = app.add_subcommand("generate", "emit a graph family as an edge list");
  generate->require_subcommand(1);
  std::string generate_output;
  int gen_m = 0, gen_s = 0, gen_k = 0, gen_n = 0, gen_na = 0, gen_nb = 0;
  double gen_p = 0.5;
  uint64_t gen_seed = 1;

  auto* gen_cb = generate->add_subcommand("complete-bipartite", "K_{m,m}");
  gen_cb->add_option("--m", gen_m, "size of each part")->required();
  auto* gen_ds = generate->add_subcommand("double-star", "two adjacent centers, s leaves each");
  gen_ds->add_option("--s", gen_s, "leaves per center")->required();
  auto* gen_cy = generate->add_subcommand("cycle", "cycle on n vertices");
  gen_cy->add_option("--n", gen_n, "vertex count")->required();
  auto* gen_co =
      generate->add_subcommand("corona", "odd cycle with s pendant leaves per cycle vertex");
  gen_co->add_option("--k", gen_k, "cycle length parameter, cycle has 2k+1 vertices")->required();
  gen_co->add_option("--s", gen_s, "pendant leaves per cycle vertex")->required();
  auto* gen_rb = generate->add_subcommand("random-bipartite", "seeded random bipartite graph");
  gen_rb->add_option("--na", gen_na, "size of part A")->required();
  gen_rb->add_option("--nb", gen_nb, "size of part B")->required();
  gen_rb->add_option("--edge-prob", gen_p, "cross-edge probability (default 0.5)");
  gen_rb->add_option("--seed", gen_seed, "PRNG seed (default 1)");
  for (auto* sub : {gen_cb, gen_ds, gen_cy, gen_co, gen_rb})
    sub->add_option("--output", generate_output, "write the edge list to this file");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "check the halved-degree bound on seeded random bipartite graphs");
  verify->add_option("--count", verify_opt.count, "number of instances (default 100)");
  verify->add_option("--min-n", verify_opt.min_n, "smallest vertex count (default 6)");
  verify->add_option("--max-n", verify_opt.max_n, "largest vertex count (default 16)");
  verify->add_option("--edge-prob", verify_opt.edge_prob, "cross-edge probability (default 0.3)");
  verify->add_option("--seed", verify_opt.seed, "PRNG seed (default 1)");
  verify->add_option("--output", verify_opt.output, "write the CSV to this file");

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand(
      "sweep", "tabulate the corona family against the halved-degree bound");
  sweep->add_option("--k-min", sweep_opt.k_min, "smallest k (default 1)");
  sweep->add_option("--k-max", sweep_opt.k_max, "largest k (default 3)");
  sweep->add_option("--s-min", sweep_opt.s_min, "smallest s (default 1)");
  sweep->add_option("--s-max", sweep_opt.s_max, "largest s (default 8)");
  sweep->add_option("--output", sweep_opt.output, "write the CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int oracle_cap = oracle_cap_from_env();
    if (*solve) return cmd_solve(solve_opt);
    if (*transform) return cmd_transform(transform_opt);
    if (*generate) {
      GenerateOptions opt;
      opt.output = generate_output;
      if (*gen_cb) opt.graph = complete_bipartite(gen_m);
      if (*gen_ds) opt.graph = double_star(gen_s);
      if (*gen_cy) opt.graph = cycle(gen_n);
      if (*gen_co) opt.graph = odd_cycle_corona(gen_k, gen_s);
      if (*gen_rb) opt.graph = random_bipartite(gen_na, gen_nb, gen_p, gen_seed);
      return cmd_generate(opt);
    }
    if (*verify) return cmd_verify(verify_opt, oracle_cap);
    if (*sweep) return cmd_sweep(sweep_opt, oracle_cap);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const NotDominatingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
