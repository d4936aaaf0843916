#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "test_support.hpp"

using namespace domkit;
using clirunner::run_cli;
using clirunner::write_temp;

namespace {

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve reports both parameters with bounds", "[cli]") {
  auto input = write_temp("k33.txt", edge_list_text(complete_bipartite(3)));
  auto r = run_cli("solve --input " + input.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.out, "n=6 m=9 delta=3"));
  REQUIRE(contains(r.out, "gamma=2 i=3 delta=3 ratio=3/2"));
  REQUIRE(contains(r.out, "within_conjecture=true"));
  REQUIRE(contains(r.out, "within_rv=true"));
  std::filesystem::remove(input);
}

TEST_CASE("solve handles a single edge", "[cli]") {
  auto input = write_temp("edge.txt", "n 2\n0 1\n");
  auto r = run_cli("solve --input " + input.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.out, "gamma=1 i=1"));
  std::filesystem::remove(input);
}

TEST_CASE("solve reports parse failures with line numbers on exit 2", "[cli]") {
  auto input = write_temp("bad.txt", "0 1\n");
  auto r = run_cli("solve --input " + input.string());
  REQUIRE(r.exit_code == 2);
  REQUIRE(contains(r.err, "line 1"));
  std::filesystem::remove(input);

  auto missing = run_cli("solve --input /nonexistent/graph.txt");
  REQUIRE(missing.exit_code == 2);
}

TEST_CASE("transform rewrites a dominating set end to end", "[cli]") {
  auto input = write_temp("k33.txt", edge_list_text(complete_bipartite(3)));
  auto dset = write_temp("d.txt", "0 3\n");
  auto r = run_cli("transform --input " + input.string() + " --dominating-set " + dset.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.out, "D=[0 3] size=2"));
  REQUIRE(contains(r.out, "I=[0 1 2] size=3"));
  REQUIRE(contains(r.out, "independent=true dominating=true"));
  REQUIRE(contains(r.out, "size_chain: 3 <= 3 <= 3"));
  std::filesystem::remove(input);
  std::filesystem::remove(dset);
}

TEST_CASE("transform exits 3 on non-bipartite input with a witness", "[cli]") {
  auto input = write_temp("c5.txt", edge_list_text(cycle(5)));
  auto dset = write_temp("d.txt", "0 2\n");
  auto r = run_cli("transform --input " + input.string() + " --dominating-set " + dset.string());
  REQUIRE(r.exit_code == 3);
  REQUIRE(contains(r.err, "odd cycle"));
  std::filesystem::remove(input);
  std::filesystem::remove(dset);
}

TEST_CASE("transform exits 4 naming an undominated vertex", "[cli]") {
  auto input = write_temp("c4.txt", edge_list_text(cycle(4)));
  auto dset = write_temp("d.txt", "0\n");
  auto r = run_cli("transform --input " + input.string() + " --dominating-set " + dset.string());
  REQUIRE(r.exit_code == 4);
  REQUIRE(contains(r.err, "vertex 2"));
  std::filesystem::remove(input);
  std::filesystem::remove(dset);
}

TEST_CASE("transform exits 2 when max degree is below 2", "[cli]") {
  auto input = write_temp("edge.txt", "n 2\n0 1\n");
  auto dset = write_temp("d.txt", "0\n");
  auto r = run_cli("transform --input " + input.string() + " --dominating-set " + dset.string());
  REQUIRE(r.exit_code == 2);
  std::filesystem::remove(input);
  std::filesystem::remove(dset);
}

TEST_CASE("generate emits canonical edge lists", "[cli]") {
  auto single = run_cli("generate complete-bipartite --m 1");
  REQUIRE(single.exit_code == 0);
  REQUIRE(single.out == "n 2\n0 1\n");

  auto ds = run_cli("generate double-star --s 3");
  REQUIRE(ds.exit_code == 0);
  REQUIRE(ds.out == edge_list_text(double_star(3)));

  auto corona = run_cli("generate corona --k 1 --s 5");
  REQUIRE(corona.exit_code == 0);
  std::istringstream in(corona.out);
  Graph parsed = read_edge_list(in);
  REQUIRE(parsed == odd_cycle_corona(1, 5));
  REQUIRE(parsed.vertex_count() == 18);

  auto cyc = run_cli("generate cycle --n 6");
  REQUIRE(cyc.out == edge_list_text(cycle(6)));

  auto rb = run_cli("generate random-bipartite --na 5 --nb 6 --edge-prob 0.4 --seed 9");
  std::istringstream rin(rb.out);
  REQUIRE(read_edge_list(rin) == random_bipartite(5, 6, 0.4, 9));

  auto bad = run_cli("generate cycle --n 1");
  REQUIRE(bad.exit_code == 2);
}

TEST_CASE("verify emits one csv row per accepted instance", "[cli]") {
  auto empty = run_cli("verify --count 0");
  REQUIRE(empty.exit_code == 0);
  REQUIRE(empty.out == ratio_csv_header() + "\n");
  REQUIRE(contains(empty.err, "violations=0"));

  auto r = run_cli("verify --count 30 --min-n 6 --max-n 12 --edge-prob 0.4 --seed 11");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() >= 2);
  REQUIRE(lines[0] == ratio_csv_header());
  REQUIRE(contains(r.err, "instances=30"));

  auto again = run_cli("verify --count 30 --min-n 6 --max-n 12 --edge-prob 0.4 --seed 11");
  REQUIRE(again.out == r.out);
  REQUIRE(again.err == r.err);
}

TEST_CASE("verify validates its flags", "[cli]") {
  REQUIRE(run_cli("verify --max-n 30").exit_code == 2);   // above the oracle cap
  REQUIRE(run_cli("verify --min-n 10 --max-n 6").exit_code == 2);
  REQUIRE(run_cli("verify --edge-prob 1.5").exit_code == 2);
}

TEST_CASE("oracle cap environment override is honored and validated", "[cli]") {
  auto ok = run_cli("verify --count 5 --min-n 6 --max-n 16 --seed 3");
  REQUIRE(ok.exit_code == 0);
  auto capped = run_cli("verify --count 5 --min-n 6 --max-n 16 --seed 3",
                        "DOMKIT_ORACLE_CAP=10");
  REQUIRE(capped.exit_code == 2);
  auto junk = run_cli("verify --count 5", "DOMKIT_ORACLE_CAP=banana");
  REQUIRE(junk.exit_code == 2);
  REQUIRE(contains(junk.err, "DOMKIT_ORACLE_CAP"));
}

TEST_CASE("sweep tabulates the corona family", "[cli]") {
  auto empty = run_cli("sweep --k-min 2 --k-max 1");
  REQUIRE(empty.exit_code == 0);
  REQUIRE(split_lines(empty.out).size() == 1);  // header only

  auto r = run_cli("sweep --k-min 1 --k-max 2 --s-min 1 --s-max 7");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 1 + 2 * 7);
  REQUIRE(lines[0] ==
          "k,s,n,delta,gamma,i,ratio_num,ratio_den,ratio_decimal,"
          "half_delta_num,half_delta_den,exceeds,oracle_gamma,oracle_i");
  // k=1, s=4 sits exactly on the bound; s=5 crosses it.
  REQUIRE(lines[4] == "1,4,15,6,3,9,3,1,3.000000,3,1,false,3,9");
  REQUIRE(lines[5] == "1,5,18,7,3,11,11,3,3.666667,7,2,true,3,11");
  // k=2, s=6 on the bound; s=7 crosses; both too big for oracle columns.
  REQUIRE(lines[13] == "2,6,35,8,5,20,4,1,4.000000,4,1,false,,");
  REQUIRE(lines[14] == "2,7,40,9,5,23,23,5,4.600000,9,2,true,,");

  REQUIRE(run_cli("sweep --k-min 0").exit_code == 2);
}

TEST_CASE("help exits zero and unknown flags exit two", "[cli]") {
  REQUIRE(run_cli("--help").exit_code == 0);
  REQUIRE(run_cli("solve --frobnicate").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);  // missing subcommand
}
