#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cdg/canonical.hpp"
#include "cdg/cli.hpp"
#include "cdg/degrees.hpp"
#include "cdg/prime_graph.hpp"
#include "cdg/reference_graphs.hpp"

using namespace cdg;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Counterpart of to_dot for round-trip checks: reads the node ids and
/// edges back and rebuilds an unlabeled graph with one vertex per id.
SmallGraph parse_dot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::uint64_t> ids;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line == "graph {" || line == "}") continue;
    REQUIRE(line.back() == ';');
    line.pop_back();
    auto dashes = line.find(" -- ");
    if (dashes == std::string::npos) {
      ids.push_back(std::stoull(line));
    } else {
      edges.emplace_back(std::stoull(line.substr(0, dashes)),
                         std::stoull(line.substr(dashes + 4)));
    }
  }
  auto index_of = [&](std::uint64_t id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
  };
  SmallGraph g = SmallGraph::edgeless(static_cast<int>(ids.size()));
  for (const auto& [a, b] : edges) g.add_edge(index_of(a), index_of(b));
  return g;
}

}  // namespace

TEST_CASE("dot_output_for_labeled_and_unlabeled_graphs") {
  auto k4 = primegraph::build_prime_graph(degrees::DegreeSet::from_values({1, 210}));
  CHECK(cli::to_dot(k4.graph) ==
        "graph {\n"
        "  2;\n"
        "  3;\n"
        "  5;\n"
        "  7;\n"
        "  2 -- 3;\n"
        "  2 -- 5;\n"
        "  2 -- 7;\n"
        "  3 -- 5;\n"
        "  3 -- 7;\n"
        "  5 -- 7;\n"
        "}\n");

  CHECK(cli::to_dot(SmallGraph::path(3)) ==
        "graph {\n"
        "  1;\n"
        "  2;\n"
        "  3;\n"
        "  1 -- 2;\n"
        "  2 -- 3;\n"
        "}\n");
}

TEST_CASE("dot_round_trips_to_an_isomorphic_graph") {
  for (const auto& ref : reference_graphs()) {
    CAPTURE(ref.name);
    CHECK(is_isomorphic(parse_dot(cli::to_dot(ref.graph)), ref.graph));
  }
  for (const char* name : {"M11", "J1", "A7", "PSL2(17)"}) {
    CAPTURE(name);
    auto pg = primegraph::build_prime_graph(degrees::GroupDescriptor::tabulated(name));
    CHECK(is_isomorphic(parse_dot(cli::to_dot(pg.graph)), pg.graph));
  }
}

TEST_CASE("graph_subcommand_text_output") {
  auto r = invoke({"graph", "--group", "A7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "source: A7\n"
        "degrees: {1,6,10,14,15,21,35}\n"
        "vertices (4): 2 3 5 7\n"
        "edges (6):\n"
        "  2 -- 3\n"
        "  2 -- 5\n"
        "  2 -- 7\n"
        "  3 -- 5\n"
        "  3 -- 7\n"
        "  5 -- 7\n"
        "shape: K4\n"
        "components: 1\n"
        "K4-free: no\n");
}

TEST_CASE("graph_subcommand_other_sources_and_formats") {
  auto dot = invoke({"graph", "--group", "A7", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(is_isomorphic(parse_dot(dot.out), SmallGraph::complete(4)));

  auto structured = invoke({"graph", "--psl2", "17", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out ==
        "[graph]\n"
        "source\tPSL2(17)\n"
        "degrees\t1,9,16,17,18\n"
        "order\t3\n"
        "vertex\t2\n"
        "vertex\t3\n"
        "vertex\t17\n"
        "edge\t2,3\n"
        "shape\tK2 + K1\n"
        "components\t2\n"
        "k4_free\tyes\n");

  auto degrees_src = invoke({"graph", "--degrees", "1,14,15"});
  CHECK(degrees_src.code == 0);
  CHECK(degrees_src.out ==
        "source: {1,14,15}\n"
        "degrees: {1,14,15}\n"
        "vertices (4): 2 3 5 7\n"
        "edges (2):\n"
        "  2 -- 7\n"
        "  3 -- 5\n"
        "shape: K2 + K2\n"
        "components: 2\n"
        "K4-free: yes\n");

  auto suzuki = invoke({"graph", "--suzuki", "8"});
  CHECK(suzuki.code == 0);
  CHECK(suzuki.out.find("source: Sz(8)") == 0);
}

TEST_CASE("graph_subcommand_error_paths") {
  auto unknown_group = invoke({"graph", "--group", "Nope"});
  CHECK(unknown_group.code == 1);
  CHECK(unknown_group.out.empty());
  CHECK(unknown_group.err.find("error:") == 0);

  auto two_sources = invoke({"graph", "--group", "A7", "--psl2", "8"});
  CHECK(two_sources.code == 1);
  CHECK(two_sources.err ==
        "error: graph needs exactly one of --group, --psl2, --suzuki, --degrees\n");

  auto no_source = invoke({"graph"});
  CHECK(no_source.code == 1);

  auto bad_flag = invoke({"graph", "--group", "A7", "--frmat", "dot"});
  CHECK(bad_flag.code == 1);
  CHECK(bad_flag.err.find("error:") == 0);

  auto bad_q = invoke({"graph", "--psl2", "6"});
  CHECK(bad_q.code == 1);
  CHECK(bad_q.err.find("error:") == 0);
}

TEST_CASE("top_level_usage_errors_and_help") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"bogus"}).code == 1);
  CHECK(invoke({"graph", "census"}).code == 1);

  auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("graph") != std::string::npos);
  CHECK(help.out.find("report") != std::string::npos);

  auto sub_help = invoke({"census", "--help"});
  CHECK(sub_help.code == 0);
  CHECK(sub_help.out.find("--constraints") != std::string::npos);
}

TEST_CASE("census_subcommand_output") {
  auto plain = invoke({"census", "--n", "6", "--k", "3"});
  CHECK(plain.code == 0);
  CHECK(plain.out ==
        "census: connected 3-regular graphs on 6 vertices\n"
        "graphs: 2\n"
        "  1. K3,3  (triangles 0, alpha 3)\n"
        "  2. triangular prism  (triangles 2, alpha 2)\n");

  auto filtered =
      invoke({"census", "--n", "8", "--k", "3", "--constraints", "triangle,alpha<=3"});
  CHECK(filtered.code == 0);
  CHECK(filtered.out ==
        "census: connected 3-regular graphs on 8 vertices\n"
        "graphs: 5\n"
        "constraints: triangle, alpha<=3\n"
        "survivors: 3\n"
        "  1. cubic of order 8 with one triangle  (triangles 1, alpha 3)\n"
        "  2. cubic of order 8 with two triangles  (triangles 2, alpha 3)\n"
        "  3. cubic of order 8 with four triangles  (triangles 4, alpha 3)\n"
        "excluded: 2\n"
        "  cube  (triangle)\n"
        "  Wagner graph  (triangle)\n");

  auto parity = invoke({"census", "--n", "5", "--k", "3"});
  CHECK(parity.code == 0);
  CHECK(parity.out.find("note: empty by parity") != std::string::npos);
  CHECK(parity.out.find("graphs: 0") != std::string::npos);

  auto structured =
      invoke({"census", "--n", "4", "--k", "3", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out ==
        "[census]\n"
        "n\t4\n"
        "k\t3\n"
        "count\t1\n"
        "[graph]\n"
        "name\tK4\n"
        "canonical\tg4.fc00000000000000.0000000000000000\n"
        "triangles\t4\n"
        "alpha\t1\n");

  auto dot = invoke({"census", "--n", "4", "--k", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(is_isomorphic(parse_dot(dot.out), SmallGraph::complete(4)));

  auto bad_constraint = invoke({"census", "--n", "6", "--k", "3", "--constraints", "huh"});
  CHECK(bad_constraint.code == 1);
  CHECK(bad_constraint.err.find("error:") == 0);
}

TEST_CASE("classify_subcommand_output") {
  auto solvable = invoke({"classify", "--k", "3", "--hypothesis", "solvable"});
  CHECK(solvable.code == 0);
  CHECK(solvable.out.find("unique survivor: K4\n") != std::string::npos);
  CHECK(solvable.out.find("triangular prism  [excluded (group theory)]") !=
        std::string::npos);
  CHECK(solvable.out.find("K3,3  (alpha<=2)") != std::string::npos);

  auto one_regular = invoke({"classify", "--k", "1", "--hypothesis", "general"});
  CHECK(one_regular.code == 0);
  CHECK(one_regular.out ==
        "classification: 1-regular prime graphs (general hypothesis)\n"
        "orders examined: 2\n"
        "census: n=2: 1\n"
        "survivors (1):\n"
        "  K2  [realized]\n"
        "      a solvable group with one nonlinear degree divisible by 2 distinct "
        "primes has a complete prime graph\n"
        "unique survivor: K2\n"
        "notes:\n"
        "  - disconnected regular prime graphs occur only for k = 0, so the census "
        "enumerates connected graphs\n");

  auto quartic = invoke({"classify", "--k", "4", "--hypothesis", "general"});
  CHECK(quartic.code == 0);
  CHECK(quartic.out.find("scope: conjecture exploration") != std::string::npos);
  CHECK(quartic.out.find("orders skipped: 11, 12") != std::string::npos);
  CHECK(quartic.out.find("realized: K5, octahedron") != std::string::npos);

  auto structured =
      invoke({"classify", "--k", "3", "--hypothesis", "solvable", "--format",
              "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out.find("[classification]\nk\t3\nhypothesis\tsolvable\n") !=
        std::string::npos);
  CHECK(structured.out.find("unique_survivor\tK4\n") != std::string::npos);

  CHECK(invoke({"classify", "--k", "7", "--hypothesis", "general"}).code == 1);
  CHECK(invoke({"classify", "--k", "3", "--hypothesis", "maybe"}).code == 1);
  CHECK(invoke({"classify", "--k", "3"}).code == 1);
}

TEST_CASE("scan_subcommand_output") {
  auto r = invoke({"scan-psl2", "--qmax", "16"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "scan: PSL2(q) K4-freeness for prime powers q in [4, 16]\n"
        "       q  pi(q-1)  pi(q+1)  K4-free     bound\n"
        "       4        1        1      yes        ok\n"
        "       5        1        2      yes        ok\n"
        "       7        2        1      yes        ok\n"
        "       8        1        1      yes        ok\n"
        "       9        1        2      yes        ok\n"
        "      11        2        2      yes        ok\n"
        "      13        2        2      yes        ok\n"
        "      16        2        1      yes        ok\n"
        "summary: 8 prime powers; no K4 in range; 0 bound mismatches\n");

  auto structured = invoke({"scan-psl2", "--qmax", "256", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out.find("[scan]\nqmax\t256\n") == 0);
  CHECK(structured.out.find("mismatches\t0\n") != std::string::npos);
  CHECK(structured.out.find("row\t211,") != std::string::npos);
  CHECK(structured.out.find("first_k4\t211\n") != std::string::npos);

  CHECK(invoke({"scan-psl2"}).code == 1);
  CHECK(invoke({"scan-psl2", "--qmax", "2000000"}).code == 1);
}

TEST_CASE("construct_subcommand_output") {
  auto r = invoke({"construct", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "construction: 4-regular prime graph on 6 vertices\n"
        "factors: synthetic {1,2,3} x synthetic {1,5,7} x synthetic {1,11,13}\n"
        "degrees: 27 values\n"
        "vertices (6): 2 3 5 7 11 13\n"
        "edges (12):\n"
        "  2 -- 5\n"
        "  2 -- 7\n"
        "  2 -- 11\n"
        "  2 -- 13\n"
        "  3 -- 5\n"
        "  3 -- 7\n"
        "  3 -- 11\n"
        "  3 -- 13\n"
        "  5 -- 11\n"
        "  5 -- 13\n"
        "  7 -- 11\n"
        "  7 -- 13\n"
        "shape: octahedron\n"
        "k-regular: yes\n"
        "cocktail party K_3x2: confirmed\n");

  auto with_primes =
      invoke({"construct", "--k", "2", "--primes", "11,13,17,19", "--format",
              "structured"});
  CHECK(with_primes.code == 0);
  CHECK(with_primes.out.find("factors\tsynthetic {1,11,13} x synthetic {1,17,19}\n") !=
        std::string::npos);
  CHECK(with_primes.out.find("shape\tC4\n") != std::string::npos);
  CHECK(with_primes.out.find("cocktail_party\tyes\n") != std::string::npos);

  auto dot = invoke({"construct", "--k", "6", "--format", "dot"});
  CHECK(dot.code == 0);
  auto parsed = parse_dot(dot.out);
  CHECK(parsed.order() == 8);
  for (int v = 0; v < parsed.order(); ++v) CHECK(parsed.degree(v) == 6);

  CHECK(invoke({"construct", "--k", "3"}).code == 1);
  CHECK(invoke({"construct", "--k", "4", "--primes", "2,3,4,5,7,11"}).code == 1);
  CHECK(invoke({"construct", "--k", "4", "--primes", "2,3,5"}).code == 1);
}

TEST_CASE("verify_subcommand_suites") {
  auto references = invoke({"verify", "--suite", "references"});
  CHECK(references.code == 0);
  CHECK(references.err.empty());
  CHECK(references.out.find("verify: reference graph library\n") == 0);
  CHECK(references.out.find("ok: triangular prism: order 6\n") != std::string::npos);
  CHECK(references.out.find("summary: 21 checks, 0 failures\n") != std::string::npos);

  auto handshake = invoke({"verify", "--suite", "handshake"});
  CHECK(handshake.code == 0);
  CHECK(handshake.out.find("summary: 7 checks, 0 failures\n") != std::string::npos);

  auto brooks = invoke({"verify", "--suite", "brooks"});
  CHECK(brooks.code == 0);
  CHECK(brooks.out.find("on 9 vertices (529 graphs)") != std::string::npos);
  CHECK(brooks.out.find("summary: 2 checks, 0 failures\n") != std::string::npos);

  auto product_law = invoke({"verify", "--suite", "product-law"});
  CHECK(product_law.code == 0);
  CHECK(product_law.out.find("1000 random disjoint-support pairs") !=
        std::string::npos);

  auto indices = invoke({"verify", "--suite", "indices"});
  CHECK(indices.code == 0);
  CHECK(indices.out.find("skipped: f = 16") != std::string::npos);
  CHECK(indices.out.find("summary: 17 checks, 0 failures, 5 skipped\n") !=
        std::string::npos);

  CHECK(invoke({"verify", "--suite", "everything"}).code == 1);
  CHECK(invoke({"verify"}).code == 1);
}

TEST_CASE("verify_all_aggregates_every_suite") {
  auto r = invoke({"verify", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("verify: reference graph library\n") != std::string::npos);
  CHECK(r.out.find("verify: handshake parity\n") != std::string::npos);
  CHECK(r.out.find("verify: Brooks bound\n") != std::string::npos);
  CHECK(r.out.find("verify: maximal subgroup indices\n") != std::string::npos);
  CHECK(r.out.find("verify: product law\n") != std::string::npos);
  CHECK(r.out.find("summary: 48 checks, 0 failures, 5 skipped\n") !=
        std::string::npos);
}

TEST_CASE("report_subcommand_is_deterministic") {
  auto first = invoke({"report"});
  auto second = invoke({"report"});
  CHECK(first.code == 0);
  CHECK(first.err.empty());
  CHECK(first.out == second.out);
  CHECK(first.out.find("cubic prime graph classification\n") == 0);
  CHECK(first.out.find("unique survivor: K4\n") != std::string::npos);
  CHECK(first.out.find("first q whose graph contains K4: 211\n") !=
        std::string::npos);
  CHECK(first.out.find("groups whose graph contains K4: A7\n") != std::string::npos);
  CHECK(first.out.find("fails at f = 13, 16, 17, 19, 31") != std::string::npos);

  auto structured = invoke({"report", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out.find("[report]\n") == 0);
  CHECK(structured.out.find("[solvable.summary]\nrealized\tK4\nunresolved\t0\n"
                            "unique_survivor\tK4\n") != std::string::npos);
  CHECK(structured.out.find("first_k4\t211\n") != std::string::npos);
  CHECK(structured.out.find("k4_groups\tA7\n") != std::string::npos);
}

TEST_CASE("data_file_override") {
  auto path = std::filesystem::temp_directory_path() / "cdg_cli_table.txt";
  {
    std::ofstream file(path);
    file << "# tiny table for the override test\n"
            "group Demo\n"
            "degrees 1 6 10 15\n"
            "end\n";
  }
  auto r = invoke({"graph", "--group", "Demo", "--data", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("shape: K3\n") != std::string::npos);
  std::filesystem::remove(path);

  auto missing = invoke({"graph", "--group", "Demo", "--data", "/no/such/file"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error: cannot open data file") == 0);

  auto builtin_still_works = invoke({"graph", "--group", "Demo"});
  CHECK(builtin_still_works.code == 1);
}
