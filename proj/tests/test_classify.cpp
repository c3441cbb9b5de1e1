#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "cdg/arith.hpp"
#include "cdg/canonical.hpp"
#include "cdg/classify.hpp"
#include "cdg/invariants.hpp"
#include "cdg/prime_graph.hpp"
#include "cdg/reference_graphs.hpp"

using namespace cdg;
using namespace cdg::classify;

namespace {

std::set<CanonicalForm> survivor_forms(const ClassificationReport& r) {
  std::set<CanonicalForm> out;
  for (const auto& s : r.survivors) out.insert(canonical_form(s.graph));
  return out;
}

std::vector<std::string> survivor_names(const ClassificationReport& r) {
  std::vector<std::string> out;
  for (const auto& s : r.survivors) out.push_back(s.name);
  return out;
}

}  // namespace

TEST_CASE("describe_names_common_shapes") {
  CHECK(describe(SmallGraph::complete(4)) == "K4");
  CHECK(describe(SmallGraph::complete(1)) == "K1");
  CHECK(describe(SmallGraph::complete(3)) == "K3");
  CHECK(describe(SmallGraph::cycle(5)) == "C5");
  CHECK(describe(SmallGraph::edgeless(3)) == "3 isolated vertices");
  CHECK(describe(triangular_prism()) == "triangular prism");
  CHECK(describe(cubic8_four_triangles()) == "cubic of order 8 with four triangles");
  CHECK(describe(cubic8_two_triangles()) == "cubic of order 8 with two triangles");
  CHECK(describe(cubic8_one_triangle()) == "cubic of order 8 with one triangle");
  CHECK(describe(octahedron()) == "octahedron");
  CHECK(describe(primegraph::cocktail_party(4)) == "cocktail party K_4x2");
  CHECK(describe(primegraph::cocktail_party(8)) == "cocktail party K_8x2");
  CHECK(describe(SmallGraph::path(4)).rfind("graph g4.", 0) == 0);

  SmallGraph k33 = SmallGraph::edgeless(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  CHECK(describe(k33) == "K3,3");

  SmallGraph star = SmallGraph::edgeless(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(describe(star) == "K1,4");

  CHECK(describe(primegraph::build_prime_graph(degrees::cd_psl2(17)).graph) ==
        "K2 + K1");
  CHECK(describe(primegraph::build_prime_graph(degrees::cd_psl2(64)).graph) ==
        "K1 + K2 + K2");
  CHECK(describe(join(SmallGraph::edgeless(3), SmallGraph::edgeless(4))) == "K3,4");
  CHECK(describe(join(SmallGraph::edgeless(3),
                      join(SmallGraph::edgeless(3), SmallGraph::edgeless(3)))) ==
        "complete multipartite K3,3,3");
}

TEST_CASE("reference_graphs_match_their_captions") {
  auto checks = reference_graph_checks();
  CHECK(checks.size() == 21);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.property);
    CHECK(c.ok);
  }
  CHECK(verify_reference_graphs());
}

TEST_CASE("cubic_general_classification_reproduces_the_candidate_list") {
  auto r = classify_regular_candidates(3, false);
  CHECK(r.scope_note.empty());
  CHECK(r.orders_examined == std::vector<int>({4, 6, 8}));
  CHECK(r.orders_skipped.empty());
  CHECK(r.census_sizes ==
        std::vector<std::pair<int, std::size_t>>({{4, 1}, {6, 2}, {8, 5}}));

  REQUIRE(r.survivors.size() == 5);
  CHECK(r.survivors[0].name == "K4");
  CHECK(r.survivors[0].status == Status::realized);
  CHECK(r.survivors[0].citation.find("A7") != std::string::npos);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(r.survivors[i].status == Status::excluded_by_group_theory);
    CHECK(r.survivors[i].citation.find("PSL2") != std::string::npos);
  }

  std::set<CanonicalForm> expected = {
      canonical_form(SmallGraph::complete(4)), canonical_form(triangular_prism()),
      canonical_form(cubic8_four_triangles()), canonical_form(cubic8_two_triangles()),
      canonical_form(cubic8_one_triangle())};
  CHECK(survivor_forms(r) == expected);

  REQUIRE(r.exclusions.size() == 3);
  for (const auto& ex : r.exclusions) CHECK(ex.reason == "triangle");
  std::vector<std::string> excluded_names;
  for (const auto& ex : r.exclusions) excluded_names.push_back(ex.name);
  CHECK(excluded_names ==
        std::vector<std::string>({"K3,3", "cube", "Wagner graph"}));
}

TEST_CASE("cubic_solvable_classification_has_unique_realized_survivor") {
  auto r = classify_regular_candidates(3, true);
  CHECK(r.orders_examined == std::vector<int>({4, 6}));
  REQUIRE(r.survivors.size() == 2);
  CHECK(r.survivors[0].name == "K4");
  CHECK(r.survivors[0].status == Status::realized);
  CHECK(r.survivors[1].name == "triangular prism");
  CHECK(r.survivors[1].status == Status::excluded_by_group_theory);
  CHECK(r.survivors[1].citation.find("G' = G''") != std::string::npos);

  REQUIRE(r.exclusions.size() == 1);
  CHECK(r.exclusions[0].reason == "alpha<=2");

  int realized = 0;
  for (const auto& s : r.survivors)
    if (s.status == Status::realized) ++realized;
  CHECK(realized == 1);
}

TEST_CASE("two_regular_classification_keeps_triangle_and_square") {
  auto general = classify_regular_candidates(2, false);
  CHECK(general.orders_examined == std::vector<int>({3, 4, 5, 6}));
  CHECK(survivor_names(general) ==
        std::vector<std::string>({"K3", "C4", "C5", "C6"}));
  CHECK(general.survivors[0].status == Status::realized);
  CHECK(general.survivors[1].status == Status::realized);
  CHECK(general.survivors[2].status == Status::excluded_by_group_theory);
  CHECK(general.survivors[3].status == Status::excluded_by_group_theory);
  CHECK(general.exclusions.empty());

  auto solvable = classify_regular_candidates(2, true);
  CHECK(survivor_names(solvable) == std::vector<std::string>({"K3", "C4"}));
  for (const auto& s : solvable.survivors) CHECK(s.status == Status::realized);
}

TEST_CASE("one_regular_classification_is_a_single_edge") {
  for (bool solvable : {false, true}) {
    auto r = classify_regular_candidates(1, solvable);
    CAPTURE(solvable);
    REQUIRE(r.survivors.size() == 1);
    CHECK(r.survivors[0].name == "K2");
    CHECK(r.survivors[0].status == Status::realized);
    CHECK(r.orders_examined == std::vector<int>({2}));
    CHECK(r.exclusions.empty());
  }
}

TEST_CASE("zero_regular_classification_lists_edgeless_graphs") {
  auto general = classify_regular_candidates(0, false);
  CHECK(survivor_names(general) ==
        std::vector<std::string>({"K1", "2 isolated vertices", "3 isolated vertices"}));
  for (const auto& s : general.survivors) CHECK(s.status == Status::realized);
  CHECK(general.survivors[2].citation.find("PSL2(4)") != std::string::npos);

  auto solvable = classify_regular_candidates(0, true);
  CHECK(survivor_names(solvable) ==
        std::vector<std::string>({"K1", "2 isolated vertices"}));
}

TEST_CASE("solvable_survivors_are_a_subset_of_general_survivors") {
  for (int k = 0; k <= 4; ++k) {
    auto s = survivor_forms(classify_regular_candidates(k, true));
    auto g = survivor_forms(classify_regular_candidates(k, false));
    CAPTURE(k);
    CHECK(std::includes(g.begin(), g.end(), s.begin(), s.end()));
  }
}

TEST_CASE("quartic_classification_is_conjecture_exploration") {
  auto r = classify_regular_candidates(4, false);
  CHECK(r.scope_note == "conjecture exploration");
  CHECK(r.orders_examined == std::vector<int>({5, 6, 7, 8, 9, 10}));
  CHECK(r.orders_skipped == std::vector<int>({11, 12}));
  CHECK(r.census_sizes ==
        std::vector<std::pair<int, std::size_t>>(
            {{5, 1}, {6, 1}, {7, 2}, {8, 6}, {9, 16}, {10, 59}}));

  REQUIRE(r.survivors.size() >= 2);
  CHECK(r.survivors[0].name == "K5");
  CHECK(r.survivors[0].status == Status::realized);
  CHECK(r.survivors[1].name == "octahedron");
  CHECK(r.survivors[1].status == Status::realized);
  for (std::size_t i = 2; i < r.survivors.size(); ++i) {
    CAPTURE(r.survivors[i].name);
    CHECK(r.survivors[i].status == Status::unresolved);
    CHECK(independence_number(r.survivors[i].graph) <= 3);
  }
  for (const auto& ex : r.exclusions) CHECK(ex.reason == "alpha<=3");

  bool noted = false;
  for (const auto& note : r.notes)
    if (note.find("11, 12") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("beyond_scope_valencies_report_census_survivors_only") {
  auto r = classify_regular_candidates(5, true);
  CHECK(r.scope_note == "beyond the classified range (conjecture exploration)");
  CHECK(r.orders_examined == std::vector<int>({6, 8, 10}));
  REQUIRE(!r.survivors.empty());
  CHECK(r.survivors[0].name == "K6");
  CHECK(r.survivors[0].status == Status::realized);
  for (std::size_t i = 1; i < r.survivors.size(); ++i)
    CHECK(r.survivors[i].status == Status::unresolved);

  CHECK_THROWS_AS(classify_regular_candidates(10, false), std::invalid_argument);
  CHECK_THROWS_AS(classify_regular_candidates(-1, false), std::invalid_argument);
}

TEST_CASE("classification_reports_are_deterministic") {
  for (int k : {2, 3}) {
    auto a = classify_regular_candidates(k, false);
    auto b = classify_regular_candidates(k, false);
    CAPTURE(k);
    REQUIRE(a.survivors.size() == b.survivors.size());
    for (std::size_t i = 0; i < a.survivors.size(); ++i) {
      CHECK(a.survivors[i].graph == b.survivors[i].graph);
      CHECK(a.survivors[i].name == b.survivors[i].name);
      CHECK(a.survivors[i].citation == b.survivors[i].citation);
    }
    CHECK(a.notes == b.notes);
    CHECK(a.census_sizes == b.census_sizes);
  }
}

TEST_CASE("brooks_bound_holds_exhaustively") {
  auto small = verify_brooks_bound(3);
  CHECK(small.ok);
  CHECK(small.graphs_checked == 0);

  auto seven = verify_brooks_bound(7);
  CHECK(seven.ok);
  CHECK_FALSE(seven.counterexample.has_value());
  CHECK(seven.graphs_checked > 0);

  CHECK_THROWS_AS(verify_brooks_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_brooks_bound(9), std::invalid_argument);
}

TEST_CASE("psl2_scan_agrees_with_the_prime_count_bound") {
  auto rows = psl2_k4_scan(8192);

  std::size_t prime_powers = 0;
  for (std::uint64_t q = 4; q <= 8192; ++q)
    if (cdg::arith::is_prime_power(q)) ++prime_powers;
  CHECK(rows.size() == prime_powers);

  std::uint64_t first_k4 = 0;
  for (const auto& row : rows) {
    CAPTURE(row.q);
    REQUIRE(row.matches_bound);
    if (!row.k4_free && first_k4 == 0) first_k4 = row.q;
  }
  CHECK(first_k4 == 211);

  auto q1024 = std::find_if(rows.begin(), rows.end(),
                            [](const Psl2ScanRow& r) { return r.q == 1024; });
  REQUIRE(q1024 != rows.end());
  CHECK(q1024->pi_minus == 3);
  CHECK(q1024->pi_plus == 2);
  CHECK(q1024->k4_free);

  CHECK(psl2_k4_scan(3).empty());
  CHECK_THROWS_AS(psl2_k4_scan((std::uint64_t{1} << 20) + 1), std::invalid_argument);
}

TEST_CASE("index_window_is_clean_under_the_two_prime_hypothesis") {
  auto rows = index_prime_power_window(10, 31);
  REQUIRE(rows.size() == 22);

  std::set<int> hypothesis_failures;
  for (const auto& row : rows) {
    CAPTURE(row.f);
    if (row.hypothesis) REQUIRE(row.none_is_prime_power);
    if (!row.hypothesis) hypothesis_failures.insert(row.f);
    if (row.f == 16) {
      CHECK_FALSE(row.none_is_prime_power);
      CHECK(row.witness == "65537");
    } else {
      CHECK(row.none_is_prime_power);
    }
  }
  CHECK(hypothesis_failures == std::set<int>({13, 16, 17, 19, 31}));

  CHECK_THROWS_AS(index_prime_power_window(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(index_prime_power_window(5, 32), std::invalid_argument);
  CHECK_THROWS_AS(index_prime_power_window(20, 10), std::invalid_argument);
}

TEST_CASE("consolidated_cubic_report") {
  auto report = cubic_classification_report();
  CHECK(report.references_ok);
  CHECK(report.scan_mismatches == 0);
  CHECK(report.first_k4_q == 211);
  CHECK(report.scan_rows > 1000);
  CHECK(report.index_window.size() == 22);

  REQUIRE(report.group_checks.size() == 18);
  for (const auto& check : report.group_checks) {
    CAPTURE(check.name);
    CHECK(check.k4_free == (check.name != "A7"));
  }
  auto j1 = std::find_if(report.group_checks.begin(), report.group_checks.end(),
                         [](const GroupSpotCheck& c) { return c.name == "J1"; });
  REQUIRE(j1 != report.group_checks.end());
  CHECK(j1->graph_order == 6);
  CHECK(j1->max_degree == 4);

  int solvable_realized = 0;
  for (const auto& s : report.solvable.survivors)
    if (s.status == Status::realized) ++solvable_realized;
  CHECK(solvable_realized == 1);
  CHECK(report.notes.size() == 1);
}
