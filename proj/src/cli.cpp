#include "cdg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cdg/arith.hpp"
#include "cdg/canonical.hpp"
#include "cdg/census.hpp"
#include "cdg/classify.hpp"
#include "cdg/degrees.hpp"
#include "cdg/invariants.hpp"
#include "cdg/prime_graph.hpp"
#include "cdg/reference_graphs.hpp"

namespace cdg::cli {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::uint64_t node_id(const SmallGraph& g, int v) {
  return g.labeled() ? g.label(v) : static_cast<std::uint64_t>(v + 1);
}

template <typename T>
std::string join_list(const std::vector<T>& xs, const char* sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s << sep;
    s << xs[i];
  }
  return s.str();
}

/// Edge list as sorted (small id, large id) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_ids(const SmallGraph& g) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) {
        auto a = node_id(g, u);
        auto b = node_id(g, v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::uint64_t> sorted_ids(const SmallGraph& g) {
  std::vector<std::uint64_t> ids;
  for (int v = 0; v < g.order(); ++v) ids.push_back(node_id(g, v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Structured output is line oriented: `[section]` headers, then one
// `key<TAB>value` record per line, with repeated keys for list entries.
void section(std::ostream& out, const std::string& prefix, const std::string& name) {
  out << '[' << (prefix.empty() ? name : prefix + "." + name) << "]\n";
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << '\t' << value << '\n';
}

void kv(std::ostream& out, const std::string& key, std::uint64_t value) {
  out << key << '\t' << value << '\n';
}

void print_edge_lines(std::ostream& out, const SmallGraph& g) {
  for (const auto& [a, b] : edge_ids(g)) out << "  " << a << " -- " << b << '\n';
}

void print_graph_text(std::ostream& out, const primegraph::PrimeGraph& pg) {
  const SmallGraph& g = pg.graph;
  out << "source: " << pg.describe_source() << '\n';
  out << "degrees: " << pg.degree_set.to_string() << '\n';
  out << "vertices (" << g.order() << "):";
  for (auto id : sorted_ids(g)) out << ' ' << id;
  out << '\n';
  out << "edges (" << g.edge_count() << "):\n";
  print_edge_lines(out, g);
  out << "shape: " << classify::describe(g) << '\n';
  out << "components: " << component_masks(g).size() << '\n';
  out << "K4-free: " << yn(is_kt_free(g, 4)) << '\n';
}

void print_graph_structured(std::ostream& out, const primegraph::PrimeGraph& pg) {
  const SmallGraph& g = pg.graph;
  section(out, "", "graph");
  kv(out, "source", pg.describe_source());
  kv(out, "degrees", join_list(pg.degree_set.values(), ","));
  kv(out, "order", static_cast<std::uint64_t>(g.order()));
  for (auto id : sorted_ids(g)) kv(out, "vertex", id);
  for (const auto& [a, b] : edge_ids(g))
    kv(out, "edge", std::to_string(a) + "," + std::to_string(b));
  kv(out, "shape", classify::describe(g));
  kv(out, "components", static_cast<std::uint64_t>(component_masks(g).size()));
  kv(out, "k4_free", yn(is_kt_free(g, 4)));
}

void print_classification_text(std::ostream& out,
                               const classify::ClassificationReport& r) {
  out << "classification: " << r.k << "-regular prime graphs ("
      << (r.solvable ? "solvable" : "general") << " hypothesis)\n";
  if (!r.scope_note.empty()) out << "scope: " << r.scope_note << '\n';
  out << "orders examined: " << join_list(r.orders_examined, ", ") << '\n';
  if (!r.orders_skipped.empty())
    out << "orders skipped: " << join_list(r.orders_skipped, ", ") << '\n';
  out << "census:";
  for (std::size_t i = 0; i < r.census_sizes.size(); ++i)
    out << (i > 0 ? "," : "") << " n=" << r.census_sizes[i].first << ": "
        << r.census_sizes[i].second;
  out << '\n';

  out << "survivors (" << r.survivors.size() << "):\n";
  for (const auto& s : r.survivors) {
    out << "  " << s.name << "  [" << classify::status_label(s.status) << "]\n";
    if (!s.citation.empty()) out << "      " << s.citation << '\n';
  }
  if (!r.exclusions.empty()) {
    out << "excluded by filters (" << r.exclusions.size() << "):\n";
    for (const auto& ex : r.exclusions)
      out << "  " << ex.name << "  (" << ex.reason << ")\n";
  }

  std::vector<std::string> realized;
  int unresolved = 0;
  for (const auto& s : r.survivors) {
    if (s.status == classify::Status::realized) realized.push_back(s.name);
    if (s.status == classify::Status::unresolved) ++unresolved;
  }
  if (realized.size() == 1 && unresolved == 0)
    out << "unique survivor: " << realized[0] << '\n';
  else {
    out << "realized: " << (realized.empty() ? "none" : join_list(realized, ", "))
        << '\n';
    if (unresolved > 0) out << "unresolved: " << unresolved << '\n';
  }
  if (!r.notes.empty()) {
    out << "notes:\n";
    for (const auto& note : r.notes) out << "  - " << note << '\n';
  }
}

void print_classification_structured(std::ostream& out,
                                     const classify::ClassificationReport& r,
                                     const std::string& prefix) {
  section(out, prefix, "classification");
  kv(out, "k", static_cast<std::uint64_t>(r.k));
  kv(out, "hypothesis", r.solvable ? "solvable" : "general");
  if (!r.scope_note.empty()) kv(out, "scope", r.scope_note);
  kv(out, "orders_examined", join_list(r.orders_examined, ","));
  if (!r.orders_skipped.empty())
    kv(out, "orders_skipped", join_list(r.orders_skipped, ","));
  for (const auto& [n, size] : r.census_sizes)
    kv(out, "census", std::to_string(n) + "," + std::to_string(size));
  for (const auto& s : r.survivors) {
    section(out, prefix, "survivor");
    kv(out, "name", s.name);
    kv(out, "status", classify::status_label(s.status));
    kv(out, "canonical", canonical_form(s.graph).hex());
    if (!s.citation.empty()) kv(out, "citation", s.citation);
  }
  for (const auto& ex : r.exclusions) {
    section(out, prefix, "exclusion");
    kv(out, "name", ex.name);
    kv(out, "reason", ex.reason);
  }

  std::vector<std::string> realized;
  int unresolved = 0;
  for (const auto& s : r.survivors) {
    if (s.status == classify::Status::realized) realized.push_back(s.name);
    if (s.status == classify::Status::unresolved) ++unresolved;
  }
  section(out, prefix, "summary");
  kv(out, "realized", realized.empty() ? "none" : join_list(realized, ","));
  kv(out, "unresolved", static_cast<std::uint64_t>(unresolved));
  if (realized.size() == 1 && unresolved == 0) kv(out, "unique_survivor", realized[0]);
  if (!r.notes.empty()) {
    section(out, prefix, "notes");
    for (const auto& note : r.notes) kv(out, "note", note);
  }
}

struct SuiteTally {
  int checks = 0;
  int failures = 0;
  int skipped = 0;

  void add(const SuiteTally& other) {
    checks += other.checks;
    failures += other.failures;
    skipped += other.skipped;
  }
};

SuiteTally run_suite_references(std::ostream& out, std::ostream& err) {
  SuiteTally t;
  out << "verify: reference graph library\n";
  for (const auto& c : classify::reference_graph_checks()) {
    ++t.checks;
    if (c.ok) {
      out << "ok: " << c.name << ": " << c.property << '\n';
    } else {
      ++t.failures;
      err << "check-failed: " << c.name << ": " << c.property << '\n';
    }
  }
  return t;
}

SuiteTally run_suite_handshake(std::ostream& out, std::ostream& err) {
  SuiteTally t;
  out << "verify: handshake parity\n";

  int graphs = 0;
  bool even = true;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : census::all_graphs_up_to_iso(n)) {
      ++graphs;
      if (odd_vertex_count(g) % 2 != 0) even = false;
    }
  ++t.checks;
  if (even) {
    out << "ok: every graph on <= 7 vertices has an even number of odd-degree "
           "vertices ("
        << graphs << " graphs)\n";
  } else {
    ++t.failures;
    err << "check-failed: a graph on <= 7 vertices has an odd number of "
           "odd-degree vertices\n";
  }

  static const std::pair<int, int> odd_pairs[] = {{5, 3},  {7, 3}, {9, 3},
                                                  {7, 5},  {9, 5}, {9, 7}};
  for (const auto& [n, k] : odd_pairs) {
    ++t.checks;
    auto census_result = census::enumerate_regular_connected(n, k);
    if (census_result.graphs.empty() && !census_result.note.empty()) {
      out << "ok: " << k << "-regular census on " << n
          << " vertices is empty by parity\n";
    } else {
      ++t.failures;
      err << "check-failed: " << k << "-regular census on " << n
          << " vertices should be empty by parity\n";
    }
  }
  return t;
}

SuiteTally run_suite_brooks(std::ostream& out, std::ostream& err) {
  SuiteTally t;
  out << "verify: Brooks bound\n";
  auto check = classify::verify_brooks_bound(8);
  ++t.checks;
  if (check.ok) {
    out << "ok: n <= alpha * d and chi <= d for every K_{d+1}-free graph with "
           "max degree d >= 3 on <= 8 vertices ("
        << check.graphs_checked << " graphs)\n";
  } else {
    ++t.failures;
    err << "check-failed: Brooks bound has a counterexample on <= 8 vertices: "
        << classify::describe(*check.counterexample) << '\n';
  }

  // Order 9 is past the exhaustive sweep, so cover the one slice the
  // classification could meet there: connected graphs of max degree 3.
  std::size_t checked = 0;
  std::optional<SmallGraph> counterexample;
  for (const auto& g : census::bounded_degree_up_to_iso(9, 3)) {
    if (!is_connected(g)) continue;
    auto inv = invariants(g);
    if (inv.max_degree != 3 || !is_kt_free(g, 4)) continue;
    ++checked;
    if (inv.chromatic_number > 3 || g.order() > inv.independence_number * 3)
      counterexample = g;
  }
  ++t.checks;
  if (!counterexample) {
    out << "ok: same bounds for every connected K4-free graph with max degree 3 "
           "on 9 vertices ("
        << checked << " graphs)\n";
  } else {
    ++t.failures;
    err << "check-failed: Brooks bound has a counterexample on 9 vertices: "
        << classify::describe(*counterexample) << '\n';
  }
  return t;
}

SuiteTally run_suite_indices(std::ostream& out, std::ostream& err) {
  SuiteTally t;
  out << "verify: maximal subgroup indices\n";
  for (const auto& row : classify::index_prime_power_window(10, 31)) {
    if (!row.hypothesis) {
      ++t.skipped;
      out << "skipped: f = " << row.f << ": two-prime hypothesis fails (pi(2^f-1) = "
          << row.pi_minus << ", pi(2^f+1) = " << row.pi_plus << ")\n";
      continue;
    }
    ++t.checks;
    if (row.none_is_prime_power) {
      out << "ok: f = " << row.f << ": no index of PSL2(2^" << row.f
          << ") is a prime power\n";
    } else {
      ++t.failures;
      err << "check-failed: f = " << row.f << ": index " << row.witness
          << " is a prime power\n";
    }
  }
  return t;
}

SuiteTally run_suite_product_law(std::ostream& out, std::ostream& err) {
  SuiteTally t;
  out << "verify: product law\n";
  constexpr int kTrials = 1000;
  int failures = primegraph::product_join_trials(kTrials, 97531);
  ++t.checks;
  if (failures == 0) {
    out << "ok: product graph equals the join of the factor graphs for "
        << kTrials << " random disjoint-support pairs\n";
  } else {
    t.failures += 1;
    err << "check-failed: product/join law failed for " << failures << " of "
        << kTrials << " random pairs\n";
  }
  return t;
}

int run_graph(const primegraph::PrimeGraph& pg, const std::string& format,
              std::ostream& out) {
  if (format == "dot")
    out << to_dot(pg.graph);
  else if (format == "structured")
    print_graph_structured(out, pg);
  else
    print_graph_text(out, pg);
  return 0;
}

int run_census(int n, int k, const std::vector<std::string>& constraint_tokens,
               const std::string& format, std::ostream& out) {
  auto census_result = census::enumerate_regular_connected(n, k);
  std::vector<census::Constraint> constraints;
  for (const auto& token : constraint_tokens)
    constraints.push_back(census::parse_constraint(token));
  auto filtered = census::filter_census(census_result.graphs, constraints);
  const auto& shown = constraints.empty() ? census_result.graphs : filtered.survivors;

  if (format == "dot") {
    for (std::size_t i = 0; i < shown.size(); ++i) {
      if (i > 0) out << '\n';
      out << to_dot(shown[i]);
    }
    return 0;
  }

  if (format == "structured") {
    section(out, "", "census");
    kv(out, "n", static_cast<std::uint64_t>(n));
    kv(out, "k", static_cast<std::uint64_t>(k));
    if (!census_result.note.empty()) kv(out, "note", census_result.note);
    kv(out, "count", static_cast<std::uint64_t>(census_result.graphs.size()));
    if (!constraints.empty()) {
      kv(out, "constraints", join_list(constraint_tokens, ","));
      kv(out, "survivors", static_cast<std::uint64_t>(filtered.survivors.size()));
    }
    for (const auto& g : shown) {
      auto inv = invariants(g);
      section(out, "", "graph");
      kv(out, "name", classify::describe(g));
      kv(out, "canonical", canonical_form(g).hex());
      kv(out, "triangles", static_cast<std::uint64_t>(inv.triangle_count));
      kv(out, "alpha", static_cast<std::uint64_t>(inv.independence_number));
    }
    if (!constraints.empty())
      for (const auto& ex : filtered.exclusions) {
        section(out, "", "excluded");
        kv(out, "name", classify::describe(ex.graph));
        kv(out, "reason", ex.reason);
      }
    return 0;
  }

  out << "census: connected " << k << "-regular graphs on " << n << " vertices\n";
  if (!census_result.note.empty()) out << "note: " << census_result.note << '\n';
  out << "graphs: " << census_result.graphs.size() << '\n';
  if (!constraints.empty()) {
    out << "constraints: " << join_list(constraint_tokens, ", ") << '\n';
    out << "survivors: " << filtered.survivors.size() << '\n';
  }
  for (std::size_t i = 0; i < shown.size(); ++i) {
    auto inv = invariants(shown[i]);
    out << "  " << (i + 1) << ". " << classify::describe(shown[i]) << "  (triangles "
        << inv.triangle_count << ", alpha " << inv.independence_number << ")\n";
  }
  if (!constraints.empty() && !filtered.exclusions.empty()) {
    out << "excluded: " << filtered.exclusions.size() << '\n';
    for (const auto& ex : filtered.exclusions)
      out << "  " << classify::describe(ex.graph) << "  (" << ex.reason << ")\n";
  }
  return 0;
}

int run_construct(int k, const std::vector<std::uint64_t>& primes,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  auto built = primegraph::construct_k_regular(k, primes);
  const SmallGraph& g = built.graph.graph;

  if (format == "dot") {
    out << to_dot(g);
    return 0;
  }

  auto inv = invariants(g);
  const bool regular_ok = inv.regular_k && *inv.regular_k == k;
  SmallGraph co = g.complement();
  bool cocktail = g.order() == k + 2;
  for (int v = 0; v < co.order(); ++v)
    if (co.degree(v) != 1) cocktail = false;

  if (format == "structured") {
    section(out, "", "construction");
    kv(out, "k", static_cast<std::uint64_t>(k));
    kv(out, "order", static_cast<std::uint64_t>(g.order()));
    kv(out, "factors", built.descriptor.describe());
    kv(out, "degrees", static_cast<std::uint64_t>(built.graph.degree_set.values().size()));
    for (auto id : sorted_ids(g)) kv(out, "vertex", id);
    for (const auto& [a, b] : edge_ids(g))
      kv(out, "edge", std::to_string(a) + "," + std::to_string(b));
    kv(out, "shape", classify::describe(g));
    kv(out, "k_regular", yn(regular_ok));
    kv(out, "cocktail_party", yn(cocktail));
  } else {
    out << "construction: " << k << "-regular prime graph on " << g.order()
        << " vertices\n";
    out << "factors: " << built.descriptor.describe() << '\n';
    out << "degrees: " << built.graph.degree_set.values().size() << " values\n";
    out << "vertices (" << g.order() << "):";
    for (auto id : sorted_ids(g)) out << ' ' << id;
    out << '\n';
    out << "edges (" << g.edge_count() << "):\n";
    print_edge_lines(out, g);
    out << "shape: " << classify::describe(g) << '\n';
    out << "k-regular: " << yn(regular_ok) << '\n';
    out << "cocktail party K_" << (k + 2) / 2 << "x2: "
        << (cocktail ? "confirmed" : "NOT confirmed") << '\n';
  }

  if (!regular_ok || !cocktail) {
    err << "check-failed: construction for k = " << k
        << " is not a k-regular cocktail party graph\n";
    return 2;
  }
  return 0;
}

int run_scan(std::uint64_t q_max, const std::string& format, std::ostream& out,
             std::ostream& err) {
  auto rows = classify::psl2_k4_scan(q_max);
  std::size_t mismatches = 0;
  std::uint64_t first_k4 = 0;
  for (const auto& row : rows) {
    if (!row.matches_bound) ++mismatches;
    if (!row.k4_free && first_k4 == 0) first_k4 = row.q;
  }

  if (format == "structured") {
    section(out, "", "scan");
    kv(out, "qmax", q_max);
    kv(out, "rows", static_cast<std::uint64_t>(rows.size()));
    kv(out, "mismatches", static_cast<std::uint64_t>(mismatches));
    kv(out, "first_k4", first_k4 == 0 ? "none" : std::to_string(first_k4));
    for (const auto& row : rows)
      kv(out, "row", std::to_string(row.q) + "," + std::to_string(row.pi_minus) + "," +
                         std::to_string(row.pi_plus) + "," + yn(row.k4_free) + "," +
                         (row.matches_bound ? "ok" : "mismatch"));
  } else {
    out << "scan: PSL2(q) K4-freeness for prime powers q in [4, " << q_max << "]\n";
    out << std::setw(8) << "q" << std::setw(9) << "pi(q-1)" << std::setw(9)
        << "pi(q+1)" << std::setw(9) << "K4-free" << std::setw(10) << "bound" << '\n';
    for (const auto& row : rows)
      out << std::setw(8) << row.q << std::setw(9) << row.pi_minus << std::setw(9)
          << row.pi_plus << std::setw(9) << yn(row.k4_free) << std::setw(10)
          << (row.matches_bound ? "ok" : "MISMATCH") << '\n';
    out << "summary: " << rows.size() << " prime powers; ";
    if (first_k4 == 0)
      out << "no K4 in range; ";
    else
      out << "first K4 at q = " << first_k4 << "; ";
    out << mismatches << " bound mismatches\n";
  }

  if (mismatches > 0) {
    for (const auto& row : rows)
      if (!row.matches_bound)
        err << "check-failed: K4-freeness bound mismatch at q = " << row.q << '\n';
    return 2;
  }
  return 0;
}

int run_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
  SuiteTally t;
  if (suite == "references" || suite == "all") t.add(run_suite_references(out, err));
  if (suite == "handshake" || suite == "all") t.add(run_suite_handshake(out, err));
  if (suite == "brooks" || suite == "all") t.add(run_suite_brooks(out, err));
  if (suite == "indices" || suite == "all") t.add(run_suite_indices(out, err));
  if (suite == "product-law" || suite == "all") t.add(run_suite_product_law(out, err));

  out << "summary: " << t.checks << " checks, " << t.failures << " failures";
  if (t.skipped > 0) out << ", " << t.skipped << " skipped";
  out << '\n';
  return t.failures > 0 ? 2 : 0;
}

int run_report(const std::string& format, std::ostream& out, std::ostream& err) {
  auto report = classify::cubic_classification_report();

  std::vector<int> hypothesis_fails;
  int hypothesis_holds = 0;
  std::size_t prime_power_hits = 0;
  for (const auto& row : report.index_window) {
    if (!row.hypothesis) {
      hypothesis_fails.push_back(row.f);
      continue;
    }
    ++hypothesis_holds;
    if (!row.none_is_prime_power) ++prime_power_hits;
  }
  std::vector<std::string> k4_groups;
  for (const auto& check : report.group_checks)
    if (!check.k4_free) k4_groups.push_back(check.name);

  if (format == "structured") {
    section(out, "", "report");
    kv(out, "title", "cubic prime graph classification");
    kv(out, "sections", "solvable,general,references,scan,indices,groups,notes");
    print_classification_structured(out, report.solvable, "solvable");
    print_classification_structured(out, report.general, "general");
    section(out, "", "references");
    kv(out, "checks", static_cast<std::uint64_t>(classify::reference_graph_checks().size()));
    kv(out, "ok", yn(report.references_ok));
    section(out, "", "scan");
    kv(out, "qmax", std::uint64_t{8192});
    kv(out, "rows", static_cast<std::uint64_t>(report.scan_rows));
    kv(out, "mismatches", static_cast<std::uint64_t>(report.scan_mismatches));
    kv(out, "first_k4",
       report.first_k4_q == 0 ? "none" : std::to_string(report.first_k4_q));
    section(out, "", "indices");
    kv(out, "f_lo", std::uint64_t{10});
    kv(out, "f_hi", std::uint64_t{31});
    kv(out, "hypothesis_holds", static_cast<std::uint64_t>(hypothesis_holds));
    kv(out, "hypothesis_fails", join_list(hypothesis_fails, ","));
    kv(out, "prime_power_hits", static_cast<std::uint64_t>(prime_power_hits));
    section(out, "", "groups");
    for (const auto& check : report.group_checks)
      kv(out, "group", check.name + "," + std::to_string(check.graph_order) + "," +
                           std::to_string(check.max_degree) + "," + yn(check.k4_free));
    kv(out, "k4_groups", k4_groups.empty() ? "none" : join_list(k4_groups, ","));
    section(out, "", "notes");
    for (const auto& note : report.notes) kv(out, "note", note);
  } else {
    out << "cubic prime graph classification\n";
    out << "================================\n\n";

    out << "1. solvable hypothesis\n";
    out << "----------------------\n";
    print_classification_text(out, report.solvable);
    out << '\n';

    out << "2. general hypothesis\n";
    out << "---------------------\n";
    print_classification_text(out, report.general);
    out << '\n';

    out << "3. reference graph library\n";
    out << "--------------------------\n";
    out << "caption checks: " << classify::reference_graph_checks().size()
        << ", all pass: " << yn(report.references_ok) << "\n\n";

    out << "4. PSL2(q) K4-freeness scan\n";
    out << "---------------------------\n";
    out << "prime powers q in [4, 8192]: " << report.scan_rows << '\n';
    out << "bound mismatches (K4-free vs |pi(q-1)|, |pi(q+1)| <= 3): "
        << report.scan_mismatches << '\n';
    out << "first q whose graph contains K4: "
        << (report.first_k4_q == 0 ? "none" : std::to_string(report.first_k4_q))
        << "\n\n";

    out << "5. maximal subgroup index window\n";
    out << "--------------------------------\n";
    out << "f in [10, 31]; the window stops at 31 so each index fits in 64 bits\n";
    out << "two-prime hypothesis holds for " << hypothesis_holds << " of "
        << report.index_window.size() << " exponents (fails at f = "
        << join_list(hypothesis_fails, ", ") << ")\n";
    out << "prime-power indices among hypothesis exponents: "
        << (prime_power_hits == 0 ? "none" : std::to_string(prime_power_hits))
        << "\n\n";

    out << "6. group spot checks\n";
    out << "--------------------\n";
    std::size_t width = 4;
    for (const auto& check : report.group_checks)
      width = std::max(width, check.name.size());
    out << std::setw(static_cast<int>(width)) << "name" << std::setw(10) << "vertices"
        << std::setw(12) << "max degree" << std::setw(9) << "K4-free" << '\n';
    for (const auto& check : report.group_checks)
      out << std::setw(static_cast<int>(width)) << check.name << std::setw(10)
          << check.graph_order << std::setw(12) << check.max_degree << std::setw(9)
          << yn(check.k4_free) << '\n';
    out << "groups whose graph contains K4: "
        << (k4_groups.empty() ? "none" : join_list(k4_groups, ", ")) << "\n\n";

    out << "7. notes\n";
    out << "--------\n";
    for (const auto& note : report.notes) out << "- " << note << '\n';
  }

  int failures = 0;
  if (!report.references_ok) {
    ++failures;
    err << "check-failed: a reference graph violates its caption invariants\n";
  }
  if (report.scan_mismatches > 0) {
    ++failures;
    err << "check-failed: " << report.scan_mismatches
        << " K4-freeness bound mismatches in the scan\n";
  }
  if (prime_power_hits > 0) {
    ++failures;
    err << "check-failed: a maximal subgroup index in the window is a prime power\n";
  }
  return failures > 0 ? 2 : 0;
}

}  // namespace

std::string to_dot(const SmallGraph& g) {
  std::ostringstream s;
  s << "graph {\n";
  for (auto id : sorted_ids(g)) s << "  " << id << ";\n";
  for (const auto& [a, b] : edge_ids(g)) s << "  " << a << " -- " << b << ";\n";
  s << "}\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prime graphs of character degree sets"};
  app.name("cdgraph");
  app.require_subcommand(1);

  std::string format = "text";
  const auto wide_formats = CLI::IsMember({"text", "dot", "structured"});
  const auto flat_formats = CLI::IsMember({"text", "structured"});

  auto* graph_cmd = app.add_subcommand("graph", "prime graph of one degree set");
  std::string group_name;
  std::uint64_t psl2_q = 0;
  std::uint64_t suzuki_q2 = 0;
  std::vector<std::uint64_t> degree_values;
  std::string data_path;
  graph_cmd->add_option("--group", group_name, "tabulated group name");
  graph_cmd->add_option("--psl2", psl2_q, "prime power q >= 4");
  graph_cmd->add_option("--suzuki", suzuki_q2, "odd power of two 2^(2m+1), m >= 1");
  graph_cmd->add_option("--degrees", degree_values, "degree values, comma separated")
      ->delimiter(',');
  graph_cmd->add_option("--data", data_path, "degree table file replacing the builtin data");
  graph_cmd->add_option("--format", format, "text, dot, or structured")
      ->check(wide_formats);

  auto* census_cmd = app.add_subcommand("census", "connected regular graph census");
  int census_n = 0;
  int census_k = 0;
  std::vector<std::string> constraint_tokens;
  census_cmd->add_option("--n", census_n, "graph order")->required();
  census_cmd->add_option("--k", census_k, "valency")->required();
  census_cmd
      ->add_option("--constraints", constraint_tokens,
                   "filter tokens, e.g. triangle,alpha<=3,k4free")
      ->delimiter(',');
  census_cmd->add_option("--format", format, "text, dot, or structured")
      ->check(wide_formats);

  auto* classify_cmd =
      app.add_subcommand("classify", "survivor pipeline for k-regular prime graphs");
  int classify_k = 0;
  std::string hypothesis;
  classify_cmd->add_option("--k", classify_k, "valency, 0 through 4")
      ->required()
      ->check(CLI::Range(0, 4));
  classify_cmd->add_option("--hypothesis", hypothesis, "solvable or general")
      ->required()
      ->check(CLI::IsMember({"solvable", "general"}));
  classify_cmd->add_option("--format", format, "text or structured")->check(flat_formats);

  auto* scan_cmd = app.add_subcommand("scan-psl2", "K4-freeness scan over PSL2(q)");
  std::uint64_t q_max = 0;
  scan_cmd->add_option("--qmax", q_max, "largest q to scan")->required();
  scan_cmd->add_option("--format", format, "text or structured")->check(flat_formats);

  auto* construct_cmd =
      app.add_subcommand("construct", "k-regular prime graph from solvable blocks");
  int construct_k = 0;
  std::vector<std::uint64_t> prime_supply;
  construct_cmd->add_option("--k", construct_k, "even valency, 2 through 14")->required();
  construct_cmd->add_option("--primes", prime_supply, "prime supply, comma separated")
      ->delimiter(',');
  construct_cmd->add_option("--format", format, "text, dot, or structured")
      ->check(wide_formats);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd
      ->add_option("--suite", suite,
                   "references, brooks, handshake, indices, product-law, or all")
      ->required()
      ->check(CLI::IsMember(
          {"references", "brooks", "handshake", "indices", "product-law", "all"}));

  auto* report_cmd =
      app.add_subcommand("report", "consolidated cubic classification document");
  report_cmd->add_option("--format", format, "text or structured")->check(flat_formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.size() == 1 ? parsed[0]->help() : app.help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*graph_cmd) {
      const int sources = (graph_cmd->count("--group") ? 1 : 0) +
                          (graph_cmd->count("--psl2") ? 1 : 0) +
                          (graph_cmd->count("--suzuki") ? 1 : 0) +
                          (graph_cmd->count("--degrees") ? 1 : 0);
      if (sources != 1) {
        err << "error: graph needs exactly one of --group, --psl2, --suzuki, "
               "--degrees\n";
        return 1;
      }
      primegraph::PrimeGraph pg;
      if (graph_cmd->count("--degrees")) {
        pg = primegraph::build_prime_graph(degrees::DegreeSet::from_values(degree_values));
      } else {
        degrees::GroupDescriptor descriptor;
        if (graph_cmd->count("--group"))
          descriptor = degrees::GroupDescriptor::tabulated(group_name);
        else if (graph_cmd->count("--psl2"))
          descriptor = degrees::GroupDescriptor::psl2(psl2_q);
        else
          descriptor = degrees::GroupDescriptor::suzuki(suzuki_q2);
        if (data_path.empty()) {
          pg = primegraph::build_prime_graph(descriptor);
        } else {
          std::ifstream in(data_path);
          if (!in) {
            err << "error: cannot open data file " << data_path << '\n';
            return 1;
          }
          auto table = degrees::DegreeTable::parse(in);
          pg = primegraph::build_prime_graph(descriptor, table);
        }
      }
      return run_graph(pg, format, out);
    }
    if (*census_cmd) return run_census(census_n, census_k, constraint_tokens, format, out);
    if (*classify_cmd) {
      auto report = classify::classify_regular_candidates(classify_k, hypothesis == "solvable");
      if (format == "structured")
        print_classification_structured(out, report, "");
      else
        print_classification_text(out, report);
      return 0;
    }
    if (*scan_cmd) return run_scan(q_max, format, out, err);
    if (*construct_cmd) return run_construct(construct_k, prime_supply, format, out, err);
    if (*verify_cmd) return run_verify(suite, out, err);
    if (*report_cmd) return run_report(format, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace cdg::cli
