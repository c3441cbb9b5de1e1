#include "cdg/classify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cdg/arith.hpp"
#include "cdg/canonical.hpp"
#include "cdg/census.hpp"
#include "cdg/degrees.hpp"
#include "cdg/invariants.hpp"
#include "cdg/prime_graph.hpp"
#include "cdg/reference_graphs.hpp"

namespace cdg::classify {

namespace {

constexpr int kCensusOrderCap = 10;

bool is_complete(const SmallGraph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

bool complement_is_perfect_matching(const SmallGraph& g) {
  if (g.order() % 2 != 0) return false;
  SmallGraph co = g.complement();
  for (int v = 0; v < co.order(); ++v)
    if (co.degree(v) != 1) return false;
  return true;
}

SurvivorEntry make_survivor(const SmallGraph& g, int k, bool solvable) {
  SurvivorEntry e{g, describe(g), Status::unresolved, ""};
  const int n = g.order();

  if (is_complete(g)) {
    e.status = Status::realized;
    if (k == 3 && !solvable)
      e.citation = "the alternating group A7, degrees {1,6,10,14,15,21,35}, has prime graph K4";
    else
      e.citation = "a solvable group with one nonlinear degree divisible by " +
                   std::to_string(k + 1) + " distinct primes has a complete prime graph";
    return e;
  }

  if (k == 2) {
    if (n == 4) {
      e.status = Status::realized;
      e.citation = "direct product of two solvable groups with disjoint two-prime degree "
                   "sets; the join of their prime graphs is a square";
    } else {
      e.status = Status::excluded_by_group_theory;
      e.citation = "no finite group has a cycle of length five or more as its prime graph";
    }
    return e;
  }

  if (k == 3) {
    e.status = Status::excluded_by_group_theory;
    if (solvable) {
      e.citation = "a solvable group with this prime graph would satisfy G' = G'', "
                   "forcing the derived series to stall above the trivial group";
    } else if (n == 6) {
      e.citation = "solvable groups are ruled out by the derived-series argument (G' = G''); "
                   "nonsolvable groups reduce to almost simple groups with socle PSL2(q), "
                   "none of which has this prime graph";
    } else {
      e.citation = "solvable groups are ruled out by Palfy's independence bound; "
                   "nonsolvable groups reduce to almost simple groups with socle PSL2(q), "
                   "none of which has this prime graph";
    }
    return e;
  }

  if (k >= 4 && k % 2 == 0 && n == k + 2 && complement_is_perfect_matching(g)) {
    e.status = Status::realized;
    e.citation = "product of two-prime solvable blocks; the joined prime graph is the "
                 "cocktail party graph of order k + 2";
    return e;
  }

  e.citation = "no realizability claim in the conjecture range";
  return e;
}

const char* edgeless_citation(int n) {
  switch (n) {
    case 1:
      return "any nonabelian prime-power-order group: one prime divides every "
             "nonlinear degree";
    case 2:
      return "solvable groups with two degree primes and no degree divisible by both "
             "(two disjoint prime-power degree blocks)";
    default:
      return "PSL2(4), degrees {1,3,4,5}: three isolated vertices";
  }
}

}  // namespace

std::string status_label(Status s) {
  switch (s) {
    case Status::realized:
      return "realized";
    case Status::excluded_by_group_theory:
      return "excluded (group theory)";
    case Status::unresolved:
      return "unresolved";
  }
  return "?";
}

namespace {

// Classical shapes that show up in the censuses but are not part of the
// curated reference library: the cube and the Wagner graph are the two
// triangle-free connected cubic graphs on 8 vertices.
const std::vector<ReferenceGraph>& extra_named_shapes() {
  static const std::vector<ReferenceGraph> shapes = [] {
    std::vector<ReferenceGraph> out;
    SmallGraph cube = SmallGraph::cycle(8);
    cube.add_edge(0, 3);
    cube.add_edge(1, 6);
    cube.add_edge(2, 5);
    cube.add_edge(4, 7);
    out.push_back({"cube", cube});
    SmallGraph wagner = SmallGraph::cycle(8);
    for (int i = 0; i < 4; ++i) wagner.add_edge(i, i + 4);
    out.push_back({"Wagner graph", wagner});
    return out;
  }();
  return shapes;
}

}  // namespace

namespace {

SmallGraph induced(const SmallGraph& g, std::uint32_t mask) {
  std::vector<int> verts;
  for (int v = 0; v < g.order(); ++v)
    if ((mask >> v & 1u) != 0) verts.push_back(v);
  SmallGraph out = SmallGraph::edgeless(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace

std::string describe(const SmallGraph& g) {
  const int n = g.order();
  if (n == 0) return "empty graph";
  if (is_complete(g)) return "K" + std::to_string(n);
  if (g.edge_count() == 0) return std::to_string(n) + " isolated vertices";

  auto comps = component_masks(g);
  if (comps.size() >= 2) {
    std::string sum;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i > 0) sum += " + ";
      sum += describe(induced(g, comps[i]));
    }
    return sum;
  }

  bool two_regular = true;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) two_regular = false;
  if (two_regular && is_connected(g)) return "C" + std::to_string(n);

  if (n <= 8) {
    CanonicalForm cf = canonical_form(g);
    for (const auto& ref : reference_graphs())
      if (ref.graph.order() == n && canonical_form(ref.graph) == cf) return ref.name;
    for (const auto& ref : extra_named_shapes())
      if (ref.graph.order() == n && canonical_form(ref.graph) == cf) return ref.name;
  }

  // Complete multipartite shapes are the complements of disjoint clique
  // unions; naming them here keeps the automorphism-heavy cases (cocktail
  // parties in particular) away from the canonical-form search.
  SmallGraph co = g.complement();
  auto parts = component_masks(co);
  bool partitioned = parts.size() >= 2;
  std::vector<int> sizes;
  for (std::uint32_t mask : parts) {
    int size = std::popcount(mask);
    sizes.push_back(size);
    for (int v = 0; v < n; ++v)
      if ((mask >> v & 1u) != 0 && co.degree(v) != size - 1) partitioned = false;
  }
  if (partitioned) {
    std::sort(sizes.begin(), sizes.end());
    if (sizes.front() == 2 && sizes.back() == 2)
      return "cocktail party K_" + std::to_string(n / 2) + "x2";
    std::string part_list;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i > 0) part_list += ",";
      part_list += std::to_string(sizes[i]);
    }
    if (sizes.size() == 2) return "K" + part_list;
    return "complete multipartite K" + part_list;
  }

  return "graph " + canonical_form(g).hex();
}

ClassificationReport classify_regular_candidates(int k, bool solvable) {
  if (k < 0) throw std::invalid_argument("classify_regular_candidates: negative valency");
  if (k + 1 > kCensusOrderCap)
    throw std::invalid_argument(
        "classify_regular_candidates: k-regular graphs need order at least k + 1 = " +
        std::to_string(k + 1) + ", beyond the " + std::to_string(kCensusOrderCap) +
        "-vertex census");

  ClassificationReport r;
  r.k = k;
  r.solvable = solvable;
  if (k == 4)
    r.scope_note = "conjecture exploration";
  else if (k > 4)
    r.scope_note = "beyond the classified range (conjecture exploration)";

  if (k == 0) {
    r.notes.push_back(
        "a disconnected regular prime graph is edgeless, so the k = 0 candidates are "
        "the edgeless graphs; component bounds cap the order at 3 (2 for solvable groups)");
    const int n_max = solvable ? 2 : 3;
    for (int n = 1; n <= n_max; ++n) {
      r.orders_examined.push_back(n);
      r.census_sizes.emplace_back(n, 1);
      SmallGraph g = SmallGraph::edgeless(n);
      r.survivors.push_back({g, describe(g), Status::realized, edgeless_citation(n)});
    }
    return r;
  }

  r.notes.push_back(
      "disconnected regular prime graphs occur only for k = 0, so the census "
      "enumerates connected graphs");

  std::vector<census::Constraint> constraints;
  constraints.push_back({census::Constraint::Kind::alpha_at_most, solvable ? 2 : 3});
  if (k == 3 && !solvable)
    constraints.push_back({census::Constraint::Kind::triangle_required, 0});

  const int hi = solvable ? 2 * k : 3 * k;
  for (int n = k + 1; n <= hi; ++n) {
    if (k % 2 == 1 && n % 2 == 1) continue;
    if (n > kCensusOrderCap) {
      r.orders_skipped.push_back(n);
      continue;
    }
    r.orders_examined.push_back(n);
    auto cr = census::enumerate_regular_connected(n, k);
    r.census_sizes.emplace_back(n, cr.graphs.size());
    if (!cr.note.empty()) r.notes.push_back("order " + std::to_string(n) + ": " + cr.note);

    auto fr = census::filter_census(cr.graphs, constraints);
    for (const auto& g : fr.survivors) r.survivors.push_back(make_survivor(g, k, solvable));
    for (const auto& ex : fr.exclusions)
      r.exclusions.push_back({ex.graph, describe(ex.graph), ex.reason});
  }

  if (!r.orders_skipped.empty()) {
    std::string list;
    for (std::size_t i = 0; i < r.orders_skipped.size(); ++i) {
      if (i > 0) list += ", ";
      list += std::to_string(r.orders_skipped[i]);
    }
    r.notes.push_back("orders beyond the " + std::to_string(kCensusOrderCap) +
                      "-vertex census were not examined: " + list);
  }
  return r;
}

BrooksCheck verify_brooks_bound(int n_max) {
  if (n_max < 1 || n_max > 8)
    throw std::invalid_argument("verify_brooks_bound: n_max must be in [1, 8]");
  BrooksCheck out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& g : census::all_graphs_up_to_iso(n)) {
      auto inv = invariants(g);
      const int d = inv.max_degree;
      if (d < 3) continue;
      if (find_clique(g, d + 1)) continue;
      ++out.graphs_checked;
      if (g.order() > inv.independence_number * d || inv.chromatic_number > d) {
        out.ok = false;
        out.counterexample = g;
        return out;
      }
    }
  }
  return out;
}

std::vector<Psl2ScanRow> psl2_k4_scan(std::uint64_t q_max) {
  if (q_max > (std::uint64_t{1} << 20))
    throw std::invalid_argument("psl2_k4_scan: q_max is capped at 2^20");
  std::vector<Psl2ScanRow> rows;
  for (std::uint64_t q = 4; q <= q_max; ++q) {
    if (!arith::is_prime_power(q)) continue;
    auto pg = primegraph::build_prime_graph(degrees::cd_psl2(q));
    Psl2ScanRow row;
    row.q = q;
    row.k4_free = is_kt_free(pg.graph, 4);
    row.pi_minus = static_cast<int>(arith::prime_divisors(q - 1).size());
    row.pi_plus = static_cast<int>(arith::prime_divisors(q + 1).size());
    row.matches_bound = row.k4_free == (row.pi_minus <= 3 && row.pi_plus <= 3);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReferenceCheck> reference_graph_checks() {
  struct Expect {
    const char* name;
    int order;
    int valency;
    int triangles;
    int alpha;
  };
  static const Expect expected[] = {
      {"triangular prism", 6, 3, 2, 2},
      {"cubic of order 8 with four triangles", 8, 3, 4, 3},
      {"cubic of order 8 with two triangles", 8, 3, 2, 3},
      {"cubic of order 8 with one triangle", 8, 3, 1, 3},
      {"octahedron", 6, 4, 8, 2},
  };

  std::vector<ReferenceCheck> out;
  const auto& refs = reference_graphs();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto& e = expected[i];
    const auto& g = refs[i].graph;
    auto inv = invariants(g);
    out.push_back({refs[i].name, "order " + std::to_string(e.order), g.order() == e.order});
    out.push_back({refs[i].name, std::to_string(e.valency) + "-regular",
                   inv.regular_k == e.valency});
    out.push_back({refs[i].name, std::to_string(e.triangles) + " triangle(s)",
                   inv.triangle_count == e.triangles});
    out.push_back({refs[i].name, "independence number " + std::to_string(e.alpha),
                   inv.independence_number == e.alpha});
  }

  bool distinct = true;
  for (std::size_t i = 0; i < refs.size(); ++i)
    for (std::size_t j = i + 1; j < refs.size(); ++j)
      if (is_isomorphic(refs[i].graph, refs[j].graph)) distinct = false;
  out.push_back({"library", "pairwise non-isomorphic", distinct});
  return out;
}

bool verify_reference_graphs() {
  for (const auto& c : reference_graph_checks())
    if (!c.ok) return false;
  return true;
}

std::vector<IndexWindowCheck> index_prime_power_window(int f_lo, int f_hi) {
  if (f_lo < 2 || f_hi > 31 || f_lo > f_hi)
    throw std::invalid_argument("index_prime_power_window: need 2 <= f_lo <= f_hi <= 31");
  std::vector<IndexWindowCheck> out;
  for (int f = f_lo; f <= f_hi; ++f) {
    IndexWindowCheck row;
    row.f = f;
    const std::uint64_t pf = std::uint64_t{1} << f;
    row.pi_minus = static_cast<int>(arith::prime_divisors(pf - 1).size());
    row.pi_plus = static_cast<int>(arith::prime_divisors(pf + 1).size());
    row.hypothesis = row.pi_minus >= 2 && row.pi_plus >= 2;
    auto scan = arith::no_prime_power_index(f);
    row.none_is_prime_power = scan.none_is_prime_power;
    if (scan.witness) row.witness = scan.witness->to_string();
    out.push_back(row);
  }
  return out;
}

CubicClassification cubic_classification_report() {
  CubicClassification out;
  out.solvable = classify_regular_candidates(3, true);
  out.general = classify_regular_candidates(3, false);
  out.references_ok = verify_reference_graphs();

  auto rows = psl2_k4_scan(8192);
  out.scan_rows = rows.size();
  for (const auto& row : rows) {
    if (!row.matches_bound) ++out.scan_mismatches;
    if (!row.k4_free && out.first_k4_q == 0) out.first_k4_q = row.q;
  }

  out.index_window = index_prime_power_window(10, 31);

  const auto& table = degrees::builtin_table();
  for (const auto& grp : table.groups()) {
    auto pg = primegraph::build_prime_graph(
        degrees::GroupDescriptor::tabulated(grp.name), table);
    GroupSpotCheck check;
    check.name = grp.name;
    check.graph_order = pg.graph.order();
    for (int v = 0; v < pg.graph.order(); ++v)
      check.max_degree = std::max(check.max_degree, pg.graph.degree(v));
    check.k4_free = is_kt_free(pg.graph, 4);
    out.group_checks.push_back(check);
  }

  out.notes.push_back(
      "graph orders in the group table count the distinct primes |pi(S)|; a source "
      "clause bounding pi(S) <= 4 is read as |pi(S)| <= 4, matching its neighboring "
      "clauses, without deciding intent");
  return out;
}

}  // namespace cdg::classify
