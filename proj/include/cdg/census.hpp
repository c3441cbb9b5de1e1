#ifndef CDG_CENSUS_HPP
#define CDG_CENSUS_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdg/small_graph.hpp"

namespace cdg::census {

/// Connected k-regular graphs on n vertices, one representative per
/// isomorphism class, in canonical layout and sorted by canonical form.
/// When n*k is odd the list is empty and `note` says why.
struct CensusResult {
  std::vector<SmallGraph> graphs;
  std::string note;
};

CensusResult enumerate_regular_connected(int n, int k);

namespace detail {

template <typename Pred, typename Visit>
void labeled_rows(std::array<std::uint16_t, 16>& adj, int n, int v,
                  Pred& pred, Visit& visit) {
  if (v == n) {
    SmallGraph g = SmallGraph::from_adjacency(n, adj);
    if (pred(g)) visit(g);
    return;
  }
  std::uint32_t limit = std::uint32_t{1} << v;
  for (std::uint32_t down = 0; down < limit; ++down) {
    adj[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(down);
    for (std::uint32_t m = down; m != 0; m &= m - 1) {
      adj[static_cast<std::size_t>(std::countr_zero(m))] |=
          static_cast<std::uint16_t>(limit);
    }
    labeled_rows(adj, n, v + 1, pred, visit);
    for (std::uint32_t m = down; m != 0; m &= m - 1) {
      adj[static_cast<std::size_t>(std::countr_zero(m))] &=
          static_cast<std::uint16_t>(~limit);
    }
  }
}

}  // namespace detail

/// Visits every labeled graph on n vertices exactly once, calling
/// visit(g) for those where pred(g) holds. No dedup; n <= 8 (2^28 graphs
/// at n = 8 is the ceiling). This is the slow exhaustive oracle the
/// generated censuses are checked against.
template <typename Pred, typename Visit>
void enumerate_all(int n, Pred&& pred, Visit&& visit) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_all: order must be in 1..8");
  std::array<std::uint16_t, 16> adj{};
  detail::labeled_rows(adj, n, 0, pred, visit);
}

/// All graphs on exactly n vertices up to isomorphism (n <= 8), built by
/// one-vertex extensions level by level with canonical dedup. Sorted by
/// canonical form.
std::vector<SmallGraph> all_graphs_up_to_iso(int n);

/// Same, restricted to maximum degree <= d throughout (n <= 9).
std::vector<SmallGraph> bounded_degree_up_to_iso(int n, int d);

/// One census filter step. Constraints are evaluated in a fixed order
/// regardless of how they are supplied (connected, regular, max degree,
/// triangle, independence bound, clique-freeness) so exclusion reasons
/// are reproducible.
struct Constraint {
  enum class Kind {
    connected,
    regular,
    max_degree,
    triangle_required,
    triangle_forbidden,
    alpha_at_most,
    kt_free,
  };

  Kind kind;
  int value = 0;  // valency, degree bound, alpha bound, or clique size t

  std::string name() const;
  bool satisfied(const SmallGraph& g) const;
};

/// Parses one constraint token: "connected", "triangle", "no-triangle",
/// "alpha<=N", "kNfree", "N-regular", "maxdeg<=N".
Constraint parse_constraint(const std::string& token);

struct FilterResult {
  struct Exclusion {
    SmallGraph graph;
    std::string reason;  // name of the first failed constraint
  };

  std::vector<SmallGraph> survivors;
  std::vector<Exclusion> exclusions;
};

FilterResult filter_census(const std::vector<SmallGraph>& graphs,
                           std::vector<Constraint> constraints);

}  // namespace cdg::census

#endif  // CDG_CENSUS_HPP
