#ifndef CDG_INVARIANTS_HPP
#define CDG_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cdg/small_graph.hpp"

namespace cdg {

/// The graph parameters the verification pipelines consume. Everything is
/// computed by complete search, never by heuristics: at 16 vertices the
/// branch-and-bound solvers are exact and instant.
struct GraphInvariants {
  std::vector<int> degree_sequence;  // ascending
  int max_degree = 0;
  std::optional<int> regular_k;      // set when every degree is equal
  std::vector<int> component_sizes;  // ascending
  std::optional<int> diameter;       // absent when disconnected
  int triangle_count = 0;
  int independence_number = 0;
  int chromatic_number = 0;
  int clique_number = 0;
  int odd_vertex_count = 0;
};

GraphInvariants invariants(const SmallGraph& g);

int independence_number(const SmallGraph& g);
int clique_number(const SmallGraph& g);
int chromatic_number(const SmallGraph& g);
int triangle_count(const SmallGraph& g);
int odd_vertex_count(const SmallGraph& g);

/// A maximum independent set (vertex list, ascending).
std::vector<int> max_independent_set(const SmallGraph& g);

/// Some clique on t vertices if one exists. t >= 1.
std::optional<std::vector<int>> find_clique(const SmallGraph& g, int t);

/// True iff g has no complete subgraph on t vertices. Requires t >= 3
/// (t = 3 is triangle-freeness).
bool is_kt_free(const SmallGraph& g, int t);

bool is_connected(const SmallGraph& g);

/// Vertex masks of the connected components, smallest vertex first.
std::vector<std::uint32_t> component_masks(const SmallGraph& g);

std::optional<int> diameter(const SmallGraph& g);

/// BFS distance between two vertices, or -1 if unreachable.
int distance(const SmallGraph& g, int from, int to);

}  // namespace cdg

#endif  // CDG_INVARIANTS_HPP
