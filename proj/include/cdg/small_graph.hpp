#ifndef CDG_SMALL_GRAPH_HPP
#define CDG_SMALL_GRAPH_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace cdg {

/// Undirected simple graph on at most 16 vertices. Adjacency is one 16-bit
/// mask per vertex, so neighborhood intersections and set operations in the
/// exact solvers are single machine-word instructions.
///
/// A graph may carry one label per vertex (a prime, when the graph is a
/// prime graph on character degrees). Labels are metadata: isomorphism,
/// canonical forms and all invariants ignore them.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 16;

  SmallGraph() = default;

  static SmallGraph edgeless(int n);
  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);  // n >= 3
  static SmallGraph path(int n);

  /// Wraps prebuilt adjacency rows without validation. For enumeration
  /// loops that construct millions of graphs; the rows must already be
  /// symmetric and loop-free.
  static SmallGraph from_adjacency(
      int n, const std::array<std::uint16_t, kMaxVertices>& adj);

  int order() const { return n_; }
  std::uint32_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const;
  int edge_count() const;

  /// Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  /// Vertex carrying the given label, or -1.
  int vertex_of_label(std::uint64_t p) const;

  SmallGraph complement() const;  // labels preserved
  /// Image under perm: vertex v of this graph becomes vertex perm[v].
  SmallGraph permuted(const std::vector<int>& perm) const;
  SmallGraph stripped() const;  // same graph, labels removed

  void add_edge(int u, int v);
  void set_labels(std::vector<std::uint64_t> labels);

  bool operator==(const SmallGraph&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
  std::vector<std::uint64_t> labels_;
};

/// Validating constructor: 1 <= n <= 16, endpoints in range, no loops.
/// Duplicate edges collapse. Labels, when given, must be n pairwise distinct
/// primes. Throws std::invalid_argument on any violation.
SmallGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::uint64_t>& labels = {});

/// Disjoint union on n_g + n_h vertices (must stay within 16).
SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h);

/// Join: disjoint union plus every cross edge. When both sides carry labels
/// the label sets must be disjoint; the result keeps them. If either side is
/// unlabeled the result is unlabeled.
SmallGraph join(const SmallGraph& g, const SmallGraph& h);

}  // namespace cdg

#endif  // CDG_SMALL_GRAPH_HPP
