#include "cdg/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "cdg/arith.hpp"

namespace cdg {

SmallGraph SmallGraph::edgeless(int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("edgeless: order out of range");
  SmallGraph g;
  g.n_ = n;
  return g;
}

SmallGraph SmallGraph::complete(int n) {
  SmallGraph g = edgeless(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph SmallGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  SmallGraph g = edgeless(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph SmallGraph::path(int n) {
  SmallGraph g = edgeless(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph SmallGraph::from_adjacency(
    int n, const std::array<std::uint16_t, kMaxVertices>& adj) {
  SmallGraph g = edgeless(n);
  g.adj_ = adj;
  return g;
}

int SmallGraph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int SmallGraph::vertex_of_label(std::uint64_t p) const {
  if (!labeled()) return -1;
  for (int v = 0; v < n_; ++v)
    if (labels_[static_cast<std::size_t>(v)] == p) return v;
  return -1;
}

SmallGraph SmallGraph::complement() const {
  SmallGraph g = *this;
  const std::uint16_t full = static_cast<std::uint16_t>((1u << n_) - 1u);
  for (int v = 0; v < n_; ++v)
    g.adj_[static_cast<std::size_t>(v)] =
        static_cast<std::uint16_t>((~adj_[static_cast<std::size_t>(v)] & full) & ~(1u << v));
  return g;
}

SmallGraph SmallGraph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: size mismatch");
  SmallGraph g;
  g.n_ = n_;
  for (int u = 0; u < n_; ++u) {
    std::uint16_t row = 0;
    for (int v = 0; v < n_; ++v)
      if (has_edge(u, v)) row = static_cast<std::uint16_t>(row | (1u << perm[static_cast<std::size_t>(v)]));
    g.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = row;
  }
  if (labeled()) {
    g.labels_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      g.labels_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
          labels_[static_cast<std::size_t>(v)];
  }
  return g;
}

SmallGraph SmallGraph::stripped() const {
  SmallGraph g = *this;
  g.labels_.clear();
  return g;
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  adj_[static_cast<std::size_t>(u)] = static_cast<std::uint16_t>(adj_[static_cast<std::size_t>(u)] | (1u << v));
  adj_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(adj_[static_cast<std::size_t>(v)] | (1u << u));
}

void SmallGraph::set_labels(std::vector<std::uint64_t> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("set_labels: need one label per vertex");
  labels_ = std::move(labels);
}

SmallGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::uint64_t>& labels) {
  if (n < 1 || n > SmallGraph::kMaxVertices)
    throw std::invalid_argument("build_graph: order must be between 1 and 16, got " + std::to_string(n));
  SmallGraph g = SmallGraph::edgeless(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("build_graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("build_graph: loops are not allowed");
    g.add_edge(u, v);
  }
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("build_graph: need exactly one label per vertex");
    std::set<std::uint64_t> seen;
    for (std::uint64_t p : labels) {
      if (!arith::is_prime(p))
        throw std::invalid_argument("build_graph: label " + std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw std::invalid_argument("build_graph: duplicate label " + std::to_string(p));
    }
    g.set_labels(labels);
  }
  return g;
}

SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h) {
  int n = g.order() + h.order();
  if (n > SmallGraph::kMaxVertices)
    throw std::invalid_argument("disjoint_union: combined order exceeds 16");
  SmallGraph out = SmallGraph::edgeless(n);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  if (g.labeled() && h.labeled()) {
    std::vector<std::uint64_t> labels = g.labels();
    for (std::uint64_t p : h.labels()) {
      if (g.vertex_of_label(p) >= 0)
        throw std::invalid_argument("disjoint_union: label sets overlap at " + std::to_string(p));
      labels.push_back(p);
    }
    out.set_labels(std::move(labels));
  }
  return out;
}

SmallGraph join(const SmallGraph& g, const SmallGraph& h) {
  SmallGraph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

}  // namespace cdg
