#include "cdg/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cdg {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

int lowest_bit(std::uint32_t m) { return std::countr_zero(m); }

/// Branch-and-bound maximum independent set over the candidate mask.
/// Branches on a candidate of maximum remaining degree: either that vertex
/// is excluded, or it is taken and its closed neighbourhood leaves the pool.
void mis_search(const SmallGraph& g, std::uint32_t candidates, int size,
                std::uint32_t chosen, int& best, std::uint32_t& best_set) {
  if (size + popcount(candidates) <= best) return;
  if (candidates == 0) {
    best = size;
    best_set = chosen;
    return;
  }
  int pick = -1;
  int pick_deg = -1;
  for (std::uint32_t m = candidates; m != 0; m &= m - 1) {
    int v = lowest_bit(m);
    int d = popcount(g.neighbors(v) & candidates);
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  if (pick_deg == 0) {
    // The remaining candidates are pairwise non-adjacent; take them all.
    best = size + popcount(candidates);
    best_set = chosen | candidates;
    return;
  }
  std::uint32_t bit = std::uint32_t{1} << pick;
  mis_search(g, candidates & ~(bit | g.neighbors(pick)), size + 1,
             chosen | bit, best, best_set);
  mis_search(g, candidates & ~bit, size, chosen, best, best_set);
}

/// Bron-Kerbosch with pivoting, tracking only the largest clique seen.
void max_clique_search(const SmallGraph& g, std::uint32_t r, std::uint32_t p,
                       std::uint32_t x, int& best) {
  if (p == 0 && x == 0) {
    best = std::max(best, popcount(r));
    return;
  }
  if (popcount(r) + popcount(p) <= best) return;
  std::uint32_t px = p | x;
  int pivot = lowest_bit(px);
  int pivot_cover = -1;
  for (std::uint32_t m = px; m != 0; m &= m - 1) {
    int v = lowest_bit(m);
    int c = popcount(p & g.neighbors(v));
    if (c > pivot_cover) {
      pivot_cover = c;
      pivot = v;
    }
  }
  std::uint32_t branch = p & ~g.neighbors(pivot);
  for (std::uint32_t m = branch; m != 0; m &= m - 1) {
    int v = lowest_bit(m);
    std::uint32_t bit = std::uint32_t{1} << v;
    max_clique_search(g, r | bit, p & g.neighbors(v), x & g.neighbors(v),
                      best);
    p &= ~bit;
    x |= bit;
  }
}

bool clique_extend(const SmallGraph& g, std::uint32_t chosen,
                   std::uint32_t candidates, int remaining,
                   std::uint32_t& found) {
  if (remaining == 0) {
    found = chosen;
    return true;
  }
  if (popcount(candidates) < remaining) return false;
  while (candidates != 0) {
    int v = lowest_bit(candidates);
    std::uint32_t bit = std::uint32_t{1} << v;
    candidates &= ~bit;
    if (clique_extend(g, chosen | bit, candidates & g.neighbors(v),
                      remaining - 1, found)) {
      return true;
    }
  }
  return false;
}

/// Backtracking test for a proper colouring with at most `colors` colours.
/// Vertices are coloured in order of descending degree; a vertex may open
/// at most one previously unused colour, which kills colour-permutation
/// symmetry.
bool colorable(const SmallGraph& g, const std::vector<int>& order,
               std::vector<int>& color, std::size_t idx, int used,
               int colors) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::uint32_t m = g.neighbors(v); m != 0; m &= m - 1) {
      int u = lowest_bit(m);
      if (color[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (colorable(g, order, color, idx + 1, std::max(used, c + 1), colors)) {
      return true;
    }
    color[v] = -1;
  }
  return false;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    out.push_back(lowest_bit(m));
  }
  return out;
}

std::uint32_t reach_from(const SmallGraph& g, int start) {
  std::uint32_t seen = std::uint32_t{1} << start;
  for (;;) {
    std::uint32_t next = seen;
    for (std::uint32_t m = seen; m != 0; m &= m - 1) {
      next |= g.neighbors(lowest_bit(m));
    }
    if (next == seen) return seen;
    seen = next;
  }
}

}  // namespace

int independence_number(const SmallGraph& g) {
  int best = 0;
  std::uint32_t best_set = 0;
  std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  mis_search(g, all, 0, 0, best, best_set);
  return best;
}

std::vector<int> max_independent_set(const SmallGraph& g) {
  int best = 0;
  std::uint32_t best_set = 0;
  std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  mis_search(g, all, 0, 0, best, best_set);
  return mask_to_vertices(best_set);
}

int clique_number(const SmallGraph& g) {
  int best = 0;
  std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  max_clique_search(g, 0, all, 0, best);
  return best;
}

std::optional<std::vector<int>> find_clique(const SmallGraph& g, int t) {
  if (t < 1) throw std::invalid_argument("find_clique: t must be positive");
  std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  std::uint32_t found = 0;
  if (!clique_extend(g, 0, all, t, found)) return std::nullopt;
  return mask_to_vertices(found);
}

bool is_kt_free(const SmallGraph& g, int t) {
  if (t < 3) throw std::invalid_argument("is_kt_free: t must be at least 3");
  return !find_clique(g, t).has_value();
}

int chromatic_number(const SmallGraph& g) {
  int n = g.order();
  if (g.edge_count() == 0) return n > 0 ? 1 : 0;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  for (int colors = clique_number(g); colors <= n; ++colors) {
    std::vector<int> color(n, -1);
    if (colorable(g, order, color, 0, 0, colors)) return colors;
  }
  return n;
}

int triangle_count(const SmallGraph& g) {
  int total = 0;
  for (auto [u, v] : g.edges()) {
    std::uint32_t above = ~((std::uint32_t{2} << v) - 1);
    total += popcount(g.neighbors(u) & g.neighbors(v) & above);
  }
  return total;
}

int odd_vertex_count(const SmallGraph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 1) ++count;
  }
  return count;
}

bool is_connected(const SmallGraph& g) {
  std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  return reach_from(g, 0) == all;
}

std::vector<std::uint32_t> component_masks(const SmallGraph& g) {
  std::vector<std::uint32_t> out;
  std::uint32_t remaining = (std::uint32_t{1} << g.order()) - 1;
  while (remaining != 0) {
    std::uint32_t comp = reach_from(g, lowest_bit(remaining));
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

int distance(const SmallGraph& g, int from, int to) {
  if (from == to) return 0;
  std::uint32_t seen = std::uint32_t{1} << from;
  std::uint32_t frontier = seen;
  int steps = 0;
  while (frontier != 0) {
    ++steps;
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1) {
      next |= g.neighbors(lowest_bit(m));
    }
    next &= ~seen;
    if (next & (std::uint32_t{1} << to)) return steps;
    seen |= next;
    frontier = next;
  }
  return -1;
}

std::optional<int> diameter(const SmallGraph& g) {
  if (!is_connected(g)) return std::nullopt;
  int worst = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      worst = std::max(worst, distance(g, u, v));
    }
  }
  return worst;
}

GraphInvariants invariants(const SmallGraph& g) {
  GraphInvariants inv;
  for (int v = 0; v < g.order(); ++v) {
    inv.degree_sequence.push_back(g.degree(v));
  }
  std::sort(inv.degree_sequence.begin(), inv.degree_sequence.end());
  inv.max_degree = inv.degree_sequence.back();
  if (inv.degree_sequence.front() == inv.max_degree) {
    inv.regular_k = inv.max_degree;
  }
  for (std::uint32_t comp : component_masks(g)) {
    inv.component_sizes.push_back(popcount(comp));
  }
  std::sort(inv.component_sizes.begin(), inv.component_sizes.end());
  inv.diameter = diameter(g);
  inv.triangle_count = triangle_count(g);
  inv.independence_number = independence_number(g);
  inv.chromatic_number = chromatic_number(g);
  inv.clique_number = clique_number(g);
  inv.odd_vertex_count = odd_vertex_count(g);
  return inv;
}

}  // namespace cdg
