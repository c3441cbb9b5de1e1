#include "cdg/census.hpp"

#include <algorithm>
#include <map>

#include "cdg/canonical.hpp"
#include "cdg/invariants.hpp"

namespace cdg::census {

namespace {

/// Orderly generator for connected k-regular graphs. Vertices are
/// completed in index order: when vertex v is processed, its remaining
/// edges all go to higher-indexed vertices. The unprocessed vertices are
/// kept partitioned into contiguous classes with identical adjacency
/// history (the same neighbor set among processed vertices, hence the same
/// degree). Members of a class are interchangeable by a relabeling that
/// fixes everything already built, so a selection may only take a prefix
/// of each class: choosing v's edges means choosing a count per class, not
/// a subset of vertices, which collapses the tree for dense valencies.
/// A vertex reached with degree 0 after vertex 0 proves the part built so
/// far is a closed component, so the branch dies. Every connected
/// k-regular graph admits a discovery-order relabeling satisfying both
/// rules, and every leaf is connected by construction. Leaves still
/// collide up to isomorphism; a canonical map dedups them.
struct RegularGenerator {
  int n;
  int k;
  std::array<std::uint16_t, 16> adj{};
  std::array<int, 16> deg{};
  std::map<CanonicalForm, SmallGraph> found;

  using Ranges = std::vector<std::pair<int, int>>;  // [start, end) vertex runs

  RegularGenerator(int order, int valency) : n(order), k(valency) {}

  void run() { process(0, {{0, n}}); }

  void process(int v, const Ranges& classes) {
    if (v == n) {
      SmallGraph g = canonical_copy(SmallGraph::from_adjacency(n, adj));
      found.emplace(canonical_form(g), g);
      return;
    }
    if (v > 0 && deg[static_cast<std::size_t>(v)] == 0) return;
    int deficiency = 0;
    for (int u = v; u < n; ++u) deficiency += k - deg[static_cast<std::size_t>(u)];
    if (deficiency % 2 != 0) return;

    Ranges rest;
    rest.reserve(classes.size());
    if (classes[0].second > v + 1) rest.emplace_back(v + 1, classes[0].second);
    rest.insert(rest.end(), classes.begin() + 1, classes.end());

    int capacity = 0;
    for (auto [s, e] : rest)
      if (deg[static_cast<std::size_t>(s)] < k) capacity += e - s;
    int need = k - deg[static_cast<std::size_t>(v)];
    if (need > capacity) return;
    choose(v, rest, 0, need, {});
  }

  void choose(int v, const Ranges& classes, std::size_t ci, int need,
              const Ranges& refined) {
    if (ci == classes.size()) {
      if (need == 0) process(v + 1, refined);
      return;
    }
    auto [s, e] = classes[ci];
    int take_max = deg[static_cast<std::size_t>(s)] < k ? std::min(need, e - s) : 0;
    for (int c = 0; c <= take_max; ++c) {
      if (c > 0) toggle_edge(v, s + c - 1);
      Ranges next = refined;
      if (c > 0) next.emplace_back(s, s + c);
      if (s + c < e) next.emplace_back(s + c, e);
      choose(v, classes, ci + 1, need - c, next);
    }
    for (int u = s; u < s + take_max; ++u) toggle_edge(v, u);
  }

  void toggle_edge(int v, int u) {
    adj[static_cast<std::size_t>(v)] ^= static_cast<std::uint16_t>(std::uint16_t{1} << u);
    adj[static_cast<std::size_t>(u)] ^= static_cast<std::uint16_t>(std::uint16_t{1} << v);
    deg[static_cast<std::size_t>(v)] += adj[static_cast<std::size_t>(v)] >> u & 1 ? 1 : -1;
    deg[static_cast<std::size_t>(u)] += adj[static_cast<std::size_t>(u)] >> v & 1 ? 1 : -1;
  }
};

std::vector<SmallGraph> sorted_values(std::map<CanonicalForm, SmallGraph>& m) {
  std::vector<SmallGraph> out;
  out.reserve(m.size());
  for (auto& [form, g] : m) out.push_back(std::move(g));
  return out;
}

int constraint_rank(Constraint::Kind kind) {
  switch (kind) {
    case Constraint::Kind::connected:
      return 0;
    case Constraint::Kind::regular:
      return 1;
    case Constraint::Kind::max_degree:
      return 2;
    case Constraint::Kind::triangle_required:
    case Constraint::Kind::triangle_forbidden:
      return 3;
    case Constraint::Kind::alpha_at_most:
      return 4;
    case Constraint::Kind::kt_free:
      return 5;
  }
  return 6;
}

}  // namespace

CensusResult enumerate_regular_connected(int n, int k) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_regular_connected: order must be in 1..10");
  if (k < 0 || k >= n)
    throw std::invalid_argument("enumerate_regular_connected: need 0 <= k < n");
  CensusResult result;
  if (n * k % 2 != 0) {
    result.note = "empty by parity: every graph has an even number of odd vertices, "
                  "so no " + std::to_string(k) + "-regular graph on " +
                  std::to_string(n) + " vertices exists";
    return result;
  }
  RegularGenerator gen(n, k);
  gen.run();
  result.graphs = sorted_values(gen.found);
  return result;
}

std::vector<SmallGraph> all_graphs_up_to_iso(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("all_graphs_up_to_iso: order must be in 1..8");
  std::vector<SmallGraph> level = {SmallGraph::edgeless(1)};
  for (int t = 1; t < n; ++t) {
    std::map<CanonicalForm, SmallGraph> next;
    for (const SmallGraph& g : level) {
      for (std::uint32_t attach = 0; attach < (std::uint32_t{1} << t); ++attach) {
        SmallGraph h = SmallGraph::edgeless(t + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (std::uint32_t m = attach; m != 0; m &= m - 1) {
          h.add_edge(std::countr_zero(m), t);
        }
        SmallGraph canon = canonical_copy(h);
        next.emplace(canonical_form(canon), canon);
      }
    }
    level = sorted_values(next);
  }
  return level;
}

std::vector<SmallGraph> bounded_degree_up_to_iso(int n, int d) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("bounded_degree_up_to_iso: order must be in 1..9");
  if (d < 0) throw std::invalid_argument("bounded_degree_up_to_iso: negative bound");
  std::vector<SmallGraph> level = {SmallGraph::edgeless(1)};
  for (int t = 1; t < n; ++t) {
    std::map<CanonicalForm, SmallGraph> next;
    for (const SmallGraph& g : level) {
      std::uint32_t open = 0;
      for (int v = 0; v < t; ++v) {
        if (g.degree(v) < d) open |= std::uint32_t{1} << v;
      }
      for (std::uint32_t attach = open;; attach = (attach - 1) & open) {
        if (std::popcount(attach) <= d) {
          SmallGraph h = SmallGraph::edgeless(t + 1);
          for (auto [u, v] : g.edges()) h.add_edge(u, v);
          for (std::uint32_t m = attach; m != 0; m &= m - 1) {
            h.add_edge(std::countr_zero(m), t);
          }
          SmallGraph canon = canonical_copy(h);
          next.emplace(canonical_form(canon), canon);
        }
        if (attach == 0) break;
      }
    }
    level = sorted_values(next);
  }
  return level;
}

std::string Constraint::name() const {
  switch (kind) {
    case Kind::connected:
      return "connected";
    case Kind::regular:
      return std::to_string(value) + "-regular";
    case Kind::max_degree:
      return "maxdeg<=" + std::to_string(value);
    case Kind::triangle_required:
      return "triangle";
    case Kind::triangle_forbidden:
      return "no-triangle";
    case Kind::alpha_at_most:
      return "alpha<=" + std::to_string(value);
    case Kind::kt_free:
      return "k" + std::to_string(value) + "free";
  }
  return "?";
}

bool Constraint::satisfied(const SmallGraph& g) const {
  switch (kind) {
    case Kind::connected:
      return is_connected(g);
    case Kind::regular:
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != value) return false;
      }
      return true;
    case Kind::max_degree:
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > value) return false;
      }
      return true;
    case Kind::triangle_required:
      return triangle_count(g) > 0;
    case Kind::triangle_forbidden:
      return triangle_count(g) == 0;
    case Kind::alpha_at_most:
      return independence_number(g) <= value;
    case Kind::kt_free:
      return is_kt_free(g, value);
  }
  return false;
}

Constraint parse_constraint(const std::string& token) {
  if (token == "connected") return {Constraint::Kind::connected, 0};
  if (token == "triangle") return {Constraint::Kind::triangle_required, 0};
  if (token == "no-triangle") return {Constraint::Kind::triangle_forbidden, 0};
  auto numeric_tail = [&](std::size_t pos, std::size_t drop) -> int {
    std::string digits = token.substr(pos, token.size() - pos - drop);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("unknown constraint: " + token);
    }
    return std::stoi(digits);
  };
  if (token.rfind("alpha<=", 0) == 0)
    return {Constraint::Kind::alpha_at_most, numeric_tail(7, 0)};
  if (token.rfind("maxdeg<=", 0) == 0)
    return {Constraint::Kind::max_degree, numeric_tail(8, 0)};
  if (token.size() > 5 && token.front() == 'k' &&
      token.compare(token.size() - 4, 4, "free") == 0) {
    int t = numeric_tail(1, 4);
    if (t < 3) throw std::invalid_argument("clique-freeness needs t >= 3: " + token);
    return {Constraint::Kind::kt_free, t};
  }
  std::size_t dash = token.find("-regular");
  if (dash != std::string::npos && dash + 8 == token.size() && dash > 0) {
    std::string digits = token.substr(0, dash);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return {Constraint::Kind::regular, std::stoi(digits)};
    }
  }
  throw std::invalid_argument("unknown constraint: " + token);
}

FilterResult filter_census(const std::vector<SmallGraph>& graphs,
                           std::vector<Constraint> constraints) {
  std::stable_sort(constraints.begin(), constraints.end(),
                   [](const Constraint& a, const Constraint& b) {
                     return constraint_rank(a.kind) < constraint_rank(b.kind);
                   });
  FilterResult result;
  for (const SmallGraph& g : graphs) {
    const Constraint* failed = nullptr;
    for (const Constraint& c : constraints) {
      if (!c.satisfied(g)) {
        failed = &c;
        break;
      }
    }
    if (failed == nullptr) {
      result.survivors.push_back(g);
    } else {
      result.exclusions.push_back({g, failed->name()});
    }
  }
  return result;
}

}  // namespace cdg::census
