#include "cdg/prime_graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "cdg/arith.hpp"
#include "cdg/invariants.hpp"

namespace cdg::primegraph {

namespace {

std::vector<std::uint64_t> labels_of(const SmallGraph& g, const std::vector<int>& verts) {
  std::vector<std::uint64_t> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> labels_of_mask(const SmallGraph& g, std::uint32_t mask) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(g.label(std::countr_zero(m)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint64_t> rho(const degrees::DegreeSet& d) {
  std::set<std::uint64_t> primes;
  for (std::uint64_t deg : d.values()) {
    if (deg == 1) continue;
    for (std::uint64_t p : arith::prime_divisors(deg)) primes.insert(p);
  }
  return std::vector<std::uint64_t>(primes.begin(), primes.end());
}

std::string PrimeGraph::describe_source() const {
  return source ? source->describe() : degree_set.to_string();
}

PrimeGraph build_prime_graph(const degrees::DegreeSet& d) {
  auto primes = rho(d);
  if (primes.size() > static_cast<std::size_t>(SmallGraph::kMaxVertices))
    throw std::invalid_argument("build_prime_graph: degree set involves " +
                               std::to_string(primes.size()) + " primes, more than " +
                               std::to_string(SmallGraph::kMaxVertices) + " vertices");

  PrimeGraph pg;
  pg.degree_set = d;
  if (primes.empty()) return pg;

  SmallGraph g = SmallGraph::edgeless(static_cast<int>(primes.size()));
  g.set_labels(primes);
  auto index_of = [&](std::uint64_t p) {
    return static_cast<int>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
  };
  for (std::uint64_t deg : d.values()) {
    if (deg == 1) continue;
    auto ps = arith::prime_divisors(deg);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        g.add_edge(index_of(ps[i]), index_of(ps[j]));
  }
  pg.graph = g;
  return pg;
}

PrimeGraph build_prime_graph(const degrees::GroupDescriptor& src,
                             const degrees::DegreeTable& table) {
  PrimeGraph pg = build_prime_graph(degrees::degrees_of(src, table));
  pg.source = src;
  return pg;
}

bool ConditionReport::passes() const {
  bool base = diameter_ok;
  if (solvable_hypothesis) return base && palfy_ok && components_ok_solvable;
  return base && moreto_tiep_ok && components_ok_nonsolvable;
}

ConditionReport check_conditions(const PrimeGraph& pg, bool solvable) {
  ConditionReport r;
  r.solvable_hypothesis = solvable;

  const SmallGraph& g = pg.graph;
  if (g.order() == 0) {
    r.note = "no vertices: every condition holds vacuously";
    return r;
  }

  auto independent = max_independent_set(g);
  r.palfy_ok = independent.size() <= 2;
  r.moreto_tiep_ok = independent.size() <= 3;
  r.independent_set_witness = labels_of(g, independent);

  auto comps = component_masks(g);
  for (std::uint32_t mask : comps) r.components.push_back(labels_of_mask(g, mask));

  r.components_ok_nonsolvable = comps.size() <= 3;
  if (comps.size() == 2) {
    bool each_complete = true;
    for (std::uint32_t mask : comps) {
      for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((g.neighbors(v) & mask) != (mask & ~(std::uint32_t{1} << v))) each_complete = false;
      }
    }
    int n1 = std::popcount(comps[0]);
    int n2 = std::popcount(comps[1]);
    if (n1 > n2) std::swap(n1, n2);
    r.components_ok_solvable = each_complete && n2 >= (1 << n1) - 1;
  } else {
    r.components_ok_solvable = comps.size() == 1;
  }

  if (comps.size() <= 1) {
    r.diameter = diameter(g);
    r.diameter_ok = *r.diameter <= 3;
  } else {
    r.diameter_ok = true;
    r.note = "diameter bound not applicable: graph is disconnected";
  }

  if (auto k4 = find_clique(g, 4)) {
    r.k4_free = false;
    r.k4_witness = labels_of(g, *k4);
  }
  return r;
}

SmallGraph cocktail_party(int m) {
  if (m < 2) throw std::invalid_argument("cocktail_party: need m >= 2");
  if (2 * m > SmallGraph::kMaxVertices)
    throw std::invalid_argument("cocktail_party: 2m exceeds " +
                               std::to_string(SmallGraph::kMaxVertices) + " vertices");
  SmallGraph g = SmallGraph::edgeless(2 * m);
  for (int u = 0; u < 2 * m; ++u)
    for (int v = u + 1; v < 2 * m; ++v)
      if (!(v == u + 1 && u % 2 == 0)) g.add_edge(u, v);
  return g;
}

KRegularConstruction construct_k_regular(int k, std::vector<std::uint64_t> prime_supply) {
  if (k % 2 != 0) throw std::invalid_argument("construct_k_regular: k must be even");
  if (k < 2) throw std::invalid_argument("construct_k_regular: k must be at least 2");
  if (k + 2 > SmallGraph::kMaxVertices)
    throw std::invalid_argument("construct_k_regular: order k + 2 exceeds " +
                               std::to_string(SmallGraph::kMaxVertices) + " vertices");

  const std::size_t need = static_cast<std::size_t>(k) + 2;
  if (prime_supply.empty()) {
    for (std::uint64_t p = 2; prime_supply.size() < need; ++p)
      if (arith::is_prime(p)) prime_supply.push_back(p);
  }
  if (prime_supply.size() < need)
    throw std::invalid_argument("construct_k_regular: need " + std::to_string(need) +
                               " primes, got " + std::to_string(prime_supply.size()));
  prime_supply.resize(need);
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : prime_supply) {
    if (!arith::is_prime(p))
      throw std::invalid_argument("construct_k_regular: " + std::to_string(p) +
                                 " is not prime");
    if (!seen.insert(p).second)
      throw std::invalid_argument("construct_k_regular: repeated prime " + std::to_string(p));
  }

  std::size_t next = 0;
  auto take_pair_factor = [&] {
    std::uint64_t p = prime_supply[next++];
    std::uint64_t q = prime_supply[next++];
    auto set = degrees::DegreeSet::from_values({1, p, q});
    return degrees::GroupDescriptor::synthetic(set.to_string(), set);
  };
  auto take_square_factor = [&] {
    return degrees::GroupDescriptor::product({take_pair_factor(), take_pair_factor()});
  };

  // k = 4l + r with r in {0, 2}: one leading block, then l squares.
  std::vector<degrees::GroupDescriptor> factors;
  if (k % 4 == 2)
    factors.push_back(take_square_factor());
  else
    factors.push_back(take_pair_factor());
  for (int l = 0; l < k / 4; ++l) factors.push_back(take_square_factor());

  KRegularConstruction out{factors.size() == 1 ? factors[0]
                                               : degrees::GroupDescriptor::product(factors),
                           {}};
  out.graph = build_prime_graph(out.descriptor);
  return out;
}

namespace {

std::set<std::pair<std::uint64_t, std::uint64_t>> label_edge_set(const SmallGraph& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v))
        out.insert({std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v))});
  return out;
}

}  // namespace

int product_join_trials(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::uint64_t> pool_a = {2, 3, 5, 7, 11, 13};
  const std::vector<std::uint64_t> pool_b = {17, 19, 23, 29, 31, 37};
  auto random_set = [&](const std::vector<std::uint64_t>& pool) {
    std::vector<std::uint64_t> values = {1};
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      std::uint64_t v = 1;
      int parts = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < parts; ++j) v *= pool[rng() % pool.size()];
      values.push_back(v);
    }
    return degrees::DegreeSet::from_values(values);
  };

  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto d1 = random_set(pool_a);
    auto d2 = random_set(pool_b);
    auto combined = build_prime_graph(degrees::cd_product({d1, d2}));
    auto joined = join(build_prime_graph(d1).graph, build_prime_graph(d2).graph);
    std::vector<std::uint64_t> la = combined.graph.labels();
    std::vector<std::uint64_t> lb = joined.labels();
    std::sort(lb.begin(), lb.end());
    if (la != lb || label_edge_set(combined.graph) != label_edge_set(joined)) ++failures;
  }
  return failures;
}

}  // namespace cdg::primegraph
