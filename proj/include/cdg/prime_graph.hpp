#ifndef CDG_PRIME_GRAPH_HPP
#define CDG_PRIME_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdg/degrees.hpp"
#include "cdg/small_graph.hpp"

namespace cdg::primegraph {

/// Sorted distinct primes dividing at least one degree larger than 1.
std::vector<std::uint64_t> rho(const degrees::DegreeSet& d);

/// The prime graph of a character-degree set: vertices are the primes in
/// rho(d), labelled by their values, and p is adjacent to q exactly when
/// pq divides some degree. For distinct primes that is the same as both
/// dividing one degree, so every degree contributes a clique on its prime
/// divisors.
struct PrimeGraph {
  SmallGraph graph;  // prime-labelled; order 0 when the set is {1}
  degrees::DegreeSet degree_set;
  std::optional<degrees::GroupDescriptor> source;

  /// Group name when built from a descriptor, otherwise the degree set.
  std::string describe_source() const;
};

PrimeGraph build_prime_graph(const degrees::DegreeSet& d);
PrimeGraph build_prime_graph(const degrees::GroupDescriptor& src,
                             const degrees::DegreeTable& table = degrees::builtin_table());

/// Necessary conditions a prime graph must satisfy, evaluated against both
/// hypothesis classes. This never decides solvability: the caller asserts
/// the hypothesis, and passes() reads out the flags that apply to it.
///
/// palfy_ok:      independence number at most 2 (solvable groups).
/// moreto_tiep_ok: independence number at most 3 (all groups).
/// components_ok_nonsolvable: at most 3 connected components.
/// components_ok_solvable: connected, or exactly 2 components that are both
///   complete with sizes n1 <= n2 satisfying n2 >= 2^n1 - 1.
/// diameter_ok:   diameter at most 3; vacuously true when disconnected,
///   with a note, since the bound presumes connectivity.
/// k4_free:       informational; no clique on 4 vertices.
///
/// independent_set_witness always holds one maximum independent set and
/// components always lists the components, both as prime sets; k4_witness
/// is empty unless a 4-clique exists.
struct ConditionReport {
  bool solvable_hypothesis = false;

  bool palfy_ok = true;
  bool moreto_tiep_ok = true;
  bool components_ok_nonsolvable = true;
  bool components_ok_solvable = true;
  bool diameter_ok = true;
  bool k4_free = true;

  std::vector<std::uint64_t> independent_set_witness;  // maximum independent set
  std::vector<std::vector<std::uint64_t>> components;
  std::vector<std::uint64_t> k4_witness;
  std::optional<int> diameter;
  std::string note;

  /// Conjunction of the conditions matching the asserted hypothesis.
  /// k4_free is reported but never gates.
  bool passes() const;
};

ConditionReport check_conditions(const PrimeGraph& g, bool solvable);

/// Complete graph on 2m vertices minus a perfect matching; the unique
/// (2m-2)-regular graph of order 2m. m = 2 gives the square, m = 3 the
/// octahedron.
SmallGraph cocktail_party(int m);

/// A k-regular prime graph of order k + 2 assembled from solvable-style
/// building blocks: writing k = 4l + r with r in {0, 2}, the descriptor
/// multiplies l square factors (each a product of two synthetic sets
/// {1, p, q}) with one more square when r = 2 or one bare synthetic set
/// when r = 0. The blocks are products of sets known to be realized by
/// solvable groups, but no concrete group is named, so every factor is
/// labelled synthetic.
struct KRegularConstruction {
  degrees::GroupDescriptor descriptor;
  PrimeGraph graph;
};

/// k must be even, between 2 and 14 (order k + 2 caps at 16 vertices).
/// The supply defaults to the first k + 2 primes; a caller-provided supply
/// needs at least k + 2 distinct primes and is consumed in order.
KRegularConstruction construct_k_regular(int k, std::vector<std::uint64_t> prime_supply = {});

/// Property trial for the product law: the graph of a product of degree sets
/// with disjoint prime supports equals the join of the factor graphs. Runs
/// `trials` random pairs from a fixed seed and returns the failure count.
int product_join_trials(int trials, std::uint64_t seed);

}  // namespace cdg::primegraph

#endif  // CDG_PRIME_GRAPH_HPP
