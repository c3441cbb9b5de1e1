#ifndef CDG_CANONICAL_HPP
#define CDG_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cdg/small_graph.hpp"

namespace cdg {

/// Canonical certificate of an unlabeled graph on up to 16 vertices. Two
/// graphs are isomorphic exactly when their forms compare equal. The packed
/// words hold the lower triangle of the canonically relabeled adjacency
/// matrix, row by row, earliest bit most significant; at most 120 bits are
/// used so two words always suffice.
struct CanonicalForm {
  int n = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  auto operator<=>(const CanonicalForm&) const = default;

  /// Short printable token, e.g. "g6.0000000000000357.0000000000000000".
  std::string hex() const;
};

CanonicalForm canonical_form(const SmallGraph& g);

/// A relabeling perm (old vertex -> new position) that realizes the
/// canonical form, i.e. g.permuted(canonical_labeling(g)) is in canonical
/// layout. Vertex labels play no part in the computation.
std::vector<int> canonical_labeling(const SmallGraph& g);

/// The canonically relabeled graph, labels dropped.
SmallGraph canonical_copy(const SmallGraph& g);

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

}  // namespace cdg

#endif  // CDG_CANONICAL_HPP
