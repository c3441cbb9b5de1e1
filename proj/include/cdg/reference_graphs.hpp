#ifndef CDG_REFERENCE_GRAPHS_HPP
#define CDG_REFERENCE_GRAPHS_HPP

#include <string>
#include <vector>

#include "cdg/small_graph.hpp"

namespace cdg {

/// The fixed candidate graphs of the cubic classification. The prism and the
/// three cubic graphs of order 8 are the connected cubic triangle-containing
/// graphs with independence number at most 3 that are not K4; the octahedron
/// is the quartic order-6 example.
SmallGraph triangular_prism();
SmallGraph cubic8_four_triangles();
SmallGraph cubic8_two_triangles();
SmallGraph cubic8_one_triangle();
SmallGraph octahedron();

struct ReferenceGraph {
  std::string name;
  SmallGraph graph;
};

/// The five graphs above, in the order listed.
const std::vector<ReferenceGraph>& reference_graphs();

}  // namespace cdg

#endif  // CDG_REFERENCE_GRAPHS_HPP
