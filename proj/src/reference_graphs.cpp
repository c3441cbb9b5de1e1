#include "cdg/reference_graphs.hpp"

#include "cdg/prime_graph.hpp"

namespace cdg {

SmallGraph triangular_prism() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

SmallGraph cubic8_four_triangles() {
  return build_graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5},
                         {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

SmallGraph cubic8_two_triangles() {
  return build_graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {4, 5},
                         {3, 6}, {3, 7}, {4, 6}, {5, 7}, {6, 7}});
}

SmallGraph cubic8_one_triangle() {
  return build_graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6},
                         {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}});
}

SmallGraph octahedron() { return primegraph::cocktail_party(3); }

const std::vector<ReferenceGraph>& reference_graphs() {
  static const std::vector<ReferenceGraph> graphs = {
      {"triangular prism", triangular_prism()},
      {"cubic of order 8 with four triangles", cubic8_four_triangles()},
      {"cubic of order 8 with two triangles", cubic8_two_triangles()},
      {"cubic of order 8 with one triangle", cubic8_one_triangle()},
      {"octahedron", octahedron()},
  };
  return graphs;
}

}  // namespace cdg
