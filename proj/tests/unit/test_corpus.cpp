#include "doctest.h"
#include "ricci/corpus.hpp"
#include "ricci/errors.hpp"

using namespace ricci;

TEST_CASE("tree counts match the known sequence") {
  const std::size_t expected[] = {1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 2; n <= 10; ++n) {
    const auto ts = corpus::trees(n);
    CHECK(ts.size() == expected[n - 2]);
    for (const auto& t : ts) {
      CHECK(t.size() == static_cast<std::size_t>(n));
      CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
      CHECK(is_connected(t));
    }
  }
}

TEST_CASE("named graphs") {
  const Graph p = corpus::petersen_graph();
  CHECK(p.size() == 10);
  CHECK(p.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(diameter(p) == 2);

  const Graph t = corpus::regular_tree(3, 3);
  CHECK(t.size() == 1 + 3 + 6 + 12);
  CHECK(t.degree(t.index("r")) == 3);
  CHECK(corpus::star_graph(4).degree(corpus::star_graph(4).index("c")) == 4);
  CHECK(corpus::path_graph(5).edge_count() == 4);
  CHECK_THROWS_AS(corpus::cycle_graph(2), DomainError);
}

TEST_CASE("random graphs are connected and reproducible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = corpus::random_connected_graph(9, 0.2, seed);
    const Graph b = corpus::random_connected_graph(9, 0.2, seed);
    CHECK(is_connected(a));
    CHECK(a.edges() == b.edges());
  }
  CHECK(corpus::small_graphs().size() == 200 + 8 + 5 + 1);
}
