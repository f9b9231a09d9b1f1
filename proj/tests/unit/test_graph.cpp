#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ricci/corpus.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"

using namespace ricci;

namespace {

std::vector<std::string> names(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

// Floyd-Warshall, independent of the BFS in the library.
std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = static_cast<int>(g.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("load_graph builds a path") {
  const Graph g = load_graph("a b\nb c");
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(g.index("b")) == 2);
  CHECK(names(g, sphere(g, "a", 2)) == std::vector<std::string>{"c"});
}

TEST_CASE("load_graph rejects bad input") {
  CHECK_THROWS_AS(load_graph("a a"), ValidationError);
  CHECK_THROWS_AS(load_graph("# nothing\n\n"), ValidationError);
  try {
    load_graph("a b\nlonely\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_graph("a b c"), ParseError);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.edges"), ParseError);
}

TEST_CASE("load_graph tolerates comments, blank lines, CRLF and duplicates") {
  const Graph g = load_graph("# header\r\n\r\nx y\r\ny x\n  \nx y\n");
  CHECK(g.size() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("hexagon") {
  const Graph g = load_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  for (Vertex v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 2);
  CHECK(names(g, sphere(g, "0", 2)) == std::vector<std::string>{"2", "4"});
  CHECK(names(g, sphere(g, "0", 3)) == std::vector<std::string>{"3"});
  CHECK(diameter(g) == 3);
}

TEST_CASE("complete graph has empty second sphere") {
  const Graph k4 = corpus::complete_graph(4);
  CHECK(sphere(k4, Vertex{0}, 2).empty());
  CHECK(sphere(k4, Vertex{0}, 0) == std::vector<Vertex>{0});
}

TEST_CASE("unknown vertices") {
  const Graph g = load_graph("a b");
  CHECK_THROWS_AS(g.index("z"), LookupError);
  CHECK_THROWS_AS(sphere(g, "z", 1), LookupError);
  CHECK_FALSE(g.find("z").has_value());
}

TEST_CASE("edge list round trip") {
  const Graph g = corpus::petersen_graph();
  const Graph h = load_graph(to_edge_list(g));
  CHECK(h.vertices() == g.vertices());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("disconnected graphs") {
  const Graph g = load_graph("a b\nc d");
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(diameter(g), DomainError);
  CHECK(bfs_distances(g, g.index("a"))[g.index("c")] == kUnreachable);
}

TEST_CASE("induced subgraph") {
  const Graph g = corpus::cycle_graph(5);
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(induced_subgraph(g, keep).edge_count() == 2);
  const std::vector<Vertex> isolating{0, 2};
  CHECK_THROWS_AS(induced_subgraph(g, isolating), ValidationError);
}

TEST_CASE("local neighborhood of the S3 Bruhat graph at the identity") {
  const Graph g = load_graph_file(RICCI_DATA_DIR "/bruhat_s3.edges");
  const auto nb = local_neighborhood(g, g.index("123"));
  CHECK(nb.sphere1.size() == 3);
  CHECK(nb.sphere2.size() == 2);
  CHECK(nb.n == std::vector<int>{3, 3});
  CHECK(nb.t == std::vector<int>{0, 0, 0});
}

TEST_CASE("local neighborhood of a star centre and of C5") {
  const Graph star = corpus::star_graph(3);
  const auto nb = local_neighborhood(star, star.index("c"));
  CHECK(nb.sphere2.empty());
  CHECK(nb.t == std::vector<int>{0, 0, 0});

  const Graph c5 = corpus::cycle_graph(5);
  for (Vertex x = 0; x < 5; ++x) {
    const auto l = local_neighborhood(c5, x);
    CHECK(l.sphere2.size() == 2);
    CHECK(l.n == std::vector<int>{1, 1});
  }
}

TEST_CASE("max_joint_triangles") {
  for (const auto& t : corpus::trees(7)) CHECK(max_joint_triangles(t) == 0);
  CHECK(max_joint_triangles(corpus::complete_graph(4)) == 2);
  CHECK(max_joint_triangles(corpus::cycle_graph(6)) == 0);
}

TEST_CASE("local neighborhood invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = corpus::random_connected_graph(4 + static_cast<int>(seed % 8), 0.35, seed);
    const auto dist = all_distances(g);
    for (Vertex x = 0; x < g.size(); ++x) {
      const auto nb = local_neighborhood(g, x);
      CHECK(nb.sphere1.size() == g.degree(x));
      CHECK(nb.center_degree == g.degree(x));
      for (Vertex v : nb.sphere1) CHECK(dist[x][v] == 1);
      for (Vertex u : nb.sphere2) CHECK(dist[x][u] == 2);

      std::size_t cross_edges = 0;
      for (auto [a, b] : g.edges())
        if ((dist[x][a] == 1 && dist[x][b] == 2) || (dist[x][a] == 2 && dist[x][b] == 1)) ++cross_edges;
      std::size_t sum_n = 0;
      for (std::size_t k = 0; k < nb.sphere2.size(); ++k) {
        CHECK(nb.n[k] >= 1);
        sum_n += static_cast<std::size_t>(nb.n[k]);
      }
      CHECK(sum_n == cross_edges);

      const auto d = static_cast<Eigen::Index>(nb.sphere1.size());
      for (Eigen::Index i = 0; i < d; ++i) {
        CHECK(nb.adj1(i, i) == 0);
        CHECK(nb.adj1.row(i).sum() == nb.t[static_cast<std::size_t>(i)]);
        CHECK(nb.sphere1_degrees[static_cast<std::size_t>(i)] == g.degree(nb.sphere1[static_cast<std::size_t>(i)]));
        for (Eigen::Index j = 0; j < d; ++j) CHECK(nb.adj1(i, j) == nb.adj1(j, i));
      }

      std::set<Vertex> seen;
      for (std::size_t i = 0; i <= 3; ++i)
        for (Vertex v : sphere(g, x, i)) CHECK(seen.insert(v).second);
      CHECK(sphere(g, x, 2) == nb.sphere2);
      CHECK(local_neighborhood(g, x).sphere2 == nb.sphere2);
    }
  }
}

TEST_CASE("short cycle detection agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = corpus::random_connected_graph(5 + static_cast<int>(seed % 5), 0.25, seed);
    const std::size_t n = g.size();
    bool triangle = false, square = false;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, a)) triangle = true;
          for (Vertex d = 0; d < n; ++d) {
            if (d == a || d == b || d == c) continue;
            if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a)) square = true;
          }
        }
    const auto tri = find_triangle(g);
    const auto quad = find_quadrilateral(g);
    CHECK(tri.has_value() == triangle);
    CHECK(quad.has_value() == square);
    if (tri) CHECK((g.adjacent((*tri)[0], (*tri)[1]) && g.adjacent((*tri)[1], (*tri)[2]) && g.adjacent((*tri)[2], (*tri)[0])));
    if (quad) {
      const auto& q = *quad;
      CHECK(std::set<Vertex>(q.begin(), q.end()).size() == 4);
      for (std::size_t i = 0; i < 4; ++i) CHECK(g.adjacent(q[i], q[(i + 1) % 4]));
    }
  }
}
