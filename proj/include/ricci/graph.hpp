#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ricci {

/// Index of a vertex inside a Graph. Indices follow the lexicographic order
/// of the vertex identifiers.
using Vertex = std::size_t;

using Edge = std::pair<std::string, std::string>;

/// Finite simple undirected graph with string-labelled vertices.
///
/// Invariants enforced at construction: no self-loops, symmetric adjacency,
/// no isolated vertices. Duplicate edges are merged. Immutable afterwards.
class Graph {
 public:
  Graph() = default;

  /// Vertex set is the set of edge endpoints.
  explicit Graph(std::span<const Edge> edges);

  /// Explicit vertex list; every listed vertex must end up with a neighbour.
  Graph(std::span<const std::string> vertices, std::span<const Edge> edges);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Vertex identifiers in index order.
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  /// Throws LookupError for unknown identifiers.
  Vertex index(std::string_view name) const;
  std::optional<Vertex> find(std::string_view name) const;

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Each edge once, as (smaller index, larger index).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  void build(std::vector<std::string> names, std::span<const Edge> edges);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> lookup_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Parses the edge-list format: one `<vertex> <vertex>` pair per line,
/// `#` comment lines, blank lines ignored.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

/// Inverse of load_graph, one edge per line in index order.
std::string to_edge_list(const Graph& g);

/// Distances from `source`; unreachable vertices get `kUnreachable`.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Exact distance-i sphere B(i,x), sorted by index.
std::vector<Vertex> sphere(const Graph& g, Vertex x, std::size_t i);
std::vector<Vertex> sphere(const Graph& g, std::string_view x, std::size_t i);

bool is_connected(const Graph& g);

/// Largest finite BFS distance. Throws DomainError on disconnected graphs.
std::size_t diameter(const Graph& g);

/// Everything the curvature matrix at `center` depends on: the two spheres
/// around it and the path counts between them.
struct LocalNeighborhood {
  Vertex center = 0;
  std::size_t center_degree = 0;

  std::vector<Vertex> sphere1;  ///< B(1,x), index order
  std::vector<Vertex> sphere2;  ///< B(2,x), index order

  /// n[k]: number of common neighbours of x and sphere2[k] (>= 1).
  std::vector<int> n;
  /// t[i]: number of triangles through the edge {x, sphere1[i]}.
  std::vector<int> t;
  /// adj1(i,j) = 1 iff sphere1[i] ~ sphere1[j].
  Eigen::MatrixXi adj1;
  /// links(i,k) = 1 iff sphere1[i] ~ sphere2[k].
  Eigen::MatrixXi links;
  /// Degrees of the sphere1 vertices in the full graph.
  std::vector<std::size_t> sphere1_degrees;
};

LocalNeighborhood local_neighborhood(const Graph& g, Vertex x);

/// Largest number of triangles sharing a pair of vertices (0 if triangle-free).
std::size_t max_joint_triangles(const Graph& g);

/// Some triangle, if any, as three vertices.
std::optional<std::vector<Vertex>> find_triangle(const Graph& g);
/// Some 4-cycle a-b-c-d-a, if any.
std::optional<std::vector<Vertex>> find_quadrilateral(const Graph& g);

/// Subgraph induced on `keep`. Throws ValidationError if that isolates a vertex.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace ricci
