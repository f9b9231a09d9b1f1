#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "ricci/errors.hpp"

namespace ricci {

Graph::Graph(std::span<const Edge> edges) {
  std::vector<std::string> names;
  names.reserve(2 * edges.size());
  for (const auto& [a, b] : edges) {
    names.push_back(a);
    names.push_back(b);
  }
  build(std::move(names), edges);
}

Graph::Graph(std::span<const std::string> vertices, std::span<const Edge> edges) {
  std::vector<std::string> names(vertices.begin(), vertices.end());
  for (const auto& [a, b] : edges) {
    names.push_back(a);
    names.push_back(b);
  }
  build(std::move(names), edges);
}

void Graph::build(std::vector<std::string> names, std::span<const Edge> edges) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  names_ = std::move(names);
  lookup_.reserve(names_.size());
  for (Vertex v = 0; v < names_.size(); ++v) lookup_.emplace(names_[v], v);

  adjacency_.assign(names_.size(), {});
  for (const auto& [a, b] : edges) {
    if (a == b) throw ValidationError("self-loop at vertex '" + a + "'");
    const Vertex ia = lookup_.at(a);
    const Vertex ib = lookup_.at(b);
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  edge_count_ = 0;
  for (Vertex v = 0; v < names_.size(); ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    if (nb.empty()) throw ValidationError("isolated vertex '" + names_[v] + "'");
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

Vertex Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw LookupError("unknown vertex '" + std::string(name) + "'");
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adjacency_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < size(); ++a)
    for (Vertex b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

Graph load_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b))
      throw ParseError(lineno, "expected two vertex tokens, got '" + line + "'");
    if (fields >> extra)
      throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
    edges.emplace_back(std::move(a), std::move(b));
  }
  if (edges.empty()) throw ValidationError("graph has no edges");
  return Graph(edges);
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [a, b] : g.edges()) {
    out += g.name(a);
    out += ' ';
    out += g.name(b);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> sphere(const Graph& g, Vertex x, std::size_t i) {
  if (x >= g.size()) throw LookupError("vertex index out of range");
  const auto dist = bfs_distances(g, x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (dist[v] == i) out.push_back(v);
  return out;
}

std::vector<Vertex> sphere(const Graph& g, std::string_view x, std::size_t i) {
  return sphere(g, g.index(x), i);
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreachable; });
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw DomainError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

LocalNeighborhood local_neighborhood(const Graph& g, Vertex x) {
  if (x >= g.size()) throw LookupError("vertex index out of range");
  LocalNeighborhood nb;
  nb.center = x;
  nb.center_degree = g.degree(x);

  const auto s1 = g.neighbors(x);
  nb.sphere1.assign(s1.begin(), s1.end());
  const std::size_t d = nb.sphere1.size();

  // Collect B(2,x) from the neighbours of B(1,x); adjacency lists are sorted,
  // so a sort+unique keeps the index order.
  for (Vertex v : nb.sphere1)
    for (Vertex u : g.neighbors(v))
      if (u != x && !g.adjacent(x, u)) nb.sphere2.push_back(u);
  std::sort(nb.sphere2.begin(), nb.sphere2.end());
  nb.sphere2.erase(std::unique(nb.sphere2.begin(), nb.sphere2.end()), nb.sphere2.end());
  const std::size_t m = nb.sphere2.size();

  nb.adj1 = Eigen::MatrixXi::Zero(d, d);
  nb.links = Eigen::MatrixXi::Zero(d, m);
  nb.t.assign(d, 0);
  nb.n.assign(m, 0);
  nb.sphere1_degrees.resize(d);

  for (std::size_t i = 0; i < d; ++i) {
    const Vertex v = nb.sphere1[i];
    nb.sphere1_degrees[i] = g.degree(v);
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j && g.adjacent(v, nb.sphere1[j])) {
        nb.adj1(i, j) = 1;
        ++nb.t[i];
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (g.adjacent(v, nb.sphere2[k])) {
        nb.links(i, k) = 1;
        ++nb.n[k];
      }
    }
  }
  return nb;
}

namespace {

std::size_t common_neighbors(const Graph& g, Vertex a, Vertex b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::size_t count = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::size_t max_joint_triangles(const Graph& g) {
  // A triangle through v and v' needs the edge {v,v'}; its third vertex is a
  // common neighbour.
  std::size_t best = 0;
  for (auto [a, b] : g.edges()) best = std::max(best, common_neighbors(g, a, b));
  return best;
}

std::optional<std::vector<Vertex>> find_triangle(const Graph& g) {
  for (auto [a, b] : g.edges())
    for (Vertex c : g.neighbors(a))
      if (c != b && g.adjacent(b, c)) return std::vector<Vertex>{a, b, c};
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_quadrilateral(const Graph& g) {
  // For each a, a vertex c != a reached from two different neighbours of a
  // closes a 4-cycle a-b-c-b'-a.
  std::vector<std::optional<Vertex>> via(g.size());
  for (Vertex a = 0; a < g.size(); ++a) {
    std::fill(via.begin(), via.end(), std::nullopt);
    for (Vertex b : g.neighbors(a)) {
      for (Vertex c : g.neighbors(b)) {
        if (c == a) continue;
        if (via[c] && *via[c] != b) return std::vector<Vertex>{a, *via[c], c, b};
        via[c] = b;
      }
    }
  }
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<bool> in(g.size(), false);
  std::vector<std::string> names;
  for (Vertex v : keep) {
    in.at(v) = true;
    names.push_back(g.name(v));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (in[a] && in[b]) edges.emplace_back(g.name(a), g.name(b));
  return Graph(names, edges);
}

}  // namespace ricci
