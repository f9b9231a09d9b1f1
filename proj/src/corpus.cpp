#include "ricci/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ricci/coxeter.hpp"
#include "ricci/errors.hpp"

namespace ricci::corpus {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Graph from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.emplace_back(std::to_string(a), std::to_string(b));
  return Graph(edges);
}

Graph from_adjacency(const Adjacency& adj) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    for (int u : adj[static_cast<std::size_t>(v)])
      if (v < u) pairs.emplace_back(v, u);
  return from_pairs(pairs);
}

// AHU encoding of the tree rooted at `root`.
std::string rooted_code(const Adjacency& adj, int root, int parent) {
  std::vector<std::string> children;
  for (int c : adj[static_cast<std::size_t>(root)])
    if (c != parent) children.push_back(rooted_code(adj, c, root));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<int> centers(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int u : adj[static_cast<std::size_t>(v)])
        if (--degree[static_cast<std::size_t>(u)] == 1) next.push_back(u);
    layer = std::move(next);
  }
  return layer;
}

std::string canonical_tree(const Adjacency& adj) {
  std::string best;
  for (int c : centers(adj)) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Adjacency> tree_adjacencies(int n) {
  std::vector<Adjacency> level{Adjacency{{1}, {0}}};
  for (int size = 3; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Adjacency> next;
    for (const auto& t : level) {
      for (int v = 0; v < size - 1; ++v) {
        Adjacency grown = t;
        grown.push_back({v});
        grown[static_cast<std::size_t>(v)].push_back(size - 1);
        if (seen.insert(canonical_tree(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

Graph path_graph(int n) {
  if (n < 2) throw DomainError("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(pairs);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return from_pairs(pairs);
}

Graph complete_graph(int n) {
  if (n < 2) throw DomainError("complete graph needs at least 2 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return from_pairs(pairs);
}

Graph star_graph(int k) {
  if (k < 1) throw DomainError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back("c", std::to_string(i));
  return Graph(edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_pairs(pairs);
}

Graph regular_tree(int d, int depth) {
  if (d < 2 || depth < 1) throw DomainError("regular tree needs d >= 2 and depth >= 1");
  std::vector<Edge> edges;
  std::function<void(const std::string&, int, int)> grow = [&](const std::string& node, int children, int level) {
    if (level == depth) return;
    for (int c = 0; c < children; ++c) {
      const std::string child = node + "." + std::to_string(c);
      edges.emplace_back(node, child);
      grow(child, d - 1, level + 1);
    }
  };
  grow("r", d, 0);
  return Graph(edges);
}

std::vector<Graph> trees(int n) {
  if (n < 2) throw DomainError("trees need at least 2 vertices");
  std::vector<Graph> out;
  for (const auto& adj : tree_adjacencies(n)) out.push_back(from_adjacency(adj));
  return out;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 2) throw DomainError("random graph needs at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    pairs.emplace(pick(rng), v);
  }
  std::bernoulli_distribution extra(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (extra(rng)) pairs.emplace(a, b);
  return from_pairs({pairs.begin(), pairs.end()});
}

std::vector<NamedGraph> small_graphs() {
  std::vector<NamedGraph> out;
  for (int n = 2; n <= 10; ++n) {
    int k = 0;
    for (auto& t : trees(n)) out.push_back({"tree" + std::to_string(n) + "_" + std::to_string(k++), std::move(t)});
  }
  for (int n = 3; n <= 10; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"petersen", petersen_graph()});
  return out;
}

std::vector<NamedGraph> random_graphs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(4, 10);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  std::vector<NamedGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = size(rng);
    const double p = density(rng);
    out.push_back({"random" + std::to_string(i), random_connected_graph(n, p, rng())});
  }
  return out;
}

std::vector<NamedGraph> coxeter_graphs() {
  using namespace coxeter;
  std::vector<NamedGraph> out;
  const auto add = [&](ModelKind kind, int p, const std::string& name) {
    out.push_back({name, weak_order_graph(group_model(kind, p))});
  };
  add(ModelKind::Symmetric, 2, "weak_A2");
  add(ModelKind::Symmetric, 3, "weak_A3");
  add(ModelKind::Signed, 2, "weak_B2");
  add(ModelKind::Signed, 3, "weak_B3");
  for (int m = 3; m <= 8; ++m) add(ModelKind::Dihedral, m, "weak_I2_" + std::to_string(m));
  out.push_back({"bruhat_S3", bruhat_graph_symmetric(3)});
  out.push_back({"bruhat_S4", bruhat_graph_symmetric(4)});
  return out;
}

std::vector<NamedGraph> standard_corpus(std::uint64_t seed) {
  auto out = small_graphs();
  for (auto& g : random_graphs(20, seed)) out.push_back(std::move(g));
  for (auto& g : coxeter_graphs()) out.push_back(std::move(g));
  for (int d = 3; d <= 5; ++d) out.push_back({"regular_tree_" + std::to_string(d), regular_tree(d, 3)});
  return out;
}

}  // namespace ricci::corpus
