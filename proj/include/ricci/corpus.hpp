#pragma once

// Named test graphs shared by the verification suites, the CLI and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci::corpus {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Vertices are "0".."n-1".
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Centre "c", leaves "0".."k-1".
Graph star_graph(int k);
Graph petersen_graph();

/// Root "r" with d children; every other internal vertex has d - 1 children;
/// leaves sit at distance `depth` from the root.
Graph regular_tree(int d, int depth);

/// Every tree on n vertices up to isomorphism.
std::vector<Graph> trees(int n);

/// Random spanning tree plus each remaining pair with probability p.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Trees on 2..10 vertices, C3..C10, K2..K6, Petersen.
std::vector<NamedGraph> small_graphs();

/// `count` random connected graphs on 4..10 vertices.
std::vector<NamedGraph> random_graphs(int count, std::uint64_t seed);

/// Weak orders of A2, A3, B2, B3, I2(3..8) and Bruhat graphs of S3, S4.
std::vector<NamedGraph> coxeter_graphs();

/// Everything above plus depth-3 regular trees of degree 3..5.
std::vector<NamedGraph> standard_corpus(std::uint64_t seed);

}  // namespace ricci::corpus
