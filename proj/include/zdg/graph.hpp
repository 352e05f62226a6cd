// Plain undirected simple graphs plus the metric computations the
// zero-divisor graph analysis relies on: all-pairs BFS diameter, shortest
// cycle (girth) via per-vertex BFS, connectivity, bipartiteness and the
// star-graph shape test.

#ifndef ZDG_GRAPH_HPP_
#define ZDG_GRAPH_HPP_

#include <vector>

#include "zdg/metric.hpp"

namespace zdg {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;  // symmetric, irreflexive

  SimpleGraph() = default;
  explicit SimpleGraph(int num_vertices)
      : n(num_vertices),
        adj(num_vertices, std::vector<char>(num_vertices, 0)) {}

  void add_edge(int u, int v) {
    adj[u][v] = 1;
    adj[v][u] = 1;
  }

  bool adjacent(int u, int v) const { return adj[u][v] != 0; }

  int degree(int u) const;
  int edge_count() const;
};

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(SimpleGraph const& g, int src);

bool is_connected(SimpleGraph const& g);
bool is_bipartite(SimpleGraph const& g);

// A star is K_{1,m} with m >= 1: every edge shares one common vertex and
// no vertex is isolated.
bool is_star(SimpleGraph const& g);

// undefined for the empty graph, 0 for a single vertex, infinite when
// disconnected, otherwise the largest BFS eccentricity.
MetricValue diameter(SimpleGraph const& g);

// Shortest cycle length via BFS from every vertex; infinite for forests,
// undefined for the empty graph.
MetricValue girth(SimpleGraph const& g);

}  // namespace zdg

#endif  // ZDG_GRAPH_HPP_
