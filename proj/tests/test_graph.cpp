#include <doctest.h>

#include <limits>
#include <random>

#include "zdg/graph.hpp"

using namespace zdg;

namespace {

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) {
    g.add_edge(0, i);
  }
  return g;
}

// independent diameter oracle
MetricValue floyd_warshall_diameter(SimpleGraph const& g) {
  if (g.n == 0) {
    return MetricValue::undefined();
  }
  int const inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, inf));
  for (int i = 0; i < g.n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < g.n; ++j) {
      if (g.adj[i][j]) {
        d[i][j] = 1;
      }
    }
  }
  for (int k = 0; k < g.n; ++k) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) {
          d[i][j] = d[i][k] + d[k][j];
        }
      }
    }
  }
  int best = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (d[i][j] >= inf) {
        return MetricValue::infinite();
      }
      best = std::max(best, d[i][j]);
    }
  }
  return MetricValue::finite(best);
}

// independent girth oracle: shortest cycle through an edge is that edge
// plus the shortest path avoiding it
MetricValue edge_deletion_girth(SimpleGraph const& g) {
  if (g.n == 0) {
    return MetricValue::undefined();
  }
  int best = std::numeric_limits<int>::max();
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.adj[u][v]) {
        continue;
      }
      SimpleGraph h = g;
      h.adj[u][v] = h.adj[v][u] = 0;
      auto dist = bfs_distances(h, u);
      if (dist[v] >= 0) {
        best = std::min(best, dist[v] + 1);
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? MetricValue::infinite()
                                                 : MetricValue::finite(best);
}

bool has_odd_cycle_by_coloring(SimpleGraph const& g) {
  // try all 2-colorings; feasible only for small n
  for (int mask = 0; mask < (1 << g.n); ++mask) {
    bool proper = true;
    for (int u = 0; u < g.n && proper; ++u) {
      for (int v = u + 1; v < g.n && proper; ++v) {
        if (g.adj[u][v] && ((mask >> u) & 1) == ((mask >> v) & 1)) {
          proper = false;
        }
      }
    }
    if (proper) {
      return false;
    }
  }
  return true;
}

SimpleGraph random_graph(std::mt19937_64& rng, int max_n) {
  int const n = static_cast<int>(rng() % (max_n + 1));
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 3 == 0) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("diameter of small shapes") {
    CHECK(diameter(complete_graph(4)) == MetricValue::finite(1));
    CHECK(diameter(path_graph(3)) == MetricValue::finite(2));
    CHECK(diameter(SimpleGraph(2)) == MetricValue::infinite());
    CHECK(diameter(SimpleGraph(1)) == MetricValue::finite(0));
    CHECK(diameter(SimpleGraph(0)) == MetricValue::undefined());
  }

  TEST_CASE("girth of small shapes") {
    CHECK(girth(complete_graph(4)) == MetricValue::finite(3));
    CHECK(girth(cycle_graph(4)) == MetricValue::finite(4));
    CHECK(girth(cycle_graph(5)) == MetricValue::finite(5));
    CHECK(girth(star_graph(3)) == MetricValue::infinite());
    CHECK(girth(SimpleGraph(1)) == MetricValue::infinite());
    CHECK(girth(SimpleGraph(0)) == MetricValue::undefined());
  }

  TEST_CASE("star and bipartite shapes") {
    CHECK(is_star(star_graph(1)));  // a single edge
    CHECK(is_star(star_graph(3)));
    CHECK(!is_star(path_graph(4)));
    CHECK(!is_star(complete_graph(3)));
    CHECK(!is_star(SimpleGraph(1)));
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK(!is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(SimpleGraph(0)));
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(5)));
    CHECK(!is_connected(SimpleGraph(2)));
    CHECK(is_connected(SimpleGraph(1)));
    CHECK(is_connected(SimpleGraph(0)));
  }

  TEST_CASE("random graphs match the independent oracles") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
      auto g = random_graph(rng, 10);
      CAPTURE(trial);
      CHECK(diameter(g) == floyd_warshall_diameter(g));
      CHECK(girth(g) == edge_deletion_girth(g));
      if (g.n <= 12) {
        CHECK(is_bipartite(g) == !has_odd_cycle_by_coloring(g));
      }
    }
  }
}
