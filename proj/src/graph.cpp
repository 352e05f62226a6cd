#include "zdg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace zdg {

int SimpleGraph::degree(int u) const {
  int d = 0;
  for (int v = 0; v < n; ++v) {
    d += adj[u][v] ? 1 : 0;
  }
  return d;
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int u = 0; u < n; ++u) {
    twice += degree(u);
  }
  return twice / 2;
}

std::vector<int> bfs_distances(SimpleGraph const& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u][v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(SimpleGraph const& g) {
  if (g.n == 0) {
    return true;
  }
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

bool is_bipartite(SimpleGraph const& g) {
  std::vector<int> color(g.n, -1);
  std::queue<int> q;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) {
      continue;
    }
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n; ++v) {
        if (!g.adj[u][v]) {
          continue;
        }
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_star(SimpleGraph const& g) {
  if (g.n < 2) {
    return false;
  }
  for (int c = 0; c < g.n; ++c) {
    if (g.degree(c) != g.n - 1) {
      continue;
    }
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) {
      if (v != c && g.degree(v) != 1) {
        ok = false;
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

MetricValue diameter(SimpleGraph const& g) {
  if (g.n == 0) {
    return MetricValue::undefined();
  }
  if (g.n == 1) {
    return MetricValue::finite(0);
  }
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < g.n; ++v) {
      if (dist[v] < 0) {
        return MetricValue::infinite();
      }
      best = std::max(best, dist[v]);
    }
  }
  return MetricValue::finite(best);
}

MetricValue girth(SimpleGraph const& g) {
  if (g.n == 0) {
    return MetricValue::undefined();
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.n), parent(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n; ++v) {
        if (!g.adj[u][v]) {
          continue;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        }
      }
    }
    // Every non-tree edge closes a cycle through the BFS tree; the minimum
    // over all start vertices is exact.
    for (int u = 0; u < g.n; ++u) {
      if (dist[u] < 0) {
        continue;
      }
      for (int v = u + 1; v < g.n; ++v) {
        if (!g.adj[u][v] || dist[v] < 0) {
          continue;
        }
        if (parent[u] == v || parent[v] == u) {
          continue;
        }
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    return MetricValue::infinite();
  }
  return MetricValue::finite(best);
}

}  // namespace zdg
