#include "ssg/metrics.hpp"

#include <queue>
#include <vector>

namespace ssg {

namespace {

// Visits all vertices reachable from src, returning distances (-1 unreached).
std::vector<std::int64_t> bfs_distances(const RotationGraph& g, std::int64_t src) {
  std::vector<std::int64_t> dist(g.n_vertices(), -1);
  std::queue<std::int64_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const std::int64_t v = q.front();
    q.pop();
    for (int p = 0; p < g.degree(); ++p) {
      const std::int64_t u = g.neighbor(v, p);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const RotationGraph& g) {
  if (g.n_vertices() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  for (std::int64_t d : dist)
    if (d < 0) return false;
  return true;
}

std::optional<std::int64_t> diameter(const RotationGraph& g) {
  if (g.n_vertices() == 0) return 0;
  std::int64_t diam = 0;
  for (std::int64_t src = 0; src < g.n_vertices(); ++src) {
    const auto dist = bfs_distances(g, src);
    for (std::int64_t d : dist) {
      if (d < 0) return std::nullopt;
      if (d > diam) diam = d;
    }
  }
  return diam;
}

std::optional<std::int64_t> girth(const RotationGraph& g) {
  const std::int64_t n = g.n_vertices();
  const int d = g.degree();

  // Loops first (1-port or 2-port), then parallel edges between distinct vertices.
  for (std::int64_t v = 0; v < n; ++v)
    for (int p = 0; p < d; ++p)
      if (g.neighbor(v, p) == v) return 1;
  {
    std::vector<std::int64_t> mark(n, -1);
    for (std::int64_t v = 0; v < n; ++v)
      for (int p = 0; p < d; ++p) {
        const std::int64_t u = g.neighbor(v, p);
        if (u > v) {
          if (mark[u] == v) return 2;
          mark[u] = v;
        }
      }
  }

  // Simple graph now: BFS from every vertex; a non-tree edge seen from root r
  // closes a cycle of length dist[v] + dist[u] + 1. The minimum over all
  // roots is exact.
  std::int64_t best = -1;
  std::vector<std::int64_t> dist(n);
  std::vector<std::int64_t> via_edge(n);  // edge id used to reach the vertex
  auto edge_id = [d](std::int64_t v, int p) { return v * d + p; };
  for (std::int64_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::int64_t{-1});
    std::queue<std::int64_t> q;
    dist[root] = 0;
    via_edge[root] = -1;
    q.push(root);
    while (!q.empty()) {
      const std::int64_t v = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[v] >= best) continue;  // cannot improve
      for (int p = 0; p < d; ++p) {
        const auto [u, pu] = g.rot(v, p);
        const std::int64_t id = std::min(edge_id(v, p), edge_id(u, pu));
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          via_edge[u] = id;
          q.push(u);
        } else if (via_edge[u] != id && via_edge[v] != id) {
          const std::int64_t len = dist[v] + dist[u] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool even_walk_between_all(const RotationGraph& g) {
  // BFS on the parity double cover from (0, even).
  const std::int64_t n = g.n_vertices();
  if (n <= 1) return true;
  std::vector<std::int64_t> dist(2 * n, -1);
  std::queue<std::int64_t> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const std::int64_t s = q.front();
    q.pop();
    const std::int64_t v = s / 2;
    const std::int64_t parity = s % 2;
    for (int p = 0; p < g.degree(); ++p) {
      const std::int64_t t = g.neighbor(v, p) * 2 + (1 - parity);
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        q.push(t);
      }
    }
  }
  for (std::int64_t v = 0; v < n; ++v)
    if (dist[2 * v] < 0) return false;  // no even walk from vertex 0
  return true;
}

}  // namespace ssg
