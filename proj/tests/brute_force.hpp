#pragma once

// Deliberately naive oracles for cross-checking the library. They share no
// code with it: adjacency comes from a plain matrix, everything else is
// subset enumeration or BFS written out here.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <vector>

#include "conncert/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const conncert::Graph& g) {
  const int n = g.order();
  Matrix a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Connectivity of the subgraph on vertices not in `removed`.
inline bool connected_without(const Matrix& a, std::uint32_t removed) {
  const int n = static_cast<int>(a.size());
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!((removed >> v) & 1U)) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(start);
  seen[start] = true;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w = 0; w < n; ++w) {
      if (!a[u][w] || seen[w] || ((removed >> w) & 1U)) continue;
      seen[w] = true;
      ++reached;
      q.push(w);
    }
  }
  return reached == alive;
}

inline int vertex_connectivity(const conncert::Graph& g) {
  const auto a = matrix_of(g);
  const int n = g.order();
  if (!connected_without(a, 0)) return 0;
  int best = n - 1;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(a, s)) best = size;
  }
  return best;
}

inline int edge_connectivity(const conncert::Graph& g) {
  const auto a = matrix_of(g);
  const int n = g.order();
  if (n < 2) return 0;
  int best = n * n;
  for (std::uint32_t x = 1; x + 1 < (1U << n); ++x) {
    int cut = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (((x >> u) & 1U) && !((x >> v) & 1U) && a[u][v]) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

// 0 for forests. Removing edge uv, the shortest remaining u-v path closes the
// shortest cycle through uv.
inline int girth(const conncert::Graph& g) {
  auto a = matrix_of(g);
  const int n = g.order();
  int best = 0;
  for (auto [u, v] : g.edges()) {
    a[u][v] = a[v][u] = false;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int w = 0; w < n; ++w)
        if (a[x][w] && dist[w] < 0) {
          dist[w] = dist[x] + 1;
          q.push(w);
        }
    }
    if (dist[v] > 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    a[u][v] = a[v][u] = true;
  }
  return best;
}

inline int clique_number(const conncert::Graph& g) {
  const auto a = matrix_of(g);
  const int n = g.order();
  int best = 1;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if (((s >> u) & 1U) && ((s >> v) & 1U) && !a[u][v]) clique = false;
    if (clique) best = size;
  }
  return best;
}

}  // namespace brute
