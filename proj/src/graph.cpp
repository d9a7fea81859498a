#include "conncert/graph.hpp"

#include <algorithm>
#include <string>

#include "conncert/error.hpp"

namespace conncert {

Graph::Graph(int n, std::vector<std::vector<int>> adj) : n_(n), adj_(std::move(adj)) {
  rows_.reserve(static_cast<std::size_t>(n));
  min_degree_ = n;
  for (int v = 0; v < n; ++v) {
    const auto& nb = adj_[static_cast<std::size_t>(v)];
    rows_.push_back(VertexSet::from_members(n, nb));
    const int d = static_cast<int>(nb.size());
    m_ += d;
    min_degree_ = std::min(min_degree_, d);
    max_degree_ = std::max(max_degree_, d);
  }
  m_ /= 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorCode::EmptyGraph, "a graph needs at least one vertex");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return Graph(n, std::move(adj));
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  return adj_[static_cast<std::size_t>(v)];
}

const VertexSet& Graph::neighbor_set(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  return rows_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const { return neighbor_set(u).contains(v); }

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::row_mask(int v) const { return neighbor_set(v).mask(); }

std::int64_t cut_degree(const Graph& g, const VertexSet& x) {
  const int k = x.size();
  if (k == 0 || k == g.order()) throw Error(ErrorCode::EmptyOrFull, "cut side must be a nonempty proper subset");
  std::int64_t crossing = 0;
  for (int v : x.members())
    for (int w : g.neighbors(v))
      if (!x.contains(w)) ++crossing;
  return crossing;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back(n);
    label[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().insert(v);
      for (int w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  if (removed.size() >= n) throw Error(ErrorCode::FullDeletion, "cannot delete every vertex");
  std::vector<int> relabel(static_cast<std::size_t>(n), -1);
  std::vector<int> original;
  for (int v = 0; v < n; ++v) {
    if (removed.contains(v)) continue;
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(original.size());
    original.push_back(v);
  }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    const int a = relabel[static_cast<std::size_t>(u)];
    const int b = relabel[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) kept.emplace_back(a, b);
  }
  return {Graph::from_edges(static_cast<int>(original.size()), kept), std::move(original)};
}

}  // namespace conncert
