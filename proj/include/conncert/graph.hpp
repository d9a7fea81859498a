#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conncert/vertex_set.hpp"

namespace conncert {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are sorted and duplicate-free; a parallel row of
/// adjacency bitsets gives O(1) adjacency tests. Instances are safe to share
/// across threads once built.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
  /// and out-of-range endpoints throw.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }

  std::span<const int> neighbors(int v) const;
  const VertexSet& neighbor_set(int v) const;
  bool adjacent(int u, int v) const;

  int degree(int v) const;
  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return max_degree_; }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Adjacency row as a machine word. Requires order() <= 64.
  std::uint64_t row_mask(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph(int n, std::vector<std::vector<int>> adj);

  int n_ = 0;
  std::int64_t m_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> rows_;
};

/// d(X): edges with exactly one endpoint in X. Throws EmptyOrFull for X = {} or V.
std::int64_t cut_degree(const Graph& g, const VertexSet& x);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// G - S with vertices relabelled contiguously; original[i] is the label of
/// new vertex i in the input graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed);

}  // namespace conncert
