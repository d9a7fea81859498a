#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conncert/graph.hpp"

namespace conncert {

/// Shortest-cycle length, or Acyclic for forests. Never a sentinel integer.
class Girth {
 public:
  static Girth acyclic() { return Girth(); }
  static Girth of(int length);

  bool is_finite() const noexcept { return length_.has_value(); }
  /// Throws Domain for Acyclic.
  int value() const;
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}
  std::optional<int> length_;
};

Girth girth(const Graph& g);

/// Maximum clique size (Bron-Kerbosch with Tomita pivoting). 1 for edgeless graphs.
int clique_number(const Graph& g);

/// Global edge connectivity; 0 for disconnected graphs and for K1.
int edge_connectivity(const Graph& g);

struct EdgeCutWitness {
  int connectivity = 0;
  VertexSet side;  ///< |side| <= n/2 and cut_degree(side) == connectivity
};

EdgeCutWitness edge_connectivity_witness(const Graph& g);

/// Vertex connectivity; n-1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

struct VertexCutWitness {
  int connectivity = 0;
  VertexSet cut;
  VertexSet smallest_component;
};

/// Throws CompleteGraph (no vertex cut exists) or Disconnected.
VertexCutWitness vertex_connectivity_witness(const Graph& g);

/// |E| <= floor((r-1) n^2 / (2r)). Throws Domain unless r >= 1 and omega(G) <= r.
bool turan_edge_bound_holds(const Graph& g, int r);

}  // namespace conncert
