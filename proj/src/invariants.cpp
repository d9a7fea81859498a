#include "conncert/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "conncert/error.hpp"
#include "unit_flow.hpp"

namespace conncert {

Girth Girth::of(int length) {
  if (length < 3) throw Error(ErrorCode::Domain, "girth must be at least 3");
  return Girth(length);
}

int Girth::value() const {
  if (!length_) throw Error(ErrorCode::Domain, "acyclic graph has no girth");
  return *length_;
}

std::string Girth::to_string() const { return length_ ? std::to_string(*length_) : std::string("acyclic"); }

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      const int du = dist[static_cast<std::size_t>(u)];
      // Any cycle found from here on is at least 2*du+1 long.
      if (2 * du + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[tail++] = w;
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::acyclic() : Girth::of(best);
}

namespace {

// Bron-Kerbosch over a bitset type. Only the clique size is tracked, so the
// excluded set X is unnecessary: branches are pruned by |R| + |P| <= best.
struct WordSet {
  std::uint64_t bits;
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  int first() const { return std::countr_zero(bits); }
  bool contains(int v) const { return (bits >> v) & 1U; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
  WordSet operator&(const WordSet& o) const { return {bits & o.bits}; }
  WordSet minus(const WordSet& o) const { return {bits & ~o.bits}; }
};

struct WideSet {
  VertexSet set;
  int size() const { return set.size(); }
  bool empty() const { return set.empty(); }
  int first() const { return set.first(); }
  bool contains(int v) const { return set.contains(v); }
  void erase(int v) { set.erase(v); }
  WideSet operator&(const WideSet& o) const { return {set & o.set}; }
  WideSet minus(const WideSet& o) const { return {set - o.set}; }
};

template <typename Set>
void expand_clique(const std::vector<Set>& rows, int depth, Set candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, depth);
    return;
  }
  if (depth + candidates.size() <= best) return;
  // Pivot: the candidate with most neighbours inside the candidate set.
  int pivot = candidates.first();
  int pivot_hits = -1;
  for (Set probe = candidates; !probe.empty();) {
    const int u = probe.first();
    probe.erase(u);
    const int hits = (rows[static_cast<std::size_t>(u)] & candidates).size();
    if (hits > pivot_hits) {
      pivot_hits = hits;
      pivot = u;
    }
  }
  Set branch = candidates.minus(rows[static_cast<std::size_t>(pivot)]);
  while (!branch.empty()) {
    const int v = branch.first();
    branch.erase(v);
    expand_clique(rows, depth + 1, candidates & rows[static_cast<std::size_t>(v)], best);
    candidates.erase(v);
    if (depth + candidates.size() <= best) return;
  }
}

}  // namespace

int clique_number(const Graph& g) {
  const int n = g.order();
  int best = 1;
  if (n <= 64) {
    std::vector<WordSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows.push_back({g.row_mask(v)});
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand_clique(rows, 0, WordSet{all}, best);
  } else {
    std::vector<WideSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows.push_back({g.neighbor_set(v)});
    expand_clique(rows, 0, WideSet{VertexSet::full(n)}, best);
  }
  return best;
}

namespace {

detail::UnitFlowNetwork edge_network(const Graph& g) {
  detail::UnitFlowNetwork net(g.order());
  for (auto [u, v] : g.edges()) net.add_arc(u, v, 1, 1);
  return net;
}

// Vertex v becomes v_in = 2v and v_out = 2v+1 joined by a unit arc.
detail::UnitFlowNetwork split_network(const Graph& g) {
  const int n = g.order();
  detail::UnitFlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, n);
    net.add_arc(2 * v + 1, 2 * u, n);
  }
  return net;
}

struct PairResult {
  int value;
  int s;
  int t;
};

// s < 0 in the result means no pair beats the trivial cut around a
// minimum-degree vertex. Flows are capped at the running best, so a capped
// pair is not recorded: its true cut may be larger.
PairResult min_edge_flow(const Graph& g, detail::UnitFlowNetwork& net) {
  PairResult best{g.min_degree(), -1, -1};
  for (int v = 1; v < g.order(); ++v) {
    const int f = net.max_flow(0, v, best.value);
    if (f < best.value) best = {f, 0, v};
  }
  return best;
}

// Even's scheme: a minimum cut S misses one of the first |S|+1 vertices, and
// that vertex is separated from some non-neighbour by S.
PairResult min_vertex_flow(const Graph& g, detail::UnitFlowNetwork& net) {
  const int n = g.order();
  PairResult best{n - 1, -1, -1};
  for (int s = 0; s < n && s <= best.value; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      const int f = net.max_flow(2 * s + 1, 2 * t, best.value);
      if (f < best.value || best.s < 0) best = {f, s, t};
    }
  }
  return best;
}

bool is_complete(const Graph& g) {
  const std::int64_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return 0;
  auto net = edge_network(g);
  return min_edge_flow(g, net).value;
}

EdgeCutWitness edge_connectivity_witness(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorCode::TooSmall, "edge cut needs at least two vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "edge cut witness needs a connected graph");
  auto net = edge_network(g);
  const auto best = min_edge_flow(g, net);
  VertexSet side(n);
  if (best.s < 0) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == best.value) {
        side.insert(v);
        break;
      }
    return {best.value, std::move(side)};
  }
  net.max_flow(best.s, best.t, std::numeric_limits<int>::max());
  const auto reach = net.residual_reachable(best.s);
  for (int v = 0; v < n; ++v)
    if (reach[static_cast<std::size_t>(v)]) side.insert(v);
  if (2 * side.size() > n) side = side.complement();
  return {best.value, std::move(side)};
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  auto net = split_network(g);
  return min_vertex_flow(g, net).value;
}

VertexCutWitness vertex_connectivity_witness(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) throw Error(ErrorCode::CompleteGraph, "complete graphs have no vertex cut");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "vertex cut witness needs a connected graph");
  auto net = split_network(g);
  const auto best = min_vertex_flow(g, net);
  net.max_flow(2 * best.s + 1, 2 * best.t, std::numeric_limits<int>::max());
  const auto reach = net.residual_reachable(2 * best.s + 1);
  VertexSet cut(n);
  for (int v = 0; v < n; ++v)
    if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut.insert(v);

  const auto rest = induced_delete(g, cut);
  VertexSet smallest(n);
  int smallest_size = std::numeric_limits<int>::max();
  for (const auto& comp : components(rest.graph)) {
    if (comp.size() < smallest_size) {
      smallest_size = comp.size();
      smallest = VertexSet(n);
      for (int v : comp.members()) smallest.insert(rest.original[static_cast<std::size_t>(v)]);
    }
  }
  return {best.value, std::move(cut), std::move(smallest)};
}

bool turan_edge_bound_holds(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorCode::Domain, "Turan bound needs r >= 1");
  if (clique_number(g) > r) throw Error(ErrorCode::Domain, "clique number exceeds r");
  const std::int64_t n = g.order();
  return g.edge_count() <= ((r - 1) * n * n) / (2 * r);
}

}  // namespace conncert
