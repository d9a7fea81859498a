#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "conncert/corpus.hpp"
#include "conncert/error.hpp"
#include "conncert/invariants.hpp"

using namespace conncert;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no conncert::Error thrown";
  return ErrorCode::Domain;
}

Graph two_triangles_sharing_vertex() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

int brute_girth_or_zero(const Girth& g) { return g.is_finite() ? g.value() : 0; }

}  // namespace

TEST(Girth, Examples) {
  EXPECT_EQ(girth(named("cycle", {5})), Girth::of(5));
  EXPECT_EQ(girth(named("petersen")), Girth::of(5));
  EXPECT_EQ(girth(named("heawood")), Girth::of(6));
  EXPECT_EQ(girth(named("complete_bipartite", {3, 3})), Girth::of(4));
  EXPECT_EQ(girth(named("complete", {4})), Girth::of(3));
  EXPECT_FALSE(girth(named("star", {4})).is_finite());
  EXPECT_FALSE(girth(named("path", {6})).is_finite());
  EXPECT_EQ(girth(Graph::from_edges(1, {})), Girth::acyclic());
}

TEST(Girth, AcyclicHasNoValue) {
  EXPECT_EQ(code_of([] { Girth::acyclic().value(); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { Girth::of(2); }), ErrorCode::Domain);
  EXPECT_EQ(Girth::acyclic().to_string(), "acyclic");
  EXPECT_EQ(Girth::of(7).to_string(), "7");
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(named("complete", {4})), 4);
  EXPECT_EQ(clique_number(named("cycle", {5})), 2);
  EXPECT_EQ(clique_number(named("petersen")), 2);
  EXPECT_EQ(clique_number(Graph::from_edges(3, {})), 1);
  EXPECT_EQ(clique_number(two_triangles_sharing_vertex()), 3);
}

TEST(CliqueNumber, WideGraphs) {
  // Dense G(n, p) beyond one machine word; a planted clique bounds omega below.
  Graph g = random_gnp(80, 0.3, 5);
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) edges.emplace_back(i * 6, j * 6);
  g = Graph::from_edges(80, edges);
  EXPECT_GE(clique_number(g), 12);
  EXPECT_EQ(clique_number(named("complete", {70})), 70);
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(named("complete", {4})), 3);
  EXPECT_EQ(edge_connectivity(named("path", {3})), 1);
  EXPECT_EQ(edge_connectivity(named("petersen")), 3);
  EXPECT_EQ(edge_connectivity(named("heawood")), 3);
  EXPECT_EQ(edge_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})), 0);
  EXPECT_EQ(edge_connectivity(Graph::from_edges(1, {})), 0);
}

TEST(EdgeConnectivity, Witness) {
  const auto p3 = edge_connectivity_witness(named("path", {3}));
  EXPECT_EQ(p3.connectivity, 1);
  EXPECT_EQ(p3.side.size(), 1);
  EXPECT_NE(p3.side.first(), 1);

  const Graph c5 = named("cycle", {5});
  const auto w = edge_connectivity_witness(c5);
  EXPECT_EQ(w.connectivity, 2);
  EXPECT_EQ(cut_degree(c5, w.side), 2);

  const Graph petersen = named("petersen");
  const auto pw = edge_connectivity_witness(petersen);
  EXPECT_EQ(pw.connectivity, 3);
  EXPECT_EQ(cut_degree(petersen, pw.side), 3);
  EXPECT_LE(pw.side.size(), 5);

  EXPECT_EQ(code_of([] { edge_connectivity_witness(Graph::from_edges(1, {})); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([] { edge_connectivity_witness(Graph::from_edges(4, {{0, 1}, {2, 3}})); }),
            ErrorCode::Disconnected);
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(named("complete", {4})), 3);
  EXPECT_EQ(vertex_connectivity(named("cycle", {5})), 2);
  EXPECT_EQ(vertex_connectivity(named("petersen")), 3);
  EXPECT_EQ(vertex_connectivity(named("heawood")), 3);
  EXPECT_EQ(vertex_connectivity(named("complete_bipartite", {3, 3})), 3);
  EXPECT_EQ(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})), 0);
  EXPECT_EQ(vertex_connectivity(Graph::from_edges(1, {})), 0);
}

TEST(VertexConnectivity, Witness) {
  const auto p3 = vertex_connectivity_witness(named("path", {3}));
  EXPECT_EQ(p3.connectivity, 1);
  EXPECT_EQ(p3.cut, VertexSet(3, {1}));
  EXPECT_EQ(p3.smallest_component.size(), 1);

  const auto bowtie = vertex_connectivity_witness(two_triangles_sharing_vertex());
  EXPECT_EQ(bowtie.cut, VertexSet(5, {0}));
  EXPECT_EQ(bowtie.smallest_component.size(), 2);

  const Graph petersen = named("petersen");
  const auto w = vertex_connectivity_witness(petersen);
  EXPECT_EQ(w.connectivity, 3);
  EXPECT_EQ(w.cut.size(), 3);
  EXPECT_FALSE(is_connected(induced_delete(petersen, w.cut).graph));
  EXPECT_GE(w.smallest_component.size(), 1);
  EXPECT_FALSE(w.smallest_component.intersects(w.cut));

  EXPECT_EQ(code_of([] { vertex_connectivity_witness(named("complete", {5})); }), ErrorCode::CompleteGraph);
  EXPECT_EQ(code_of([] { vertex_connectivity_witness(Graph::from_edges(4, {{0, 1}, {2, 3}})); }),
            ErrorCode::Disconnected);
}

TEST(Turan, Examples) {
  EXPECT_TRUE(turan_edge_bound_holds(named("cycle", {5}), 2));
  EXPECT_TRUE(turan_edge_bound_holds(named("complete", {4}), 4));
  EXPECT_EQ(code_of([] { turan_edge_bound_holds(named("complete", {4}), 3); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { turan_edge_bound_holds(named("cycle", {5}), 0); }), ErrorCode::Domain);
  EXPECT_TRUE(turan_edge_bound_holds(named("complete_bipartite", {3, 3}), 2));
}

// Exhaustive agreement with the subset oracles for n <= 5 (n <= 6 runs in the
// acceptance suite), plus seeded samples at n = 7 and 8.
TEST(InvariantOracles, AgreeWithBruteForceSmall) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled(n, {})) {
      ASSERT_EQ(vertex_connectivity(g), brute::vertex_connectivity(g));
      ASSERT_EQ(edge_connectivity(g), brute::edge_connectivity(g));
      ASSERT_EQ(brute_girth_or_zero(girth(g)), brute::girth(g));
      ASSERT_EQ(clique_number(g), brute::clique_number(g));
    }
  }
}

TEST(InvariantOracles, AgreeWithBruteForceSampled) {
  for (double p : {0.3, 0.5, 0.7}) {
    for (const Graph& g : random_gnp_corpus(8, p, 150, 11)) {
      ASSERT_EQ(vertex_connectivity(g), brute::vertex_connectivity(g));
      ASSERT_EQ(edge_connectivity(g), brute::edge_connectivity(g));
      ASSERT_EQ(brute_girth_or_zero(girth(g)), brute::girth(g));
      ASSERT_EQ(clique_number(g), brute::clique_number(g));
    }
  }
}

TEST(InvariantProperties, WhitneyChainAndWitnesses) {
  for (const Graph& g : random_gnp_corpus(12, 0.4, 200, 3)) {
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    ASSERT_LE(kappa, lambda);
    ASSERT_LE(lambda, g.min_degree());
    if (!is_connected(g)) continue;
    const auto ew = edge_connectivity_witness(g);
    ASSERT_EQ(cut_degree(g, ew.side), lambda);
    ASSERT_LE(ew.side.size(), g.order() / 2);
    ASSERT_TRUE(is_connected(induced_delete(g, ew.side.complement()).graph));
    ASSERT_TRUE(is_connected(induced_delete(g, ew.side).graph));
    if (g.edge_count() == static_cast<std::int64_t>(g.order()) * (g.order() - 1) / 2) continue;
    const auto vw = vertex_connectivity_witness(g);
    ASSERT_EQ(vw.cut.size(), kappa);
    ASSERT_FALSE(is_connected(induced_delete(g, vw.cut).graph));
  }
}
