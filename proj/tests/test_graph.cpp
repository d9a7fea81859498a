#include <gtest/gtest.h>

#include <numeric>

#include "conncert/corpus.hpp"
#include "conncert/error.hpp"
#include "conncert/graph.hpp"
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

Graph k4() { return named("complete", {4}); }

}  // namespace

TEST(Graph, PathDegrees) {
  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.degree(0), 1);
  EXPECT_EQ(p3.degree(1), 2);
  EXPECT_EQ(p3.degree(2), 1);
  EXPECT_EQ(p3.min_degree(), 1);
  EXPECT_EQ(p3.max_degree(), 2);
  EXPECT_EQ(p3.edge_count(), 2);
}

TEST(Graph, CompleteGraphDegrees) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(g, k4());
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(Graph, PetersenIsCubic) {
  const Graph g = named("petersen");
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { Graph::from_edges(2, {{0, 0}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {{0, 3}}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {{-1, 2}}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { Graph::from_edges(0, {}); }), ErrorCode::EmptyGraph);
  EXPECT_EQ(code_of([] { k4().degree(4); }), ErrorCode::OutOfRange);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g, named("path", {3}));
}

TEST(Graph, EdgesAreLexicographic) {
  const Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(Graph, NeighboursAreSorted) {
  const Graph g = Graph::from_edges(5, {{0, 4}, {0, 2}, {0, 3}, {0, 1}});
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(nb.size(), 4U);
  EXPECT_EQ(g.neighbor_set(0), VertexSet(5, {1, 2, 3, 4}));
  EXPECT_EQ(g.row_mask(0), 0b11110U);
}

TEST(CutDegree, Examples) {
  EXPECT_EQ(cut_degree(k4(), VertexSet(4, {0})), 3);
  EXPECT_EQ(cut_degree(named("cycle", {5}), VertexSet(5, {0, 1})), 2);
  EXPECT_EQ(cut_degree(named("petersen"), VertexSet(10, {0, 1, 2, 3, 4})), 5);
}

TEST(CutDegree, RejectsEmptyAndFull) {
  EXPECT_EQ(code_of([] { cut_degree(k4(), VertexSet(4)); }), ErrorCode::EmptyOrFull);
  EXPECT_EQ(code_of([] { cut_degree(k4(), VertexSet::full(4)); }), ErrorCode::EmptyOrFull);
}

TEST(Components, Examples) {
  EXPECT_TRUE(is_connected(k4()));
  EXPECT_EQ(components(k4()).size(), 1U);
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two_edges));
  const auto parts = components(two_edges);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], VertexSet(4, {0, 1}));
  EXPECT_EQ(parts[1], VertexSet(4, {2, 3}));
  EXPECT_TRUE(is_connected(named("petersen")));
  EXPECT_TRUE(is_connected(Graph::from_edges(1, {})));
}

TEST(InducedDelete, Examples) {
  const auto k3 = induced_delete(k4(), VertexSet(4, {2}));
  EXPECT_EQ(k3.graph, named("complete", {3}));
  EXPECT_EQ(k3.original, (std::vector<int>{0, 1, 3}));

  const auto p4 = induced_delete(named("cycle", {5}), VertexSet(5, {0}));
  EXPECT_EQ(p4.graph, named("path", {4}));

  const Graph petersen = named("petersen");
  VertexSet closed = petersen.neighbor_set(0);
  closed.insert(0);
  const auto rest = induced_delete(petersen, closed);
  EXPECT_EQ(rest.graph.order(), 6);
  EXPECT_TRUE(is_connected(rest.graph));
}

TEST(InducedDelete, RejectsFullDeletion) {
  EXPECT_EQ(code_of([] { induced_delete(k4(), VertexSet::full(4)); }), ErrorCode::FullDeletion);
}

TEST(GraphProperties, HandshakeAndCutSymmetry) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled(n, {})) {
      int degree_sum = 0;
      for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
      ASSERT_EQ(degree_sum, 2 * g.edge_count());
      for (std::uint64_t x = 1; x + 1 < (std::uint64_t{1} << n); ++x) {
        const VertexSet set = VertexSet::from_mask(n, x);
        ASSERT_EQ(cut_degree(g, set), cut_degree(g, set.complement()));
      }
    }
  }
}

TEST(VertexSet, BasicOperations) {
  VertexSet s(10, {1, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 1);
  s.insert(4);
  s.erase(1);
  EXPECT_EQ(s.members(), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(s.complement().size(), 7);
  EXPECT_EQ((s & VertexSet(10, {4, 9})), VertexSet(10, {4}));
  EXPECT_EQ((s | VertexSet(10, {9})).size(), 4);
  EXPECT_EQ((s - VertexSet(10, {3})), VertexSet(10, {4, 5}));
  EXPECT_TRUE(s.intersects(VertexSet(10, {5})));
  EXPECT_FALSE(s.intersects(VertexSet(10, {0})));
  EXPECT_EQ(VertexSet(10).first(), -1);
  EXPECT_TRUE(VertexSet(10).empty());
}

TEST(VertexSet, WideUniverse) {
  VertexSet s(200);
  s.insert(0);
  s.insert(64);
  s.insert(199);
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.complement().size(), 197);
  EXPECT_FALSE(s.complement().contains(199));
  EXPECT_EQ(VertexSet::full(200).size(), 200);
  EXPECT_EQ(VertexSet::from_members(200, {5, 150}).members(), (std::vector<int>{5, 150}));
}

TEST(VertexSet, MaskRoundTrip) {
  const VertexSet s = VertexSet::from_mask(7, 0b1010011);
  EXPECT_EQ(s.members(), (std::vector<int>{0, 1, 4, 6}));
  EXPECT_EQ(s.mask(), 0b1010011U);
  EXPECT_EQ(VertexSet::full(64).size(), 64);
}

TEST(VertexSet, RangeChecked) {
  VertexSet s(4);
  EXPECT_EQ(code_of([&] { s.insert(4); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([&] { s.erase(-1); }), ErrorCode::OutOfRange);
}
