#include <gtest/gtest.h>

#include "gvn/error.hpp"
#include "gvn/graph.hpp"
#include "gvn/suites.hpp"

using namespace gvn;

TEST(Graph, AddAndFind) {
  DirectedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  EdgeIndex e = g.add_edge("a", "b");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.find_edge(0, 1), e);
  EXPECT_FALSE(g.find_edge(1, 0));
  EXPECT_THROW(g.add_vertex("a"), InvalidParameter);
  EXPECT_THROW(g.add_edge("a", "b"), InvalidParameter);
  EXPECT_NO_THROW(g.add_edge("a", "b", 1));
  EXPECT_THROW(g.index_of("zzz"), InvalidParameter);
}

TEST(Graph, LineTree) {
  DirectedGraph g = build_regular_tree(1, 4);
  ASSERT_EQ(g.vertex_count(), 5u);
  ASSERT_EQ(g.edge_count(), 4u);
  for (VertexIndex v = 0; v < 5; ++v) EXPECT_EQ(g.label(v), std::to_string(v + 1));
  EXPECT_EQ(g.edge(2).source, 2u);
  EXPECT_EQ(g.edge(2).target, 3u);
  EXPECT_EQ(g.kind(), GraphKind::regular_tree);
  EXPECT_EQ(g.level(4), 4u);
}

TEST(Graph, WordLabelledTree) {
  DirectedGraph g = build_regular_tree(3, 2);
  EXPECT_EQ(g.vertex_count(), 1u + 3 + 9);
  EXPECT_EQ(g.label(0), "");
  EXPECT_EQ(display_label(g.label(0)), "∅");
  EXPECT_EQ(g.label(1), "1");
  EXPECT_EQ(g.label(4), "11");
  EXPECT_EQ(g.label(12), "33");
  EXPECT_EQ(g.level(g.index_of("21")), 2u);
  // edges run from W to Wj
  for (const Edge& e : g.edges()) {
    const auto& s = g.label(e.source);
    const auto& t = g.label(e.target);
    EXPECT_EQ(t.substr(0, s.size()), s);
    EXPECT_EQ(t.size(), s.size() + 1);
  }
  EXPECT_THROW(build_regular_tree(0, 3), InvalidParameter);
}

TEST(Graph, ShadowedGraph) {
  DirectedGraph g = build_regular_tree(2, 2);
  ShadowedGraph s = shadowed(g);
  ASSERT_EQ(s.steps.size(), 2 * g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    EXPECT_FALSE(s.steps[e].shadow);
    EXPECT_EQ(s.steps[e + g.edge_count()], s.steps[e].inverse());
  }
  ShadowedGraph twice = shadowed(s);
  EXPECT_EQ(twice.steps, s.steps);
}

TEST(Graph, StepsFromIncludeShadows) {
  DirectedGraph g = build_regular_tree(2, 2);
  // "1" has parent ∅ and children 11, 12
  auto out = g.steps_from(g.index_of("1"));
  EXPECT_EQ(out.size(), 3u);
  for (const Step& s : out) EXPECT_EQ(s.from, g.index_of("1"));
}

TEST(Graph, Simplicial) {
  EXPECT_TRUE(is_simplicial(build_regular_tree(2, 3)));
  EXPECT_FALSE(is_simplicial(loop_multiedge_fixture()));
}
