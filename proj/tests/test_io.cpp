#include <gtest/gtest.h>

#include "gvn/error.hpp"
#include "gvn/io.hpp"
#include "gvn/suites.hpp"

using namespace gvn;

TEST(Io, CoordinateText) {
  SparseComplexMatrix m(3);
  m.set(2, 0, {0.5, -1.0});
  m.set(0, 1, 1.0);
  EXPECT_EQ(matrix_to_coord(m), "dim 3 nnz 2\n0 1 1 0\n2 0 0.5 -1\n");
  auto j = matrix_to_json(m);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["entries"][1][3], -1.0);
}

TEST(Io, CoordinateTextKeepsPrecision) {
  SparseComplexMatrix m(1);
  m.set(0, 0, 0.1);
  EXPECT_EQ(matrix_to_coord(m), "dim 1 nnz 1\n0 0 0.10000000000000001 0\n");
}

TEST(Io, GraphRoundTrip) {
  DirectedGraph g = loop_multiedge_fixture();
  DirectedGraph back = graph_from_json(graph_to_json(g));
  ASSERT_EQ(back.vertex_count(), 2u);
  ASSERT_EQ(back.edge_count(), 3u);
  EXPECT_EQ(back.edge(2).tag, 1);
  DirectedGraph t = graph_from_json(graph_to_json(build_regular_tree(2, 3)));
  EXPECT_EQ(t.kind(), GraphKind::regular_tree);
  EXPECT_EQ(t.vertex_count(), 15u);
}

TEST(Io, GraphErrors) {
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"vertices": ["a"], "edges": [{"src": "a", "dst": "b"}]})")),
               ForeignEdge);
  EXPECT_THROW(load_graph("/nonexistent/graph.json"), ParseError);
}

TEST(Io, ElementRoundTrip) {
  auto g = std::make_shared<const DirectedGraph>(build_regular_tree(2, 2));
  auto j = nlohmann::json::parse(R"([{"word": "∅>1", "re": "1/2", "im": -3}, {"word": "v:2", "re": 4},
                                     {"word": "null", "re": 9}, {"word": "∅>1", "re": "1/2"}])");
  AlgebraElement a = element_from_json(j, g);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.coefficient(parse_word(*g, "∅>1")), ExactComplex(1, -3));
  EXPECT_EQ(element_from_json(element_to_json(a), g), a);
  EXPECT_THROW(element_from_json(nlohmann::json::parse(R"([{"word": "9>1"}])"), g), ForeignEdge);
  EXPECT_THROW(element_from_json(nlohmann::json::parse(R"({"word": "v:1"})"), g), ParseError);
}
