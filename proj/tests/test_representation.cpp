#include <gtest/gtest.h>

#include "gvn/error.hpp"
#include "gvn/random.hpp"
#include "gvn/representation.hpp"
#include "gvn/suites.hpp"

using namespace gvn;

namespace {

GraphPtr tree(std::size_t n, std::size_t d) { return std::make_shared<const DirectedGraph>(build_regular_tree(n, d)); }

}  // namespace

TEST(Sparse, DropsTinyEntries) {
  SparseComplexMatrix m(3);
  m.set(0, 1, 1e-16);
  EXPECT_EQ(m.nnz(), 0u);
  m.add(0, 1, 1.0);
  m.add(0, 1, -1.0);
  EXPECT_EQ(m.nnz(), 0u);
  EXPECT_THROW(m.set(3, 0, 1.0), DimensionMismatch);
}

TEST(Sparse, ProductAndAdjoint) {
  SparseComplexMatrix a(2), b(2);
  a.set(0, 1, {0, 1});
  b.set(1, 0, 2.0);
  SparseComplexMatrix ab = a * b;
  EXPECT_EQ(ab.nnz(), 1u);
  EXPECT_EQ(ab.get(0, 0), std::complex<double>(0, 2));
  EXPECT_EQ(a.adjoint().get(1, 0), std::complex<double>(0, -1));
  EXPECT_THROW(a * SparseComplexMatrix(3), DimensionMismatch);
}

TEST(Basis, VerticesFirst) {
  BasisIndex basis(tree(2, 2), 2);
  for (std::size_t i = 0; i < basis.vertex_count(); ++i) {
    EXPECT_TRUE(basis.word(i).is_vertex());
    EXPECT_EQ(basis.boundary_distance(i), 2u);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis.index_of(basis.word(i)), i);
  EXPECT_FALSE(basis.index_of(GroupoidWord::empty()));
}

TEST(Representation, VertexIsProjectionOntoSource) {
  auto g = tree(2, 3);
  BasisIndex basis(g, 4);
  VertexIndex v = g->index_of("1");
  auto m = matrix_of_word(GroupoidWord::vertex(v), basis);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    EXPECT_EQ(m.get(c, c), basis.word(c).source() == v ? 1.0 : 0.0);
  }
  EXPECT_EQ(m * m, m);
}

TEST(Representation, EdgeOnLine) {
  auto g = tree(1, 4);
  BasisIndex basis(g, 3);
  GroupoidWord e = parse_word(*g, "1>2");
  std::vector<std::size_t> escaped;
  auto m = matrix_of_word(e, basis, &escaped);
  auto col = [&](const char* lit) { return *basis.index_of(parse_word(*g, lit)); };
  EXPECT_EQ(m.get(col("1>2"), col("v:2")), 1.0);
  EXPECT_EQ(m.get(col("1>2;2>3"), col("2>3")), 1.0);
  EXPECT_EQ(m.get(col("1>2;2>3;3>4"), col("2>3;3>4")), 1.0);
  // ξ_(2,1) goes to ξ_1
  EXPECT_EQ(m.get(col("v:1"), col("2<1")), 1.0);
  // (2,3,4,5) would give a length-4 word: outside the window
  EXPECT_NE(std::find(escaped.begin(), escaped.end(), col("2>3;3>4;4>5")), escaped.end());
  EXPECT_EQ(matrix_of_word(GroupoidWord::empty(), basis).nnz(), 0u);
}

TEST(Representation, IdentityElement) {
  auto g = tree(2, 2);
  BasisIndex basis(g, 4);
  EXPECT_EQ(matrix_of_element(AlgebraElement::identity(g), basis), SparseComplexMatrix::identity(basis.size()));
  EXPECT_EQ(matrix_of_element(AlgebraElement(g), basis).nnz(), 0u);
  auto block = compress_to_vertex_space(SparseComplexMatrix::identity(basis.size()), basis);
  EXPECT_EQ(block, SparseComplexMatrix::identity(g->vertex_count()));
}

TEST(Representation, AdjointMatchesConjugateTranspose) {
  auto g = tree(2, 3);
  BasisIndex basis(g, 6);
  Rng rng(11);
  auto words = enumerate(*g, 2);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement t(g);
    for (int k = 0; k < 4; ++k) {
      t.add_term(words[rng.index(words.size())], ExactComplex(rng.rational(5, 4), rng.rational(5, 4)));
    }
    auto lhs = matrix_of_element(adjoint(t), basis);
    auto rhs = matrix_of_element(t, basis).adjoint();
    EXPECT_TRUE(interior_equal(lhs, rhs, basis, 2).equal);
  }
}

TEST(Representation, MultiplicativeOnInterior) {
  auto g = std::make_shared<const DirectedGraph>(loop_multiedge_fixture());
  BasisIndex basis(g, 5);
  auto words = enumerate(*g, 2);
  for (const auto& a : words) {
    for (const auto& b : words) {
      auto lhs = matrix_of_word(a, basis) * matrix_of_word(b, basis);
      auto rhs = matrix_of_word(product(a, b), basis);
      ASSERT_TRUE(interior_equal(lhs, rhs, basis, a.length() + b.length()).equal);
    }
  }
}

TEST(Representation, PathOperatorsMissTheVertexBlock) {
  // L_e sends each vertex to a path, so its vertex block is empty; the unit
  // space action is where the edge shows up.
  auto g = tree(1, 6);
  BasisIndex basis(g, 6);
  AlgebraElement e = AlgebraElement::word(g, parse_word(*g, "2>3"));
  EXPECT_EQ(compress_to_vertex_space(matrix_of_element(e, basis), basis).nnz(), 0u);
  auto u = unit_space_matrix(e);
  EXPECT_EQ(u.nnz(), 1u);
  EXPECT_EQ(u.get(1, 2), 1.0);
}

TEST(Representation, UnitSpaceIsStarHomomorphism) {
  auto g = std::make_shared<const DirectedGraph>(loop_multiedge_fixture());
  auto words = enumerate(*g, 3);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement a(g), b(g);
    for (int k = 0; k < 3; ++k) {
      a.add_term(words[rng.index(words.size())], ExactComplex(rng.rational(3, 2), rng.rational(3, 2)));
      b.add_term(words[rng.index(words.size())], ExactComplex(rng.rational(3, 2), rng.rational(3, 2)));
    }
    EXPECT_LT(max_abs_difference(unit_space_matrix(a * b), unit_space_matrix(a) * unit_space_matrix(b)), 1e-12);
    EXPECT_LT(max_abs_difference(unit_space_matrix(adjoint(a)), unit_space_matrix(a).adjoint()), 1e-12);
  }
}

TEST(Interior, ReportsWorstColumn) {
  SparseComplexMatrix a(3), b(3);
  a.set(0, 2, 0.5);
  std::vector<std::size_t> bd = {2, 2, 1};
  auto strict = interior_equal(a, b, bd, 1);
  EXPECT_FALSE(strict.equal);
  EXPECT_EQ(strict.worst_column, 2u);
  EXPECT_DOUBLE_EQ(strict.max_deviation, 0.5);
  auto loose = interior_equal(a, b, bd, 2);
  EXPECT_TRUE(loose.equal);
  EXPECT_EQ(loose.columns_checked, 2u);
  EXPECT_THROW(interior_equal(a, SparseComplexMatrix(2), bd, 0), DimensionMismatch);
  EXPECT_TRUE(interior_equal(a, a, bd, 0).equal);
}
