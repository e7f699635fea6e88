#include <gtest/gtest.h>

#include "gvn/error.hpp"
#include "gvn/fock.hpp"
#include "gvn/random.hpp"
#include "gvn/representation.hpp"

using namespace gvn;

namespace {

FockVector word(std::initializer_list<unsigned> letters, std::size_t n = 2, std::size_t d = 4) {
  return FockVector::basis(n, d, FockWord(letters));
}

const CVector e1 = {1.0, 0.0};
const CVector e2 = {0.0, 1.0};

}  // namespace

TEST(FockBasis, Ordering) {
  FockBasis b(2, 2);
  ASSERT_EQ(b.size(), 7u);
  EXPECT_EQ(b.word(0), FockWord{});
  EXPECT_EQ(b.word(1), FockWord{1});
  EXPECT_EQ(b.word(3), (FockWord{1, 1}));
  EXPECT_EQ(b.word(6), (FockWord{2, 2}));
  EXPECT_EQ(b.boundary_distances()[0], 2u);
  EXPECT_EQ(b.boundary_distances()[6], 0u);
  EXPECT_EQ(FockBasis(3, 2).size(), 13u);
}

TEST(Fock, LeftCreateAnnihilate) {
  EXPECT_EQ(left_create(e1, word({})).terms(), word({1}).terms());
  EXPECT_EQ(left_create(e2, word({1})).terms(), word({2, 1}).terms());
  CVector ab = {{2.0, 0.0}, {0.0, 1.0}};
  auto v = left_create(ab, word({}));
  EXPECT_EQ(v.coefficient({1}), std::complex<double>(2.0));
  EXPECT_EQ(v.coefficient({2}), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(left_annihilate(e1, word({1, 2})).terms(), word({2}).terms());
  EXPECT_TRUE(left_annihilate(e1, word({2, 2})).terms().empty());
  EXPECT_TRUE(left_annihilate(e1, word({})).terms().empty());
  // weight is <h, e_a> = conj(h_a)
  EXPECT_EQ(left_annihilate(ab, word({2})).coefficient({}), std::complex<double>(0.0, -1.0));
}

TEST(Fock, RightCreateAnnihilate) {
  EXPECT_EQ(right_create(e2, word({1})).terms(), word({1, 2}).terms());
  EXPECT_TRUE(right_annihilate(e1, word({})).terms().empty());
  EXPECT_EQ(right_annihilate(e2, word({1, 2})).terms(), word({1}).terms());
  FockOperatorWord ow = {{Side::right, e2, false}, {Side::right, e1, false}};
  EXPECT_EQ(apply_operator_word(ow, word({})).terms(), word({1, 2}).terms());
}

TEST(Fock, OverflowIsDropped) {
  auto v = left_create(e1, word({1, 2, 1, 2}));
  EXPECT_TRUE(v.terms().empty());
  EXPECT_TRUE(v.truncated());
  EXPECT_EQ(*v.dropped_degrees().begin(), 5u);
  EXPECT_THROW(left_create({1.0}, word({})), DimensionMismatch);
}

TEST(Fock, AnnihilationIsAdjoint) {
  Rng rng(3);
  FockBasis b(3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    CVector h = rng.cvector(3);
    for (Side side : {Side::left, Side::right}) {
      auto create = matrix_of_operator_word({{side, h, false}}, b);
      auto kill = matrix_of_operator_word({{side, h, true}}, b);
      EXPECT_LT(max_abs_difference(kill, create.adjoint()), 1e-12);
    }
  }
}

TEST(Fock, LeftRelation) {
  Rng rng(8);
  FockBasis b(2, 4);
  const auto bd = b.boundary_distances();
  for (int trial = 0; trial < 10; ++trial) {
    CVector h1 = rng.cvector(2), h2 = rng.cvector(2);
    auto m = matrix_of_operator_word({{Side::left, h1, true}, {Side::left, h2, false}}, b);
    EXPECT_TRUE(interior_equal(m, SparseComplexMatrix::identity(b.size()) * inner(h1, h2), bd, 1).equal);
  }
  FockOperatorWord same = {{Side::left, e1, true}, {Side::left, e1, false}};
  EXPECT_EQ(apply_operator_word(same, word({2, 1})).terms(), word({2, 1}).terms());
}

TEST(Fock, RightAdjointPairsInTheSameOrder) {
  // r_h* is the adjoint of r_h, so r_{h1}* r_{h2} = <h1, h2>, like the left side.
  FockBasis b(2, 3);
  CVector h1 = {{0.0, 1.0}, {1.0, 0.0}};
  CVector h2 = {{1.0, 0.0}, {0.0, 0.0}};
  auto m = matrix_of_operator_word({{Side::right, h1, true}, {Side::right, h2, false}}, b);
  EXPECT_EQ(m.get(0, 0), inner(h1, h2));
  EXPECT_EQ(inner(h1, h2), std::complex<double>(0.0, -1.0));
}

TEST(Phi, MapsAndReverses) {
  CVector h1 = {1.0, 2.0}, h2 = {0.0, 1.0};
  auto one = phi_map({{Side::left, h1, false}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].side, Side::right);
  EXPECT_TRUE(one[0].starred);
  auto two = phi_map({{Side::left, h1, false}, {Side::left, h2, true}});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].h, h2);
  EXPECT_FALSE(two[0].starred);
  EXPECT_EQ(two[1].h, h1);
  EXPECT_TRUE(two[1].starred);
  auto back = phi_inverse(two);
  EXPECT_EQ(back[0].h, h1);
  EXPECT_EQ(back[0].side, Side::left);
  EXPECT_FALSE(back[0].starred);
  EXPECT_THROW(phi_map({{Side::left, h1, false}, {Side::right, h2, false}}), InvalidParameter);
  EXPECT_TRUE(phi_map({}).empty());
}

TEST(Phi, ReversesProductsOnAllColumns) {
  Rng rng(21);
  FockBasis b(2, 5);
  for (int trial = 0; trial < 10; ++trial) {
    FockOperatorWord w1 = {{Side::left, rng.cvector(2), rng.coin()}, {Side::left, rng.cvector(2), rng.coin()}};
    FockOperatorWord w2 = {{Side::left, rng.cvector(2), rng.coin()}};
    FockOperatorWord w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    auto lhs = matrix_of_operator_word(phi_map(w12), b);
    auto rhs = matrix_of_operator_word(phi_map(w2), b) * matrix_of_operator_word(phi_map(w1), b);
    EXPECT_LT(max_abs_difference(lhs, rhs), 1e-12);
  }
}

TEST(Bijection, TreeVerticesToWords) {
  auto g = std::make_shared<const DirectedGraph>(build_regular_tree(2, 3));
  VertexFockBijection bij(g);
  EXPECT_EQ(bij.word_of(0), FockWord{});
  EXPECT_EQ(bij.word_of(g->index_of("12")), (FockWord{1, 2}));
  EXPECT_EQ(bij.vertex_of({2, 1, 1}), g->index_of("211"));
  auto g3 = std::make_shared<const DirectedGraph>(build_regular_tree(3, 2));
  EXPECT_EQ(VertexFockBijection(g3).size(), 13u);
  EXPECT_EQ(VertexFockBijection(g3).basis().size(), 13u);
  EXPECT_THROW(VertexFockBijection(std::make_shared<const DirectedGraph>(build_regular_tree(1, 3))),
               InvalidParameter);
}

TEST(Rj, Terms) {
  auto g = std::make_shared<const DirectedGraph>(build_regular_tree(2, 2));
  auto r1 = build_rj_element(1, g);
  ASSERT_EQ(r1.size(), 3u);
  for (const char* lit : {"∅>1", "1>11", "2>21"}) EXPECT_EQ(r1.coefficient(parse_word(*g, lit)), ExactComplex(1));
  EXPECT_THROW(build_rj_element(3, g), InvalidParameter);
}

TEST(Rj, MatchesRightCreation) {
  auto g = std::make_shared<const DirectedGraph>(build_regular_tree(2, 5));
  VertexFockBijection bij(g);
  const auto& b = bij.basis();
  auto rj = bij.to_fock(vertex_transport_matrix(build_rj_element(1, g)));
  auto r = matrix_of_operator_word({{Side::right, e1, false}}, b);
  EXPECT_TRUE(interior_equal(rj, r, b.boundary_distances(), 1).equal);
  EXPECT_EQ(rj, r);
}
