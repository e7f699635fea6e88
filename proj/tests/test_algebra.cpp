#include <gtest/gtest.h>

#include "gvn/algebra.hpp"
#include "gvn/error.hpp"

using namespace gvn;

namespace {

GraphPtr tree(std::size_t n, std::size_t d) { return std::make_shared<const DirectedGraph>(build_regular_tree(n, d)); }

AlgebraElement term(const GraphPtr& g, const char* lit, ExactComplex c) {
  return AlgebraElement::word(g, parse_word(*g, lit), c);
}

}  // namespace

TEST(Algebra, ZeroCoefficientsVanish) {
  auto g = tree(2, 2);
  AlgebraElement a = term(g, "∅>1", 3);
  a.add_term(parse_word(*g, "∅>1"), -3);
  EXPECT_TRUE(a.is_zero());
  EXPECT_THROW(AlgebraElement::word(g, GroupoidWord::empty()), InvalidParameter);
}

TEST(Algebra, ProductFollowsGroupoid) {
  auto g = tree(2, 2);
  AlgebraElement a = term(g, "∅>1", ExactComplex(0, 1));
  AlgebraElement b = term(g, "1>12", 2);
  AlgebraElement ab = a * b;
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab.coefficient(parse_word(*g, "∅>1;1>12")), ExactComplex(0, 2));
  EXPECT_TRUE((b * a).is_zero());
  // L_w L_w* = L_{s(w)}
  EXPECT_EQ(a * adjoint(a), AlgebraElement::word(g, GroupoidWord::vertex(0), 1));
}

TEST(Algebra, AdjointIsConjugateLinearInvolution) {
  auto g = tree(2, 2);
  AlgebraElement a = term(g, "∅>1", ExactComplex(1, 2)) + term(g, "v:12", ExactComplex(0, -1));
  AlgebraElement b = term(g, "1>11", ExactComplex(Rational(1, 3), 0));
  EXPECT_EQ(adjoint(adjoint(a)), a);
  EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
  EXPECT_EQ(adjoint(a * ExactComplex::i()), adjoint(a) * ExactComplex(0, -1));
  EXPECT_EQ(adjoint(a).coefficient(parse_word(*g, "1<∅")), ExactComplex(1, -2));
}

TEST(Algebra, IdentityIsUnit) {
  auto g = tree(2, 2);
  AlgebraElement one = AlgebraElement::identity(g);
  AlgebraElement a = term(g, "∅>1;1>12", 5) + term(g, "2<∅", ExactComplex(0, 1));
  EXPECT_EQ(one * a, a);
  EXPECT_EQ(a * one, a);
  EXPECT_EQ(one.size(), g->vertex_count());
}

TEST(Algebra, ExpectationKeepsVertices) {
  auto g = tree(2, 2);
  AlgebraElement a = term(g, "v:1", 4) + term(g, "∅>1", 7) + term(g, "v:∅", ExactComplex(0, 1));
  DiagonalElement e = expectation(a);
  EXPECT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(expectation(e), e);
  EXPECT_THROW(DiagonalElement(term(g, "∅>1", 1)), InvalidParameter);
}

TEST(Algebra, InnerProduct) {
  auto g = tree(2, 2);
  AlgebraElement a = term(g, "∅>1", ExactComplex(0, 1)) + term(g, "v:1", 1);
  AlgebraElement b = term(g, "∅>1", 2) + term(g, "v:2", 3);
  EXPECT_EQ(inner_product(a, b), ExactComplex(0, -2));
  EXPECT_EQ(inner_product(a, a), ExactComplex(2));
}

TEST(Algebra, GraphMismatch) {
  auto g = tree(2, 2);
  auto h = tree(2, 2);
  EXPECT_THROW(AlgebraElement::identity(g) + AlgebraElement::identity(h), InvalidParameter);
  EXPECT_THROW(AlgebraElement::identity(g) * AlgebraElement::identity(h), InvalidParameter);
}
