#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gvn/exact.hpp"
#include "gvn/groupoid.hpp"

namespace gvn {

using GraphPtr = std::shared_ptr<const DirectedGraph>;

/// Finitely supported element Σ t_w w of the groupoid *-algebra (a graph
/// operator). Coefficients are exact; zero coefficients and ∅ are never
/// stored, so terms() is exactly the support.
class AlgebraElement {
 public:
  using Terms = std::map<GroupoidWord, ExactComplex>;

  explicit AlgebraElement(GraphPtr graph);

  /// c·w. Throws InvalidParameter for w = ∅, which acts as zero, not as a basis word.
  static AlgebraElement word(GraphPtr graph, const GroupoidWord& w, const ExactComplex& c = 1);
  /// Σ_v 1·v over every vertex of the graph.
  static AlgebraElement identity(GraphPtr graph);

  /// Adds c to the coefficient of w; the term disappears if the sum is zero.
  void add_term(const GroupoidWord& w, const ExactComplex& c);

  const Terms& terms() const { return terms_; }
  std::vector<GroupoidWord> support() const;
  ExactComplex coefficient(const GroupoidWord& w) const;
  const GraphPtr& graph() const { return graph_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const ExactComplex& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const ExactComplex& c) { return a *= c; }
  friend AlgebraElement operator*(const ExactComplex& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.graph_ == b.graph_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_graph(const AlgebraElement& o) const;

  GraphPtr graph_;
  Terms terms_;
};

/// Element of the diagonal subalgebra: every key is a vertex.
class DiagonalElement {
 public:
  /// Throws InvalidParameter if a supported word is not a vertex.
  explicit DiagonalElement(AlgebraElement a);

  const AlgebraElement& element() const { return element_; }
  const AlgebraElement::Terms& terms() const { return element_.terms(); }
  operator const AlgebraElement&() const { return element_; }

  friend bool operator==(const DiagonalElement&, const DiagonalElement&) = default;

 private:
  AlgebraElement element_;
};

/// Bilinear extension of the groupoid product; non-admissible pairs vanish.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// (Σ t_w w)* = Σ conj(t_w) w^-1.
AlgebraElement adjoint(const AlgebraElement& a);

/// Conditional expectation onto the diagonal: keeps the vertex terms only.
DiagonalElement expectation(const AlgebraElement& a);

/// <Σ s_u u, Σ t_w w> = Σ_w conj(s_w) t_w, conjugate-linear in a.
ExactComplex inner_product(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace gvn
