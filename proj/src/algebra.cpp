#include "gvn/algebra.hpp"

#include "gvn/error.hpp"

namespace gvn {

AlgebraElement::AlgebraElement(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) throw InvalidParameter("algebra element needs a graph");
}

AlgebraElement AlgebraElement::word(GraphPtr graph, const GroupoidWord& w, const ExactComplex& c) {
  AlgebraElement a(std::move(graph));
  a.add_term(w, c);
  return a;
}

AlgebraElement AlgebraElement::identity(GraphPtr graph) {
  AlgebraElement a(graph);
  for (VertexIndex v = 0; v < graph->vertex_count(); ++v) a.add_term(GroupoidWord::vertex(v), 1);
  return a;
}

void AlgebraElement::add_term(const GroupoidWord& w, const ExactComplex& c) {
  if (w.is_empty()) throw InvalidParameter("the empty word is not a basis element");
  if (w.source() >= graph_->vertex_count() || w.range() >= graph_->vertex_count()) {
    throw ForeignEdge("word does not belong to the element's graph");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<GroupoidWord> AlgebraElement::support() const {
  std::vector<GroupoidWord> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

ExactComplex AlgebraElement::coefficient(const GroupoidWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ExactComplex{} : it->second;
}

void AlgebraElement::require_same_graph(const AlgebraElement& o) const {
  if (graph_ != o.graph_) throw InvalidParameter("algebra elements over different graphs");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_graph(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_graph(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const ExactComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, t] : terms_) t *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

DiagonalElement::DiagonalElement(AlgebraElement a) : element_(std::move(a)) {
  for (const auto& [w, c] : element_.terms()) {
    if (!w.is_vertex()) throw InvalidParameter("diagonal element with a non-vertex term");
  }
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.graph() != b.graph()) throw InvalidParameter("algebra elements over different graphs");
  AlgebraElement out(a.graph());
  for (const auto& [u, s] : a.terms()) {
    for (const auto& [w, t] : b.terms()) {
      GroupoidWord uw = product(u, w);
      if (!uw.is_empty()) out.add_term(uw, s * t);
    }
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out(a.graph());
  for (const auto& [w, t] : a.terms()) out.add_term(shadow(w), t.conj());
  return out;
}

DiagonalElement expectation(const AlgebraElement& a) {
  AlgebraElement out(a.graph());
  for (const auto& [w, t] : a.terms()) {
    if (w.is_vertex()) out.add_term(w, t);
  }
  return DiagonalElement(std::move(out));
}

ExactComplex inner_product(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.graph() != b.graph()) throw InvalidParameter("algebra elements over different graphs");
  ExactComplex sum;
  for (const auto& [w, s] : a.terms()) {
    auto it = b.terms().find(w);
    if (it != b.terms().end()) sum += s.conj() * it->second;
  }
  return sum;
}

}  // namespace gvn
