#include "gvn/representation.hpp"

#include <algorithm>
#include <cmath>

#include "gvn/error.hpp"

namespace gvn {

BasisIndex::BasisIndex(GraphPtr graph, std::size_t max_path_length)
    : graph_(std::move(graph)), max_path_length_(max_path_length) {
  if (!graph_) throw InvalidParameter("basis needs a graph");
  words_ = enumerate(*graph_, max_path_length_);
  boundary_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_.emplace(words_[i], i);
    boundary_.push_back(max_path_length_ - words_[i].length());
  }
}

std::optional<std::size_t> BasisIndex::index_of(const GroupoidWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_word(const GroupoidWord& w, const DirectedGraph& g) {
  if (w.is_empty()) return;
  if (w.source() >= g.vertex_count() || w.range() >= g.vertex_count()) {
    throw ForeignEdge("word refers to a vertex outside the graph");
  }
  for (const Step& s : w.steps()) {
    if (s.edge >= g.edge_count() || g.step(s.edge, s.shadow) != s) {
      throw ForeignEdge("word refers to an edge outside the graph");
    }
  }
}

}  // namespace

SparseComplexMatrix matrix_of_word(const GroupoidWord& w, const BasisIndex& basis,
                                   std::vector<std::size_t>* escaped) {
  check_word(w, *basis.graph());
  SparseComplexMatrix m(basis.size());
  if (w.is_empty()) return m;
  const auto words = basis.words();
  for (std::size_t c = 0; c < words.size(); ++c) {
    // ww' needs r(w) = s(w'); skip the product for everything else.
    if (words[c].source() != w.range()) continue;
    GroupoidWord p = product(w, words[c]);
    if (p.is_empty()) continue;
    if (auto r = basis.index_of(p)) {
      m.set(*r, c, 1.0);
    } else if (escaped) {
      escaped->push_back(c);
    }
  }
  return m;
}

SparseComplexMatrix matrix_of_element(const AlgebraElement& a, const BasisIndex& basis) {
  if (a.graph() != basis.graph()) throw InvalidParameter("element and basis use different graphs");
  SparseComplexMatrix m(basis.size());
  for (const auto& [w, c] : a.terms()) m += matrix_of_word(w, basis) * c.to_complex();
  return m;
}

SparseComplexMatrix compress_to_vertex_space(const SparseComplexMatrix& m, const BasisIndex& basis) {
  if (m.dim() != basis.size()) throw DimensionMismatch("matrix does not match the basis");
  std::vector<std::size_t> keep(basis.vertex_count());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return m.submatrix(keep);
}

SparseComplexMatrix unit_space_matrix(const GroupoidWord& w, const DirectedGraph& g) {
  check_word(w, g);
  SparseComplexMatrix m(g.vertex_count());
  if (!w.is_empty()) m.set(w.source(), w.range(), 1.0);
  return m;
}

SparseComplexMatrix unit_space_matrix(const AlgebraElement& a) {
  SparseComplexMatrix m(a.graph()->vertex_count());
  for (const auto& [w, c] : a.terms()) m.add(w.source(), w.range(), c.to_complex());
  return m;
}

InteriorReport interior_equal(const SparseComplexMatrix& a, const SparseComplexMatrix& b,
                              std::span<const std::size_t> boundary_distance, std::size_t margin,
                              double tolerance) {
  if (a.dim() != b.dim() || a.dim() != boundary_distance.size()) {
    throw DimensionMismatch("interior comparison of " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " dimensional matrices over " +
                            std::to_string(boundary_distance.size()) + " basis words");
  }
  InteriorReport report;
  std::vector<double> column_error(a.dim(), 0.0);
  auto note = [&](std::size_t col, double err) {
    if (boundary_distance[col] >= margin) column_error[col] = std::max(column_error[col], err);
  };
  for (const auto& [k, v] : a.entries()) note(k.second, std::abs(v - b.get(k.first, k.second)));
  for (const auto& [k, v] : b.entries()) {
    if (!a.entries().contains(k)) note(k.second, std::abs(v));
  }
  for (std::size_t c = 0; c < a.dim(); ++c) {
    if (boundary_distance[c] < margin) continue;
    ++report.columns_checked;
    if (column_error[c] > report.max_deviation) {
      report.max_deviation = column_error[c];
      report.worst_column = c;
    }
  }
  report.equal = report.max_deviation <= tolerance;
  return report;
}

InteriorReport interior_equal(const SparseComplexMatrix& a, const SparseComplexMatrix& b,
                              const BasisIndex& basis, std::size_t margin, double tolerance) {
  return interior_equal(a, b, basis.boundary_distances(), margin, tolerance);
}

}  // namespace gvn
