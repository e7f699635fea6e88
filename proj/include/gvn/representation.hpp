#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gvn/algebra.hpp"
#include "gvn/sparse.hpp"

namespace gvn {

/// Orthonormal basis {ξ_w} of a truncated ℓ²(𝔾): every vertex (a prefix
/// block), then the reduced paths of length at most max_path_length.
class BasisIndex {
 public:
  BasisIndex(GraphPtr graph, std::size_t max_path_length);

  const GraphPtr& graph() const { return graph_; }
  std::size_t max_path_length() const { return max_path_length_; }
  std::size_t size() const { return words_.size(); }
  std::size_t vertex_count() const { return graph_->vertex_count(); }
  std::span<const GroupoidWord> words() const { return words_; }
  const GroupoidWord& word(std::size_t i) const { return words_.at(i); }
  std::optional<std::size_t> index_of(const GroupoidWord& w) const;

  /// How far ξ_w sits from the edge of the window: max_path_length - |w|.
  /// A product of total length ℓ applied to ξ_w never leaves the window
  /// when this is at least ℓ.
  std::span<const std::size_t> boundary_distances() const { return boundary_; }
  std::size_t boundary_distance(std::size_t i) const { return boundary_.at(i); }

 private:
  GraphPtr graph_;
  std::size_t max_path_length_;
  std::vector<GroupoidWord> words_;
  std::map<GroupoidWord, std::size_t> index_;
  std::vector<std::size_t> boundary_;
};

/// L_w on the window: column ξ_u holds a 1 at row ξ_{wu}. Columns where wu
/// is ∅ are zero; columns where wu falls outside the window are zero too and
/// are appended to `escaped` when given. Throws ForeignEdge if w does not
/// belong to the basis graph.
SparseComplexMatrix matrix_of_word(const GroupoidWord& w, const BasisIndex& basis,
                                   std::vector<std::size_t>* escaped = nullptr);

/// Σ t_w L_w.
SparseComplexMatrix matrix_of_element(const AlgebraElement& a, const BasisIndex& basis);

/// Top-left block on the vertex words (H_V ⊂ H_G).
SparseComplexMatrix compress_to_vertex_space(const SparseComplexMatrix& m, const BasisIndex& basis);

/// Action of the algebra on the unit space ℓ²(V): L_w sends ξ_{r(w)} to
/// ξ_{s(w)} and kills the other vertices. Unlike the vertex block above this
/// is multiplicative and *-preserving on the nose, with no truncation.
SparseComplexMatrix unit_space_matrix(const AlgebraElement& a);
SparseComplexMatrix unit_space_matrix(const GroupoidWord& w, const DirectedGraph& g);

struct InteriorReport {
  bool equal = true;
  double max_deviation = 0.0;
  std::optional<std::size_t> worst_column;
  std::size_t columns_checked = 0;
};

inline constexpr double kInteriorTolerance = 1e-12;

/// Compares the columns whose boundary distance is at least `margin`.
/// Throws DimensionMismatch when the sizes disagree with each other or with
/// the distance list.
InteriorReport interior_equal(const SparseComplexMatrix& a, const SparseComplexMatrix& b,
                              std::span<const std::size_t> boundary_distance, std::size_t margin,
                              double tolerance = kInteriorTolerance);
InteriorReport interior_equal(const SparseComplexMatrix& a, const SparseComplexMatrix& b,
                              const BasisIndex& basis, std::size_t margin,
                              double tolerance = kInteriorTolerance);

}  // namespace gvn
