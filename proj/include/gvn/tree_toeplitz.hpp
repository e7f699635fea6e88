#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gvn/algebra.hpp"
#include "gvn/sparse.hpp"

namespace gvn {

// Vertex-space calculus on the 1-regular tree, the line 1 -> 2 -> 3 -> ...
// Matrices are m x m with row/column r-1 holding vertex r.

/// Coefficients t_p, -n <= p <= k, of a trigonometric polynomial symbol.
struct ToeplitzSymbol {
  std::map<int, ExactComplex> coeffs;
  std::size_t n = 0;
  std::size_t k = 0;

  ExactComplex coefficient(int p) const;
  /// Throws InvalidParameter for an offset outside [-n, k].
  void validate() const;
  /// "t-1=3,t0=2,t1=1/2+i". The band is the smallest one holding every key.
  static ToeplitzSymbol parse(std::string_view text);
  std::string str() const;
};

/// S' = Σ_j plus[j] T(+j) + unit 1 + Σ_i minus[i] T(-i).
struct TreeOperatorCombo {
  std::map<std::size_t, ExactComplex> plus_terms;
  std::map<std::size_t, ExactComplex> minus_terms;
  ExactComplex unit;

  friend bool operator==(const TreeOperatorCombo&, const TreeOperatorCombo&) = default;
};

/// α of the path from vertex j to vertex j+k: ones at (j, j) and (j, j+k).
SparseComplexMatrix alpha_matrix_path(std::size_t j, std::size_t k, std::size_t m);

/// Ones at (j, j) and (j, j+k) for j <= m-k; rows past m-k are boundary rows.
SparseComplexMatrix t_plus_matrix(std::size_t k, std::size_t m);
SparseComplexMatrix t_minus_matrix(std::size_t k, std::size_t m);

/// m - r for vertex r: the room left before the end of the line.
std::vector<std::size_t> line_boundary_distance(std::size_t m);

/// Σ L_w over the forward (resp. backward) paths of length k on the line.
AlgebraElement build_tplus_element(std::size_t k, const GraphPtr& line, std::size_t max_path_length);
AlgebraElement build_tminus_element(std::size_t k, const GraphPtr& line, std::size_t max_path_length);

/// s0 = t0 - Σ t_-j - Σ t_i, exact.
ExactComplex unit_correction(const ToeplitzSymbol& sym);
TreeOperatorCombo toeplitz_rewrite(const ToeplitzSymbol& sym);

/// A[r][c] = t_{r-c}: t_-j sits j places right of the diagonal, t_i sits i
/// places below it.
SparseComplexMatrix banded_toeplitz_matrix(const ToeplitzSymbol& sym, std::size_t m);

/// The combo evaluated through t_plus_matrix / t_minus_matrix / identity.
SparseComplexMatrix combo_vertex_matrix(const TreeOperatorCombo& combo, std::size_t m);

/// The combo as an element of the groupoid algebra of the line.
AlgebraElement combo_element(const TreeOperatorCombo& combo, const GraphPtr& line,
                             std::size_t max_path_length);

/// Vertex representation α on ℓ²(V) of the line, extended linearly:
/// α(L_v) = |v><v|, and a path between r < r' contributes |source><range|
/// plus a 1 at (r, r). Throws InvalidParameter off the 1-regular tree.
SparseComplexMatrix alpha_of_element(const AlgebraElement& a);

}  // namespace gvn
