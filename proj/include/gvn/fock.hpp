#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gvn/algebra.hpp"
#include "gvn/sparse.hpp"

namespace gvn {

/// Tensor word η_{j1} ⊗ ... ⊗ η_{jk} over {1..N}; empty is the vacuum Ω.
using FockWord = std::vector<unsigned>;
/// A vector of ℂ^N in the standard basis e_1..e_N.
using CVector = std::vector<std::complex<double>>;

std::string format_fock_word(const FockWord& w);

/// Basis of the Fock space over ℂ^N truncated at degree D, ordered by
/// degree and then lexicographically.
class FockBasis {
 public:
  FockBasis(std::size_t n, std::size_t degree_cap);

  std::size_t n() const { return n_; }
  std::size_t degree_cap() const { return cap_; }
  std::size_t size() const { return words_.size(); }
  const FockWord& word(std::size_t i) const { return words_.at(i); }
  std::span<const FockWord> words() const { return words_; }
  /// Throws InvalidParameter for a word outside the basis.
  std::size_t index_of(const FockWord& w) const;
  /// D - degree for each basis word.
  std::span<const std::size_t> boundary_distances() const { return boundary_; }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::vector<FockWord> words_;
  std::map<FockWord, std::size_t> index_;
  std::vector<std::size_t> boundary_;
};

class FockVector {
 public:
  FockVector(std::size_t n, std::size_t degree_cap) : n_(n), cap_(degree_cap) {}
  static FockVector basis(std::size_t n, std::size_t degree_cap, FockWord w);

  std::size_t n() const { return n_; }
  std::size_t degree_cap() const { return cap_; }
  const std::map<FockWord, std::complex<double>>& terms() const { return terms_; }
  std::complex<double> coefficient(const FockWord& w) const;
  /// Degrees whose tensors were pushed past the cap and dropped.
  const std::set<std::size_t>& dropped_degrees() const { return dropped_; }
  bool truncated() const { return !dropped_.empty(); }

  /// Adds c·w; words longer than the cap are dropped and their degree noted.
  void add(const FockWord& w, std::complex<double> c);
  void note_dropped(std::size_t degree) { dropped_.insert(degree); }
  void merge_dropped(const FockVector& o) { dropped_.insert(o.dropped_.begin(), o.dropped_.end()); }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::map<FockWord, std::complex<double>> terms_;
  std::set<std::size_t> dropped_;
};

/// <a, b>, conjugate-linear in a.
std::complex<double> inner(const CVector& a, const CVector& b);
CVector standard_vector(std::size_t n, std::size_t j);

/// l_h: prepend h.
FockVector left_create(const CVector& h, const FockVector& v);
/// l_h*: strip the first letter a with weight <h, e_a>.
FockVector left_annihilate(const CVector& h, const FockVector& v);
/// r_h: append h.
FockVector right_create(const CVector& h, const FockVector& v);
/// r_h*: strip the last letter a with weight <h, e_a>, the adjoint of r_h.
FockVector right_annihilate(const CVector& h, const FockVector& v);

enum class Side { left, right };

struct FockGenerator {
  Side side;
  CVector h;
  bool starred = false;
};

/// Product g_1 g_2 ... g_m of generators; empty means the identity.
using FockOperatorWord = std::vector<FockGenerator>;

std::string format_operator_word(const FockOperatorWord& ow);

/// Applies the generators right to left.
FockVector apply_operator_word(const FockOperatorWord& ow, const FockVector& v);
SparseComplexMatrix matrix_of_operator_word(const FockOperatorWord& ow, const FockBasis& basis);

/// Left word to right word: order reversed, l_h -> r_h*, l_h* -> r_h.
/// Throws InvalidParameter if any generator is already a right one.
FockOperatorWord phi_map(const FockOperatorWord& ow);
/// The inverse of phi_map, right words back to left words.
FockOperatorWord phi_inverse(const FockOperatorWord& ow);

/// Tree vertex j1...jk <-> tensor word j1...jk, root <-> Ω.
class VertexFockBijection {
 public:
  /// Throws InvalidParameter unless tree is an N-regular tree with N >= 2.
  explicit VertexFockBijection(GraphPtr tree);

  const GraphPtr& tree() const { return tree_; }
  const FockBasis& basis() const { return basis_; }
  const FockWord& word_of(VertexIndex v) const { return word_of_.at(v); }
  VertexIndex vertex_of(const FockWord& w) const;
  std::size_t size() const { return word_of_.size(); }

  /// Re-indexes a vertex-space matrix into the Fock basis.
  SparseComplexMatrix to_fock(const SparseComplexMatrix& vertex_matrix) const;

 private:
  GraphPtr tree_;
  FockBasis basis_;
  std::vector<FockWord> word_of_;
  std::vector<std::size_t> fock_index_;
};

/// R_j = Σ L_(W, Wj) over the tree edges that append j.
AlgebraElement build_rj_element(std::size_t j, const GraphPtr& tree);

/// On ℓ²(V): L_w carries ξ_{s(w)} to ξ_{r(w)}, so the edge (W, Wj) moves W
/// to Wj. This is the transpose of unit_space_matrix and reverses products.
SparseComplexMatrix vertex_transport_matrix(const AlgebraElement& a);

}  // namespace gvn
