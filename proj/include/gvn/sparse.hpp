#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gvn {

/// Square sparse matrix with complex double entries, stored row-major as an
/// ordered (row, col) map. Matrices act on column vectors:
/// A[r][c] = <A ξ_c, ξ_r>. Entries with magnitude below kDropBelow are
/// never stored.
class SparseComplexMatrix {
 public:
  using Value = std::complex<double>;
  using Key = std::pair<std::size_t, std::size_t>;
  static constexpr double kDropBelow = 1e-15;

  explicit SparseComplexMatrix(std::size_t dim = 0) : dim_(dim) {}

  static SparseComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::map<Key, Value>& entries() const { return entries_; }

  Value get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Value v);
  void add(std::size_t row, std::size_t col, Value v);

  SparseComplexMatrix adjoint() const;
  SparseComplexMatrix transpose() const;
  /// Keeps the rows and columns listed in `keep`, in that order.
  SparseComplexMatrix submatrix(std::span<const std::size_t> keep) const;

  SparseComplexMatrix& operator+=(const SparseComplexMatrix& o);
  SparseComplexMatrix& operator-=(const SparseComplexMatrix& o);
  SparseComplexMatrix& operator*=(Value c);

  friend SparseComplexMatrix operator+(SparseComplexMatrix a, const SparseComplexMatrix& b) {
    return a += b;
  }
  friend SparseComplexMatrix operator-(SparseComplexMatrix a, const SparseComplexMatrix& b) {
    return a -= b;
  }
  friend SparseComplexMatrix operator*(SparseComplexMatrix a, Value c) { return a *= c; }
  friend SparseComplexMatrix operator*(Value c, SparseComplexMatrix a) { return a *= c; }
  friend SparseComplexMatrix operator*(const SparseComplexMatrix& a, const SparseComplexMatrix& b);

  /// Exact entrywise equality.
  friend bool operator==(const SparseComplexMatrix&, const SparseComplexMatrix&) = default;

 private:
  void check_index(std::size_t row, std::size_t col) const;

  std::size_t dim_;
  std::map<Key, Value> entries_;
};

SparseComplexMatrix power(const SparseComplexMatrix& m, unsigned k);

/// Largest |a - b| over all entries.
double max_abs_difference(const SparseComplexMatrix& a, const SparseComplexMatrix& b);

}  // namespace gvn
