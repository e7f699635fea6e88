#include "gvn/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gvn/error.hpp"

namespace gvn {

SparseComplexMatrix SparseComplexMatrix::identity(std::size_t dim) {
  SparseComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_.emplace_hint(m.entries_.end(), Key{i, i}, 1.0);
  return m;
}

void SparseComplexMatrix::check_index(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) {
    throw DimensionMismatch("index (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside a " + std::to_string(dim_) + "-dimensional matrix");
  }
}

SparseComplexMatrix::Value SparseComplexMatrix::get(std::size_t row, std::size_t col) const {
  check_index(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Value{} : it->second;
}

void SparseComplexMatrix::set(std::size_t row, std::size_t col, Value v) {
  check_index(row, col);
  if (std::abs(v) < kDropBelow) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = v;
  }
}

void SparseComplexMatrix::add(std::size_t row, std::size_t col, Value v) {
  check_index(row, col);
  auto [it, inserted] = entries_.try_emplace({row, col}, v);
  if (!inserted) it->second += v;
  if (std::abs(it->second) < kDropBelow) entries_.erase(it);
}

SparseComplexMatrix SparseComplexMatrix::adjoint() const {
  SparseComplexMatrix out(dim_);
  for (const auto& [k, v] : entries_) out.entries_.emplace(Key{k.second, k.first}, std::conj(v));
  return out;
}

SparseComplexMatrix SparseComplexMatrix::transpose() const {
  SparseComplexMatrix out(dim_);
  for (const auto& [k, v] : entries_) out.entries_.emplace(Key{k.second, k.first}, v);
  return out;
}

SparseComplexMatrix SparseComplexMatrix::submatrix(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> position(dim_, dim_);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dim_) throw DimensionMismatch("submatrix index out of range");
    position[keep[i]] = i;
  }
  SparseComplexMatrix out(keep.size());
  for (const auto& [k, v] : entries_) {
    if (position[k.first] != dim_ && position[k.second] != dim_) {
      out.entries_.emplace(Key{position[k.first], position[k.second]}, v);
    }
  }
  return out;
}

SparseComplexMatrix& SparseComplexMatrix::operator+=(const SparseComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix sum of different dimensions");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
  return *this;
}

SparseComplexMatrix& SparseComplexMatrix::operator-=(const SparseComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix difference of different dimensions");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
  return *this;
}

SparseComplexMatrix& SparseComplexMatrix::operator*=(Value c) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= c;
    it = std::abs(it->second) < kDropBelow ? entries_.erase(it) : std::next(it);
  }
  return *this;
}

SparseComplexMatrix operator*(const SparseComplexMatrix& a, const SparseComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product of different dimensions");
  // Row offsets into b's entry list.
  std::vector<std::pair<std::size_t, SparseComplexMatrix::Value>> flat;
  std::vector<std::size_t> row_start(b.dim_ + 1, 0);
  flat.reserve(b.entries_.size());
  for (const auto& [k, v] : b.entries_) {
    ++row_start[k.first + 1];
    flat.emplace_back(k.second, v);
  }
  for (std::size_t r = 0; r < b.dim_; ++r) row_start[r + 1] += row_start[r];

  SparseComplexMatrix out(a.dim_);
  for (const auto& [k, v] : a.entries_) {
    for (std::size_t p = row_start[k.second]; p < row_start[k.second + 1]; ++p) {
      auto [it, inserted] = out.entries_.try_emplace({k.first, flat[p].first}, v * flat[p].second);
      if (!inserted) it->second += v * flat[p].second;
    }
  }
  for (auto it = out.entries_.begin(); it != out.entries_.end();) {
    it = std::abs(it->second) < SparseComplexMatrix::kDropBelow ? out.entries_.erase(it)
                                                                 : std::next(it);
  }
  return out;
}

SparseComplexMatrix power(const SparseComplexMatrix& m, unsigned k) {
  SparseComplexMatrix out = SparseComplexMatrix::identity(m.dim());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

double max_abs_difference(const SparseComplexMatrix& a, const SparseComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("comparing matrices of different dimensions");
  double worst = 0.0;
  for (const auto& [k, v] : a.entries()) worst = std::max(worst, std::abs(v - b.get(k.first, k.second)));
  for (const auto& [k, v] : b.entries()) {
    if (!a.entries().contains(k)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace gvn
