#include "gvn/fock.hpp"

#include <algorithm>
#include <sstream>

#include "gvn/error.hpp"
#include "gvn/representation.hpp"

namespace gvn {

std::string format_fock_word(const FockWord& w) {
  if (w.empty()) return "Ω";
  std::string s;
  for (unsigned a : w) s += std::to_string(a);
  return s;
}

FockBasis::FockBasis(std::size_t n, std::size_t degree_cap) : n_(n), cap_(degree_cap) {
  if (n == 0) throw InvalidParameter("Fock space needs N >= 1");
  words_.push_back({});
  std::size_t begin = 0;
  for (std::size_t d = 1; d <= cap_; ++d) {
    std::size_t end = words_.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (unsigned a = 1; a <= n_; ++a) {
        FockWord w = words_[i];
        w.push_back(a);
        words_.push_back(std::move(w));
      }
    }
    begin = end;
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_.emplace(words_[i], i);
    boundary_.push_back(cap_ - words_[i].size());
  }
}

std::size_t FockBasis::index_of(const FockWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw InvalidParameter("'" + format_fock_word(w) + "' is not a basis word");
  return it->second;
}

FockVector FockVector::basis(std::size_t n, std::size_t degree_cap, FockWord w) {
  FockVector v(n, degree_cap);
  v.add(w, 1.0);
  return v;
}

std::complex<double> FockVector::coefficient(const FockWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

void FockVector::add(const FockWord& w, std::complex<double> c) {
  for (unsigned a : w) {
    if (a < 1 || a > n_) throw InvalidParameter("letter " + std::to_string(a) + " outside 1..N");
  }
  if (w.size() > cap_) {
    dropped_.insert(w.size());
    return;
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < SparseComplexMatrix::kDropBelow) terms_.erase(it);
}

std::complex<double> inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner product of vectors of different length");
  std::complex<double> s;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CVector standard_vector(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw InvalidParameter("e_" + std::to_string(j) + " outside 1..N");
  CVector e(n);
  e[j - 1] = 1.0;
  return e;
}

namespace {

void check_dim(const CVector& h, const FockVector& v) {
  if (h.size() != v.n()) {
    throw DimensionMismatch("vector of length " + std::to_string(h.size()) +
                            " on the Fock space over C^" + std::to_string(v.n()));
  }
}

FockVector create(const CVector& h, const FockVector& v, bool at_front) {
  check_dim(h, v);
  FockVector out(v.n(), v.degree_cap());
  out.merge_dropped(v);
  for (const auto& [w, c] : v.terms()) {
    for (unsigned a = 1; a <= v.n(); ++a) {
      if (h[a - 1] == 0.0) continue;
      FockWord x;
      x.reserve(w.size() + 1);
      if (at_front) x.push_back(a);
      x.insert(x.end(), w.begin(), w.end());
      if (!at_front) x.push_back(a);
      out.add(x, h[a - 1] * c);
    }
  }
  return out;
}

FockVector annihilate(const CVector& h, const FockVector& v, bool at_front) {
  check_dim(h, v);
  FockVector out(v.n(), v.degree_cap());
  out.merge_dropped(v);
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;  // vacuum goes to 0
    unsigned a = at_front ? w.front() : w.back();
    // <h, e_a> = conj(h_a)
    FockWord rest = at_front ? FockWord(w.begin() + 1, w.end()) : FockWord(w.begin(), w.end() - 1);
    out.add(rest, std::conj(h[a - 1]) * c);
  }
  return out;
}

}  // namespace

FockVector left_create(const CVector& h, const FockVector& v) { return create(h, v, true); }
FockVector left_annihilate(const CVector& h, const FockVector& v) { return annihilate(h, v, true); }
FockVector right_create(const CVector& h, const FockVector& v) { return create(h, v, false); }
FockVector right_annihilate(const CVector& h, const FockVector& v) { return annihilate(h, v, false); }

std::string format_operator_word(const FockOperatorWord& ow) {
  if (ow.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < ow.size(); ++i) {
    const auto& g = ow[i];
    os << (i ? " " : "") << (g.side == Side::left ? 'l' : 'r') << (g.starred ? "*" : "") << '(';
    for (std::size_t a = 0; a < g.h.size(); ++a) {
      os << (a ? "," : "") << g.h[a].real() << (g.h[a].imag() < 0 ? "" : "+") << g.h[a].imag() << 'i';
    }
    os << ')';
  }
  return os.str();
}

FockVector apply_operator_word(const FockOperatorWord& ow, const FockVector& v) {
  FockVector x = v;
  for (auto it = ow.rbegin(); it != ow.rend(); ++it) {
    if (it->side == Side::left) {
      x = it->starred ? left_annihilate(it->h, x) : left_create(it->h, x);
    } else {
      x = it->starred ? right_annihilate(it->h, x) : right_create(it->h, x);
    }
  }
  return x;
}

SparseComplexMatrix matrix_of_operator_word(const FockOperatorWord& ow, const FockBasis& basis) {
  SparseComplexMatrix m(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    FockVector image = apply_operator_word(ow, FockVector::basis(basis.n(), basis.degree_cap(), basis.word(c)));
    for (const auto& [w, z] : image.terms()) m.set(basis.index_of(w), c, z);
  }
  return m;
}

namespace {

FockOperatorWord swap_sides(const FockOperatorWord& ow, Side from) {
  FockOperatorWord out;
  out.reserve(ow.size());
  for (auto it = ow.rbegin(); it != ow.rend(); ++it) {
    if (it->side != from) {
      throw InvalidParameter(std::string("expected only ") + (from == Side::left ? "left" : "right") +
                             " generators");
    }
    out.push_back({from == Side::left ? Side::right : Side::left, it->h, !it->starred});
  }
  return out;
}

}  // namespace

FockOperatorWord phi_map(const FockOperatorWord& ow) { return swap_sides(ow, Side::left); }
FockOperatorWord phi_inverse(const FockOperatorWord& ow) { return swap_sides(ow, Side::right); }

VertexFockBijection::VertexFockBijection(GraphPtr tree)
    : tree_(std::move(tree)),
      basis_(tree_ && tree_->kind() == GraphKind::regular_tree ? tree_->tree_branching() : 1,
             tree_ ? tree_->tree_depth() : 0) {
  if (!tree_ || tree_->kind() != GraphKind::regular_tree || tree_->tree_branching() < 2) {
    throw InvalidParameter("vertex/Fock bijection needs an N-regular tree with N >= 2");
  }
  word_of_.reserve(tree_->vertex_count());
  for (VertexIndex v = 0; v < tree_->vertex_count(); ++v) {
    FockWord w;
    for (char ch : tree_->label(v)) w.push_back(static_cast<unsigned>(ch - '0'));
    fock_index_.push_back(basis_.index_of(w));
    word_of_.push_back(std::move(w));
  }
}

VertexIndex VertexFockBijection::vertex_of(const FockWord& w) const {
  std::string label;
  for (unsigned a : w) label += static_cast<char>('0' + a);
  auto v = tree_->find(label);
  if (!v) throw InvalidParameter("no tree vertex for '" + format_fock_word(w) + "'");
  return *v;
}

SparseComplexMatrix VertexFockBijection::to_fock(const SparseComplexMatrix& vertex_matrix) const {
  if (vertex_matrix.dim() != size()) throw DimensionMismatch("matrix is not on the tree's vertex space");
  SparseComplexMatrix out(basis_.size());
  for (const auto& [k, z] : vertex_matrix.entries()) out.set(fock_index_[k.first], fock_index_[k.second], z);
  return out;
}

AlgebraElement build_rj_element(std::size_t j, const GraphPtr& tree) {
  if (tree->kind() != GraphKind::regular_tree || tree->tree_branching() < 2) {
    throw InvalidParameter("R_j lives on an N-regular tree with N >= 2");
  }
  if (j < 1 || j > tree->tree_branching()) throw InvalidParameter("j outside 1..N");
  AlgebraElement out(tree);
  const char last = static_cast<char>('0' + j);
  for (EdgeIndex e = 0; e < tree->edge_count(); ++e) {
    if (tree->label(tree->edge(e).target).back() != last) continue;
    Step s = tree->step(e, false);
    out.add_term(reduce(*tree, std::span<const Step>(&s, 1)), 1);
  }
  return out;
}

SparseComplexMatrix vertex_transport_matrix(const AlgebraElement& a) {
  return unit_space_matrix(a).transpose();
}

}  // namespace gvn
