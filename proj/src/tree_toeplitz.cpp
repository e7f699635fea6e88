#include "gvn/tree_toeplitz.hpp"

#include <charconv>
#include <sstream>

#include "gvn/error.hpp"

namespace gvn {

ExactComplex ToeplitzSymbol::coefficient(int p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? ExactComplex{} : it->second;
}

void ToeplitzSymbol::validate() const {
  for (const auto& [p, t] : coeffs) {
    if (p < -static_cast<int>(n) || p > static_cast<int>(k)) {
      throw InvalidParameter("symbol offset " + std::to_string(p) + " outside the band [-" +
                             std::to_string(n) + ", " + std::to_string(k) + "]");
    }
  }
}

ToeplitzSymbol ToeplitzSymbol::parse(std::string_view text) {
  ToeplitzSymbol sym;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    auto eq = item.find('=');
    if (item.size() < 2 || item.front() != 't' || eq == std::string_view::npos) {
      throw ParseError("symbol entries look like t-1=3, got '" + std::string(item) + "'");
    }
    std::string_view offset = item.substr(1, eq - 1);
    int p = 0;
    auto [end, ec] = std::from_chars(offset.data(), offset.data() + offset.size(), p);
    if (ec != std::errc{} || end != offset.data() + offset.size()) {
      throw ParseError("bad symbol offset '" + std::string(offset) + "'");
    }
    if (sym.coeffs.contains(p)) throw ParseError("offset " + std::to_string(p) + " given twice");
    ExactComplex t = ExactComplex::parse(item.substr(eq + 1));
    if (p < 0) sym.n = std::max<std::size_t>(sym.n, -p);
    if (p > 0) sym.k = std::max<std::size_t>(sym.k, p);
    if (!t.is_zero()) sym.coeffs.emplace(p, std::move(t));
  }
  return sym;
}

std::string ToeplitzSymbol::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, t] : coeffs) {
    os << (first ? "" : ",") << 't' << p << '=' << t;
    first = false;
  }
  return os.str();
}

SparseComplexMatrix alpha_matrix_path(std::size_t j, std::size_t k, std::size_t m) {
  if (j < 1 || k < 1) throw InvalidParameter("path needs j >= 1 and k >= 1");
  if (j + k > m) {
    throw InvalidParameter("path " + std::to_string(j) + " -> " + std::to_string(j + k) +
                           " leaves the " + std::to_string(m) + "-vertex truncation");
  }
  SparseComplexMatrix a(m);
  a.set(j - 1, j - 1, 1.0);
  a.set(j - 1, j + k - 1, 1.0);
  return a;
}

SparseComplexMatrix t_plus_matrix(std::size_t k, std::size_t m) {
  if (k < 1 || m <= k) throw InvalidParameter("t_plus_matrix needs 1 <= k < m");
  SparseComplexMatrix a(m);
  for (std::size_t r = 0; r + k < m; ++r) {
    a.set(r, r, 1.0);
    a.set(r, r + k, 1.0);
  }
  return a;
}

SparseComplexMatrix t_minus_matrix(std::size_t k, std::size_t m) {
  return t_plus_matrix(k, m).adjoint();
}

std::vector<std::size_t> line_boundary_distance(std::size_t m) {
  std::vector<std::size_t> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = m - 1 - i;
  return d;
}

namespace {

void require_line(const DirectedGraph& g) {
  if (g.kind() != GraphKind::regular_tree || g.tree_branching() != 1) {
    throw InvalidParameter("expected the 1-regular tree");
  }
}

AlgebraElement length_k_paths(std::size_t k, const GraphPtr& line, std::size_t max_path_length,
                              bool backward) {
  require_line(*line);
  if (k < 1 || k > max_path_length) {
    throw InvalidParameter("path length " + std::to_string(k) + " outside 1.." +
                           std::to_string(max_path_length));
  }
  AlgebraElement out(line);
  // Vertex r has index r-1 and edge r -> r+1 has index r-1.
  for (std::size_t start = 0; start + k < line->vertex_count(); ++start) {
    std::vector<Step> steps;
    for (std::size_t e = start; e < start + k; ++e) steps.push_back(line->step(e, false));
    GroupoidWord w = reduce(*line, steps);
    out.add_term(backward ? shadow(w) : w, 1);
  }
  return out;
}

}  // namespace

AlgebraElement build_tplus_element(std::size_t k, const GraphPtr& line, std::size_t max_path_length) {
  return length_k_paths(k, line, max_path_length, false);
}

AlgebraElement build_tminus_element(std::size_t k, const GraphPtr& line, std::size_t max_path_length) {
  return length_k_paths(k, line, max_path_length, true);
}

ExactComplex unit_correction(const ToeplitzSymbol& sym) {
  ExactComplex s0 = sym.coefficient(0);
  for (const auto& [p, t] : sym.coeffs) {
    if (p != 0) s0 -= t;
  }
  return s0;
}

TreeOperatorCombo toeplitz_rewrite(const ToeplitzSymbol& sym) {
  sym.validate();
  TreeOperatorCombo combo;
  for (const auto& [p, t] : sym.coeffs) {
    if (p < 0) combo.plus_terms.emplace(-p, t);
    if (p > 0) combo.minus_terms.emplace(p, t);
  }
  combo.unit = unit_correction(sym);
  return combo;
}

SparseComplexMatrix banded_toeplitz_matrix(const ToeplitzSymbol& sym, std::size_t m) {
  sym.validate();
  if (m <= sym.n + sym.k) throw InvalidParameter("banded matrix needs m > n + k");
  SparseComplexMatrix a(m);
  for (const auto& [p, t] : sym.coeffs) {
    // r - c = p
    for (std::size_t c = 0; c < m; ++c) {
      long long r = static_cast<long long>(c) + p;
      if (r >= 0 && r < static_cast<long long>(m)) a.set(r, c, t.to_complex());
    }
  }
  return a;
}

SparseComplexMatrix combo_vertex_matrix(const TreeOperatorCombo& combo, std::size_t m) {
  SparseComplexMatrix a = SparseComplexMatrix::identity(m) * combo.unit.to_complex();
  for (const auto& [j, t] : combo.plus_terms) a += t_plus_matrix(j, m) * t.to_complex();
  for (const auto& [i, t] : combo.minus_terms) a += t_minus_matrix(i, m) * t.to_complex();
  return a;
}

AlgebraElement combo_element(const TreeOperatorCombo& combo, const GraphPtr& line,
                             std::size_t max_path_length) {
  AlgebraElement a = AlgebraElement::identity(line) * combo.unit;
  for (const auto& [j, t] : combo.plus_terms) a += build_tplus_element(j, line, max_path_length) * t;
  for (const auto& [i, t] : combo.minus_terms) a += build_tminus_element(i, line, max_path_length) * t;
  return a;
}

SparseComplexMatrix alpha_of_element(const AlgebraElement& a) {
  require_line(*a.graph());
  SparseComplexMatrix out(a.graph()->vertex_count());
  for (const auto& [w, t] : a.terms()) {
    const auto z = t.to_complex();
    if (w.is_vertex()) {
      out.add(w.source(), w.source(), z);
      continue;
    }
    const VertexIndex rootward = std::min(w.source(), w.range());
    out.add(w.source(), w.range(), z);
    out.add(rootward, rootward, z);
  }
  return out;
}

}  // namespace gvn
