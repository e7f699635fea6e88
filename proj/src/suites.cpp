#include "gvn/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "gvn/error.hpp"
#include "gvn/fock.hpp"
#include "gvn/random.hpp"
#include "gvn/representation.hpp"
#include "gvn/tree_toeplitz.hpp"

namespace gvn {

void SuiteReport::check(const std::string& case_id, double deviation, double tolerance,
                        const std::string& expected, const std::string& got) {
  ++cases;
  max_error = std::max(max_error, deviation);
  if (!(deviation <= tolerance)) failures.push_back({case_id, expected, got, deviation});
}

void SuiteReport::check(const std::string& case_id, bool ok, const std::string& expected,
                        const std::string& got) {
  ++cases;
  if (!ok) failures.push_back({case_id, expected, got, 0.0});
}

nlohmann::json SuiteReport::to_json() const {
  std::vector<Failure> sorted = failures;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Failure& a, const Failure& b) { return a.case_id < b.case_id; });
  auto fails = nlohmann::json::array();
  for (const auto& f : sorted) {
    fails.push_back({{"case", f.case_id}, {"expected", f.expected}, {"got", f.got}, {"max_deviation", f.deviation}});
  }
  nlohmann::json j = {{"schema", 1},       {"suite", suite},          {"params", params},
                      {"cases", cases},    {"failures", std::move(fails)},
                      {"max_error", max_error}, {"pass", pass()}};
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return j;
}

DirectedGraph loop_multiedge_fixture() {
  DirectedGraph g;
  g.add_vertex("v");
  g.add_vertex("w");
  g.add_edge("v", "v");
  g.add_edge("v", "w", 0);
  g.add_edge("v", "w", 1);
  return g;
}

namespace {

std::string fmt(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

struct NamedGraph {
  std::string name;
  GraphPtr graph;
};

std::string tree_name(std::size_t n, std::size_t depth) {
  return "T" + std::to_string(n) + "," + std::to_string(depth);
}

// The tree (given or default) plus the loop fixture, or just the --graph file.
std::vector<NamedGraph> graphs_for(const SuiteParams& p, std::pair<std::size_t, std::size_t> default_tree) {
  if (p.graph) return {{"graph", p.graph}};
  auto [n, depth] = p.tree.value_or(default_tree);
  return {{tree_name(n, depth), std::make_shared<const DirectedGraph>(build_regular_tree(n, depth))},
          {"loop-fixture", std::make_shared<const DirectedGraph>(loop_multiedge_fixture())}};
}

nlohmann::json graph_names(const std::vector<NamedGraph>& gs) {
  auto j = nlohmann::json::array();
  for (const auto& g : gs) j.push_back(g.name);
  return j;
}

void check_interior(SuiteReport& r, const std::string& id, const SparseComplexMatrix& got,
                    const SparseComplexMatrix& expected, std::span<const std::size_t> boundary,
                    std::size_t margin, double tol = kInteriorTolerance) {
  InteriorReport ir = interior_equal(got, expected, boundary, margin, tol);
  std::string where = ir.worst_column ? "worst column " + std::to_string(*ir.worst_column) : "no deviation";
  r.check(id, ir.max_deviation, tol, "interior-equal at margin " + std::to_string(margin), where);
}

std::vector<std::size_t> fock_or(const SuiteParams& p, std::vector<std::size_t> fallback) {
  return p.n ? std::vector<std::size_t>{*p.n} : fallback;
}

}  // namespace

// ---------------------------------------------------------------- groupoid

SuiteReport run_groupoid_axioms(const SuiteParams& p) {
  SuiteReport r{"groupoid-axioms"};
  const std::size_t maxlen = p.maxlen.value_or(3);
  auto graphs = graphs_for(p, {2, 3});
  r.params = {{"graphs", graph_names(graphs)}, {"maxlen", maxlen}};
  for (const auto& [name, g] : graphs) {
    for (const GroupoidWord& w : enumerate(*g, maxlen)) {
      const std::string id = name + "/" + format_word(*g, w);
      const GroupoidWord inv = shadow(w);
      const GroupoidWord left = product(w, inv);
      const GroupoidWord right = product(inv, w);
      const GroupoidWord src = GroupoidWord::vertex(w.source());
      const GroupoidWord rng = GroupoidWord::vertex(w.range());
      r.check(id + "/w.w^-1", left == src, format_word(*g, src), format_word(*g, left));
      r.check(id + "/w^-1.w", right == rng, format_word(*g, rng), format_word(*g, right));
      r.check(id + "/involution", shadow(inv) == w, format_word(*g, w), format_word(*g, shadow(inv)));
    }
  }
  return r;
}

// ---------------------------------------------------------- representation

namespace {

void homomorphism_on(SuiteReport& r, const NamedGraph& ng, std::size_t basis_len, std::size_t word_len) {
  const DirectedGraph& g = *ng.graph;
  BasisIndex basis(ng.graph, basis_len);
  const auto bd = basis.boundary_distances();
  const auto words = enumerate(g, word_len);

  std::map<GroupoidWord, SparseComplexMatrix> cache;
  auto mat = [&](const GroupoidWord& w) -> const SparseComplexMatrix& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, matrix_of_word(w, basis)).first;
    return it->second;
  };

  // Vertex projections.
  SparseComplexMatrix sum(basis.size());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& lv = mat(GroupoidWord::vertex(v));
    const std::string id = ng.name + "/L_" + format_word(g, GroupoidWord::vertex(v));
    r.check(id + "/idempotent", lv * lv == lv, "L_v L_v = L_v");
    r.check(id + "/self-adjoint", lv.adjoint() == lv, "L_v* = L_v");
    sum += lv;
  }
  r.check(ng.name + "/sum-of-vertices", sum == SparseComplexMatrix::identity(basis.size()), "Σ L_v = 1");

  for (const auto& w : words) {
    const std::string id = ng.name + "/" + format_word(g, w);
    const auto& lw = mat(w);
    check_interior(r, id + "/adjoint", lw.adjoint(), mat(shadow(w)), bd, w.length());
    check_interior(r, id + "/partial-isometry", lw * lw.adjoint() * lw, lw, bd, 2 * w.length());
  }
  for (const auto& w1 : words) {
    const auto& a = mat(w1);
    for (const auto& w2 : words) {
      const std::string id = ng.name + "/" + format_word(g, w1) + "*" + format_word(g, w2);
      check_interior(r, id, a * mat(w2), mat(product(w1, w2)), bd, w1.length() + w2.length());
    }
  }
}

}  // namespace

SuiteReport run_representation_homomorphism(const SuiteParams& p) {
  SuiteReport r{"representation-homomorphism"};
  const std::size_t word_len = p.maxlen.value_or(3);
  auto graphs = graphs_for(p, {2, 4});
  auto j = nlohmann::json::array();
  for (const auto& ng : graphs) {
    // Trees: the basis covers the whole groupoid (length up to the diameter).
    std::size_t basis_len = ng.graph->kind() == GraphKind::regular_tree ? 2 * ng.graph->tree_depth()
                                                                       : 2 * word_len;
    j.push_back({{"graph", ng.name}, {"basis_maxlen", basis_len}});
    homomorphism_on(r, ng, basis_len, word_len);
  }
  r.params = {{"graphs", j}, {"word_maxlen", word_len}};
  return r;
}

// ----------------------------------------------------------- tree_toeplitz

SuiteReport run_toeplitz_embed(const SuiteParams& p) {
  SuiteReport r{"toeplitz-embed"};
  const std::size_t m = p.size.value_or(64);
  const std::size_t kmax = std::min<std::size_t>(8, m - 1);
  const std::size_t line_depth = p.depth.value_or(16);
  const std::size_t kcons = std::min<std::size_t>(3, line_depth);
  r.params = {{"size", m}, {"band_kmax", kmax}, {"line_depth", line_depth}, {"groupoid_kmax", kcons}};

  const auto bd = line_boundary_distance(m);
  const auto shift = t_plus_matrix(1, m) - SparseComplexMatrix::identity(m);
  SparseComplexMatrix pw = SparseComplexMatrix::identity(m);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::string id = "band/k=" + std::to_string(k);
    pw = pw * shift;
    const auto tp = t_plus_matrix(k, m);
    check_interior(r, id + "/power", pw, tp - SparseComplexMatrix::identity(m), bd, k, 0.0);
    r.check(id + "/adjoint", t_minus_matrix(k, m) == tp.adjoint(), "t_minus = t_plus*");
    SparseComplexMatrix paths(m);
    for (std::size_t j = 1; j + k <= m; ++j) paths += alpha_matrix_path(j, k, m);
    r.check(id + "/path-sum", paths == tp, "Σ_j alpha_path(j, k) = t_plus");
  }

  auto line = std::make_shared<const DirectedGraph>(build_regular_tree(1, line_depth));
  const std::size_t lm = line->vertex_count();
  const auto lbd = line_boundary_distance(lm);
  const auto id_m = SparseComplexMatrix::identity(lm);
  for (std::size_t k = 1; k <= kcons; ++k) {
    const std::string id = "groupoid/k=" + std::to_string(k);
    const auto tplus = build_tplus_element(k, line, line_depth);
    const auto tminus = build_tminus_element(k, line, line_depth);
    r.check(id + "/adjoint-element", adjoint(tplus) == tminus, "T(+k)* = T(-k)");
    check_interior(r, id + "/alpha-plus", alpha_of_element(tplus), t_plus_matrix(k, lm), lbd, k, 0.0);
    check_interior(r, id + "/alpha-minus", alpha_of_element(tminus), t_minus_matrix(k, lm), lbd, k, 0.0);
    check_interior(r, id + "/unit-space", unit_space_matrix(tplus), t_plus_matrix(k, lm) - id_m, lbd, k, 0.0);
    for (const auto& [w, c] : tplus.terms()) {
      const std::size_t j = w.source() + 1;
      r.check(id + "/alpha-path/" + format_word(*line, w),
              alpha_of_element(AlgebraElement::word(line, w)) == alpha_matrix_path(j, k, lm),
              "alpha(L_w) = alpha_path(j, k)");
    }
  }
  return r;
}

SuiteReport run_toeplitz_rewrite(const SuiteParams& p) {
  SuiteReport r{"toeplitz-rewrite"};
  const std::size_t m = p.size.value_or(64);
  const std::size_t cases = p.cases.value_or(100);
  constexpr std::size_t kMaxBand = 5;
  r.params = {{"size", m}, {"cases", cases}, {"seed", p.seed}, {"max_band", kMaxBand}};
  if (m <= 2 * kMaxBand) throw InvalidParameter("toeplitz-rewrite needs size > 10");

  Rng rng(p.seed);
  auto line = std::make_shared<const DirectedGraph>(build_regular_tree(1, m - 1));
  const auto bd = line_boundary_distance(m);
  for (std::size_t c = 0; c < cases; ++c) {
    ToeplitzSymbol sym;
    sym.n = rng.index(kMaxBand + 1);
    sym.k = rng.index(kMaxBand + 1);
    for (int q = -static_cast<int>(sym.n); q <= static_cast<int>(sym.k); ++q) {
      // Parts bounded by 7, so |t_q| < 10.
      ExactComplex t(rng.rational(7, 9), rng.rational(7, 9));
      if (!t.is_zero()) sym.coeffs.emplace(q, t);
    }
    const std::string id = "case=" + std::to_string(c);
    const TreeOperatorCombo combo = toeplitz_rewrite(sym);

    ExactComplex s0 = sym.coefficient(0);
    for (std::size_t j = 1; j <= sym.n; ++j) s0 -= sym.coefficient(-static_cast<int>(j));
    for (std::size_t i = 1; i <= sym.k; ++i) s0 -= sym.coefficient(static_cast<int>(i));
    r.check(id + "/s0", combo.unit == s0, s0.str(), combo.unit.str());

    const std::size_t margin = sym.n + sym.k;
    const auto banded = banded_toeplitz_matrix(sym, m);
    check_interior(r, id + "/combo", combo_vertex_matrix(combo, m), banded, bd, margin);
    const std::size_t paths = std::max<std::size_t>({sym.n, sym.k, 1});
    check_interior(r, id + "/groupoid", alpha_of_element(combo_element(combo, line, paths)), banded, bd, margin);
  }
  return r;
}

// -------------------------------------------------------------------- fock

SuiteReport run_fock_relations(const SuiteParams& p) {
  SuiteReport r{"fock-relations"};
  const auto ns = fock_or(p, {2, 3});
  const std::size_t depth = p.depth.value_or(6);
  const std::size_t cases = p.cases.value_or(50);
  r.params = {{"n", ns}, {"depth", depth}, {"cases", cases}, {"seed", p.seed}};

  Rng rng(p.seed);
  for (std::size_t n : ns) {
    FockBasis basis(n, depth);
    const auto bd = basis.boundary_distances();
    const auto id_m = SparseComplexMatrix::identity(basis.size());
    for (std::size_t c = 0; c < cases; ++c) {
      const CVector h1 = rng.cvector(n);
      const CVector h2 = rng.cvector(n);
      const std::string id = "N=" + std::to_string(n) + "/case=" + std::to_string(c);

      const auto lm = matrix_of_operator_word({{Side::left, h1, true}, {Side::left, h2, false}}, basis);
      const auto want_l = inner(h1, h2);
      InteriorReport il = interior_equal(lm, id_m * want_l, bd, 1);
      r.check(id + "/left", il.max_deviation, kInteriorTolerance, fmt(want_l), fmt(lm.get(0, 0)));

      // Compared against <h2, h1> as stated for the right relation.
      const auto rm = matrix_of_operator_word({{Side::right, h1, true}, {Side::right, h2, false}}, basis);
      const auto want_r = inner(h2, h1);
      InteriorReport ir = interior_equal(rm, id_m * want_r, bd, 1);
      r.check(id + "/right", ir.max_deviation, kInteriorTolerance, fmt(want_r), fmt(rm.get(0, 0)));
    }
  }
  return r;
}

SuiteReport run_anti_iso(const SuiteParams& p) {
  SuiteReport r{"anti-iso"};
  const std::size_t n = p.n.value_or(2);
  const std::size_t depth = p.depth.value_or(8);
  const std::size_t cases = p.cases.value_or(200);
  const std::size_t margin = p.margin.value_or(8);
  constexpr std::size_t kMaxWord = 4;
  r.params = {{"n", n}, {"depth", depth}, {"cases", cases}, {"margin", margin},
              {"max_word", kMaxWord}, {"seed", p.seed}};

  Rng rng(p.seed);
  FockBasis basis(n, depth);
  const auto bd = basis.boundary_distances();
  auto random_word = [&] {
    FockOperatorWord ow;
    const std::size_t len = 1 + rng.index(kMaxWord);
    for (std::size_t i = 0; i < len; ++i) {
      // Unit vectors keep entries of long products near 1.
      CVector h = rng.cvector(n);
      const double norm = std::sqrt(inner(h, h).real());
      for (auto& z : h) z /= norm;
      ow.push_back({Side::left, std::move(h), rng.coin()});
    }
    return ow;
  };
  auto same = [](const FockOperatorWord& a, const FockOperatorWord& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].side != b[i].side || a[i].starred != b[i].starred || a[i].h != b[i].h) return false;
    }
    return true;
  };

  for (std::size_t c = 0; c < cases; ++c) {
    const std::string id = "case=" + std::to_string(c);
    const FockOperatorWord w1 = random_word();
    const FockOperatorWord w2 = random_word();
    FockOperatorWord w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());

    const auto lhs = matrix_of_operator_word(phi_map(w12), basis);
    const auto rhs = matrix_of_operator_word(phi_map(w2), basis) * matrix_of_operator_word(phi_map(w1), basis);
    check_interior(r, id + "/reverses-products", lhs, rhs, bd, margin);
    r.check(id + "/inverse", same(phi_inverse(phi_map(w12)), w12), format_operator_word(w12),
            format_operator_word(phi_inverse(phi_map(w12))));
  }
  return r;
}

SuiteReport run_tree_fock_correspondence(const SuiteParams& p) {
  SuiteReport r{"tree-fock-correspondence"};
  const auto ns = fock_or(p, {2, 3});
  const std::size_t depth = p.depth.value_or(5);
  const std::size_t restrict_depth = std::min<std::size_t>(4, depth);
  constexpr std::size_t kMaxProduct = 3;
  r.params = {{"n", ns}, {"depth", depth}, {"restriction_depth", restrict_depth},
              {"max_product", kMaxProduct}};

  for (std::size_t n : ns) {
    auto tree = std::make_shared<const DirectedGraph>(build_regular_tree(n, depth));
    VertexFockBijection bij(tree);
    const FockBasis& basis = bij.basis();
    const auto bd = basis.boundary_distances();
    const std::string tn = tree_name(n, depth);

    // Transported R_j and R_j* next to r_{e_j} and r_{e_j}*.
    std::vector<SparseComplexMatrix> tree_side;
    std::vector<SparseComplexMatrix> fock_side;
    std::vector<AlgebraElement> rj;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::string id = tn + "/j=" + std::to_string(j);
      rj.push_back(build_rj_element(j, tree));
      const CVector e = standard_vector(n, j);
      const auto create = matrix_of_operator_word({{Side::right, e, false}}, basis);
      const auto annihilate = matrix_of_operator_word({{Side::right, e, true}}, basis);
      const auto rj_m = bij.to_fock(vertex_transport_matrix(rj.back()));
      const auto rj_star = bij.to_fock(vertex_transport_matrix(adjoint(rj.back())));
      check_interior(r, id + "/R_j", rj_m, create, bd, 1, 0.0);
      check_interior(r, id + "/R_j*", rj_star, annihilate, bd, 1, 0.0);
      tree_side.push_back(rj_m);
      fock_side.push_back(create);
      tree_side.push_back(rj_star);
      fock_side.push_back(annihilate);
    }

    // Every product of at most kMaxProduct generators; symbol s is (j, starred).
    const std::size_t symbols = 2 * n;
    std::vector<std::size_t> seq;
    for (std::size_t len = 1; len <= kMaxProduct; ++len) {
      seq.assign(len, 0);
      while (true) {
        SparseComplexMatrix a = tree_side[seq[0]];
        SparseComplexMatrix b = fock_side[seq[0]];
        std::string id = tn + "/product/";
        for (std::size_t i = 0; i < len; ++i) {
          if (i > 0) {
            a = a * tree_side[seq[i]];
            b = b * fock_side[seq[i]];
          }
          id += (i ? "." : "") + std::string("R") + std::to_string(seq[i] / 2 + 1) + (seq[i] % 2 ? "*" : "");
        }
        check_interior(r, id, a, b, bd, len, 0.0);
        std::size_t pos = len;
        while (pos > 0 && ++seq[pos - 1] == symbols) seq[--pos] = 0;
        if (pos == 0) break;
      }
    }

    // The algebra product comes out reversed: transport is anti-multiplicative.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::string id = tn + "/order/R" + std::to_string(a + 1) + "R" + std::to_string(b + 1);
        const auto lhs = bij.to_fock(vertex_transport_matrix(rj[a] * rj[b]));
        check_interior(r, id, lhs, fock_side[2 * b] * fock_side[2 * a], bd, 2, 0.0);
      }
    }

    // One edge (W, Wj) acts as r_{e_j} restricted to the line through η_W.
    auto small = std::make_shared<const DirectedGraph>(build_regular_tree(n, restrict_depth));
    VertexFockBijection sb(small);
    const FockBasis& sbasis = sb.basis();
    for (EdgeIndex e = 0; e < small->edge_count(); ++e) {
      const Edge& edge = small->edge(e);
      const std::size_t j = static_cast<std::size_t>(small->label(edge.target).back() - '0');
      Step s = small->step(e, false);
      const auto lw = AlgebraElement::word(small, reduce(*small, std::span<const Step>(&s, 1)));
      SparseComplexMatrix proj(sbasis.size());
      const std::size_t w_index = sbasis.index_of(sb.word_of(edge.source));
      proj.set(w_index, w_index, 1.0);
      const auto expected = matrix_of_operator_word({{Side::right, standard_vector(n, j), false}}, sbasis) * proj;
      r.check(tree_name(n, restrict_depth) + "/restriction/" + format_word(*small, lw.terms().begin()->first),
              sb.to_fock(vertex_transport_matrix(lw)) == expected, "r_{e_j} restricted to W");
    }
  }
  return r;
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "groupoid-axioms", "representation-homomorphism", "toeplitz-embed", "toeplitz-rewrite",
      "fock-relations",  "anti-iso",                    "tree-fock-correspondence"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  using Runner = SuiteReport (*)(const SuiteParams&);
  static const std::map<std::string, Runner> runners = {
      {"groupoid-axioms", run_groupoid_axioms},
      {"representation-homomorphism", run_representation_homomorphism},
      {"toeplitz-embed", run_toeplitz_embed},
      {"toeplitz-rewrite", run_toeplitz_rewrite},
      {"fock-relations", run_fock_relations},
      {"anti-iso", run_anti_iso},
      {"tree-fock-correspondence", run_tree_fock_correspondence},
  };
  auto it = runners.find(name);
  if (it == runners.end()) throw InvalidParameter("unknown suite '" + name + "'");
  return it->second(params);
}

}  // namespace gvn
