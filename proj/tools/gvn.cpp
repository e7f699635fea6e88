// gvn: command-line front end for graph groupoids, their operators and the
// verification suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gvn/error.hpp"
#include "gvn/fock.hpp"
#include "gvn/io.hpp"
#include "gvn/representation.hpp"
#include "gvn/suites.hpp"
#include "gvn/tree_toeplitz.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kData = 3;

struct GraphSpec {
  std::string tree;
  std::string file;
};

std::pair<std::size_t, std::size_t> parse_tree(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    long n = std::stol(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("junk");
    std::string rest = s.substr(comma + 1);
    long d = std::stol(rest, &used);
    if (used != rest.size() || n < 1 || d < 0) throw std::invalid_argument("range");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(d)};
  } catch (const std::exception&) {
    throw gvn::ParseError("--tree expects N,DEPTH, got '" + s + "'");
  }
}

void add_graph_options(CLI::App* cmd, GraphSpec& spec) {
  auto* t = cmd->add_option("--tree", spec.tree, "N-regular tree as N,DEPTH");
  auto* g = cmd->add_option("--graph", spec.file, "graph JSON file");
  t->excludes(g);
}

gvn::GraphPtr load(const GraphSpec& spec) {
  if (!spec.tree.empty()) {
    auto [n, d] = parse_tree(spec.tree);
    return std::make_shared<const gvn::DirectedGraph>(gvn::build_regular_tree(n, d));
  }
  if (!spec.file.empty()) return std::make_shared<const gvn::DirectedGraph>(gvn::load_graph(spec.file));
  throw gvn::InvalidParameter("give --tree N,DEPTH or --graph FILE");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw gvn::InvalidParameter("cannot write '" + out + "'");
  f << text;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  GraphSpec graph;
  std::string literal;
};

int cmd_reduce(const ReduceArgs& a) {
  auto g = load(a.graph);
  std::cout << gvn::format_word(*g, gvn::parse_word(*g, a.literal)) << '\n';
  return kPass;
}

// ------------------------------------------------------------------ matrix

struct MatrixArgs {
  GraphSpec graph;
  std::optional<std::size_t> tplus, tminus, rj, maxlen;
  std::string edge, word, element, vertex_rule, format = "coord", out;
  bool identity = false;
  bool vertex_block = false;
};

int cmd_matrix(const MatrixArgs& a) {
  auto g = load(a.graph);
  const bool line = g->kind() == gvn::GraphKind::regular_tree && g->tree_branching() == 1;
  const bool tree = g->kind() == gvn::GraphKind::regular_tree;
  const std::size_t default_len = tree ? 2 * g->tree_depth() : 3;
  const std::size_t maxlen = a.maxlen.value_or(default_len);

  int chosen = (a.tplus ? 1 : 0) + (a.tminus ? 1 : 0) + (a.rj ? 1 : 0) + (a.edge.empty() ? 0 : 1) +
               (a.word.empty() ? 0 : 1) + (a.element.empty() ? 0 : 1) + (a.identity ? 1 : 0);
  if (chosen != 1) {
    throw gvn::InvalidParameter("choose exactly one of --tplus --tminus --rj --edge --word --element --identity");
  }
  gvn::AlgebraElement el(g);
  if (a.tplus) el = gvn::build_tplus_element(*a.tplus, g, std::max(maxlen, *a.tplus));
  if (a.tminus) el = gvn::build_tminus_element(*a.tminus, g, std::max(maxlen, *a.tminus));
  if (a.rj) el = gvn::build_rj_element(*a.rj, g);
  if (a.identity) el = gvn::AlgebraElement::identity(g);
  if (!a.element.empty()) el = gvn::load_element(a.element, g);
  const std::string& lit = a.edge.empty() ? a.word : a.edge;
  if (!lit.empty()) {
    gvn::GroupoidWord w = gvn::parse_word(*g, lit);
    if (!a.edge.empty() && w.length() != 1) throw gvn::InvalidParameter("--edge takes a single step");
    if (!w.is_empty()) el = gvn::AlgebraElement::word(g, w);
  }

  gvn::SparseComplexMatrix m;
  if (a.vertex_block) {
    std::string rule = a.vertex_rule.empty() ? (line ? "alpha" : tree ? "transport" : "block") : a.vertex_rule;
    if (rule == "alpha") {
      m = gvn::alpha_of_element(el);
    } else if (rule == "unit") {
      m = gvn::unit_space_matrix(el);
    } else if (rule == "transport") {
      m = gvn::vertex_transport_matrix(el);
    } else if (rule == "block") {
      gvn::BasisIndex basis(g, maxlen);
      m = gvn::compress_to_vertex_space(gvn::matrix_of_element(el, basis), basis);
    } else {
      throw gvn::InvalidParameter("--vertex-rule is one of block, unit, alpha, transport");
    }
  } else {
    gvn::BasisIndex basis(g, maxlen);
    m = gvn::matrix_of_element(el, basis);
  }

  if (a.format == "coord") {
    emit(gvn::matrix_to_coord(m), a.out);
  } else if (a.format == "json") {
    emit(gvn::matrix_to_json(m).dump(2) + "\n", a.out);
  } else {
    throw gvn::InvalidParameter("--format is coord or json");
  }
  return kPass;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  GraphSpec graph;
  std::optional<std::size_t> maxlen, size, cases, n, depth, margin;
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;
};

int run_and_report(const std::string& suite, const gvn::SuiteParams& p, const std::string& out, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  gvn::SuiteReport r = gvn::run_suite(suite, p);
  if (timing) r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(r.to_json().dump(2) + "\n", out);
  return r.pass() ? kPass : kFailed;
}

int cmd_verify(const VerifyArgs& a) {
  if (!gvn::is_suite(a.suite)) throw gvn::InvalidParameter("unknown suite '" + a.suite + "'");
  gvn::SuiteParams p;
  if (!a.graph.tree.empty()) p.tree = parse_tree(a.graph.tree);
  if (!a.graph.file.empty()) p.graph = load(a.graph);
  p.maxlen = a.maxlen;
  p.size = a.size;
  p.cases = a.cases;
  p.n = a.n;
  p.depth = a.depth;
  p.margin = a.margin;
  p.seed = a.seed;
  return run_and_report(a.suite, p, a.out, a.timing);
}

// ---------------------------------------------------------------- toeplitz

struct RewriteArgs {
  std::string symbol;
  std::size_t size = 64;
  bool verify = false;
};

int cmd_toeplitz_rewrite(const RewriteArgs& a) {
  gvn::ToeplitzSymbol sym = gvn::ToeplitzSymbol::parse(a.symbol);
  gvn::TreeOperatorCombo combo = gvn::toeplitz_rewrite(sym);
  std::cout << "symbol " << sym.str() << '\n';
  for (const auto& [j, t] : combo.plus_terms) std::cout << "T(+" << j << ") " << t << '\n';
  std::cout << "unit " << combo.unit << '\n';
  for (const auto& [i, t] : combo.minus_terms) std::cout << "T(-" << i << ") " << t << '\n';
  std::cout << "s0 " << combo.unit << '\n';
  if (!a.verify) return kPass;

  const std::size_t margin = sym.n + sym.k;
  gvn::InteriorReport r = gvn::interior_equal(gvn::combo_vertex_matrix(combo, a.size),
                                              gvn::banded_toeplitz_matrix(sym, a.size),
                                              gvn::line_boundary_distance(a.size), margin);
  std::cout << "interior_equal " << (r.equal ? "true" : "false") << " margin " << margin << " columns "
            << r.columns_checked << " max_deviation " << r.max_deviation;
  if (r.worst_column) std::cout << " worst_column " << *r.worst_column;
  std::cout << '\n';
  return r.equal ? kPass : kFailed;
}

// -------------------------------------------------------------------- fock

struct FockArgs {
  std::size_t n = 2;
  std::size_t depth = 5;
  std::string suite = "relations";
  std::optional<std::size_t> cases;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_fock_verify(const FockArgs& a) {
  static const std::map<std::string, std::string> suites = {
      {"relations", "fock-relations"}, {"anti-iso", "anti-iso"}, {"correspondence", "tree-fock-correspondence"}};
  auto it = suites.find(a.suite);
  if (it == suites.end()) throw gvn::InvalidParameter("fock suites: relations, anti-iso, correspondence");
  gvn::SuiteParams p;
  p.n = a.n;
  p.depth = a.depth;
  p.cases = a.cases;
  p.seed = a.seed;
  return run_and_report(it->second, p, a.out, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph groupoids, their operators, and Toeplitz/Fock verification"};
  app.require_subcommand(1);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "reduce a word literal");
  add_graph_options(r, reduce.graph);
  r->add_option("word", reduce.literal, "e.g. \"1>2;2<1\", \"v:1\" or \"null\"")->required();

  MatrixArgs matrix;
  auto* m = app.add_subcommand("matrix", "emit the matrix of a graph operator");
  add_graph_options(m, matrix.graph);
  m->add_option("--tplus", matrix.tplus, "T(+k) on the 1-regular tree");
  m->add_option("--tminus", matrix.tminus, "T(-k) on the 1-regular tree");
  m->add_option("--rj", matrix.rj, "R_j on an N-regular tree");
  m->add_option("--edge", matrix.edge, "a single edge literal");
  m->add_option("--word", matrix.word, "any word literal");
  m->add_option("--element", matrix.element, "element JSON file");
  m->add_flag("--identity", matrix.identity, "the sum of all vertices");
  m->add_option("--maxlen", matrix.maxlen, "longest basis path");
  m->add_flag("--vertex-block", matrix.vertex_block, "restrict to the vertex space");
  m->add_option("--vertex-rule", matrix.vertex_rule, "block, unit, alpha or transport");
  m->add_option("--format", matrix.format, "coord or json");
  m->add_option("--out", matrix.out, "output file");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", verify.suite, "suite name")->required();
  add_graph_options(v, verify.graph);
  v->add_option("--maxlen", verify.maxlen, "word length bound");
  v->add_option("--size", verify.size, "matrix size");
  v->add_option("--cases", verify.cases, "random cases");
  v->add_option("--seed", verify.seed, "seed (default 0)");
  v->add_option("--n", verify.n, "Fock dimension N");
  v->add_option("--depth", verify.depth, "tree depth or Fock degree cap");
  v->add_option("--margin", verify.margin, "interior margin");
  v->add_option("--out", verify.out, "report file");
  v->add_flag("--timing", verify.timing, "add wall_seconds to the report");

  RewriteArgs rewrite;
  auto* t = app.add_subcommand("toeplitz", "classical Toeplitz operators on the 1-regular tree");
  t->require_subcommand(1);
  auto* tr = t->add_subcommand("rewrite", "rewrite a banded Toeplitz operator as a tree operator");
  tr->add_option("--symbol", rewrite.symbol, "e.g. \"t-1=3,t0=2,t1=1\"")->required();
  tr->add_option("--size", rewrite.size, "matrix size for --verify");
  tr->add_flag("--verify", rewrite.verify, "compare against the banded matrix");

  FockArgs fock;
  auto* f = app.add_subcommand("fock", "Fock space checks");
  f->require_subcommand(1);
  auto* fv = f->add_subcommand("verify", "run a Fock suite");
  fv->add_option("--n", fock.n, "dimension N");
  fv->add_option("--depth", fock.depth, "degree cap / tree depth");
  fv->add_option("--suite", fock.suite, "relations, anti-iso or correspondence");
  fv->add_option("--cases", fock.cases, "random cases");
  fv->add_option("--seed", fock.seed, "seed (default 0)");
  fv->add_option("--out", fock.out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (r->parsed()) return cmd_reduce(reduce);
    if (m->parsed()) return cmd_matrix(matrix);
    if (v->parsed()) return cmd_verify(verify);
    if (tr->parsed()) return cmd_toeplitz_rewrite(rewrite);
    if (fv->parsed()) return cmd_fock_verify(fock);
  } catch (const gvn::ForeignEdge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const gvn::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const gvn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
