#include "gvn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gvn/error.hpp"

namespace gvn {

namespace {

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

Rational rational_field(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return ExactComplex::parse_rational(v.get<std::string>());
  throw ParseError("coefficients are integers or rational strings, got " + v.dump());
}

}  // namespace

std::string matrix_to_coord(const SparseComplexMatrix& m) {
  std::ostringstream os;
  os << "dim " << m.dim() << " nnz " << m.nnz() << '\n';
  for (const auto& [k, v] : m.entries()) {
    os << k.first << ' ' << k.second << ' ' << g17(v.real()) << ' ' << g17(v.imag()) << '\n';
  }
  return os.str();
}

nlohmann::json matrix_to_json(const SparseComplexMatrix& m) {
  auto entries = nlohmann::json::array();
  for (const auto& [k, v] : m.entries()) entries.push_back({k.first, k.second, v.real(), v.imag()});
  return {{"dim", m.dim()}, {"nnz", m.nnz()}, {"entries", std::move(entries)}};
}

DirectedGraph graph_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("tree")) {
      const auto& t = j.at("tree");
      return build_regular_tree(t.at("n").get<std::size_t>(), t.at("depth").get<std::size_t>());
    }
    DirectedGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      auto src = e.at("src").get<std::string>();
      auto dst = e.at("dst").get<std::string>();
      if (!g.find(src) || !g.find(dst)) {
        throw ForeignEdge("edge " + src + " -> " + dst + " names a vertex not in the graph");
      }
      g.add_edge(src, dst, e.value("tag", 0));
    }
    if (j.value("kind", std::string("general")) != "general") {
      throw ParseError("only \"general\" graphs are read from vertex lists; use \"tree\" for trees");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

nlohmann::json graph_to_json(const DirectedGraph& g) {
  if (g.kind() == GraphKind::regular_tree) {
    return {{"tree", {{"n", g.tree_branching()}, {"depth", g.tree_depth()}}}};
  }
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"src", g.label(e.source)}, {"dst", g.label(e.target)}, {"tag", e.tag}});
  }
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}, {"kind", "general"}};
}

DirectedGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

AlgebraElement element_from_json(const nlohmann::json& j, const GraphPtr& graph) {
  if (!j.is_array()) throw ParseError("element JSON must be an array of terms");
  AlgebraElement a(graph);
  try {
    for (const auto& term : j) {
      GroupoidWord w = parse_word(*graph, term.at("word").get<std::string>());
      if (w.is_empty()) continue;  // ∅ is the zero operator
      ExactComplex c(rational_field(term.value("re", nlohmann::json(0))),
                     rational_field(term.value("im", nlohmann::json(0))));
      a.add_term(w, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("element JSON: ") + e.what());
  }
  return a;
}

nlohmann::json element_to_json(const AlgebraElement& a) {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    out.push_back({{"word", format_word(*a.graph(), w)}, {"re", c.re_string()}, {"im", c.im_string()}});
  }
  return out;
}

AlgebraElement load_element(const std::string& path, const GraphPtr& graph) {
  return element_from_json(read_json_file(path), graph);
}

}  // namespace gvn
