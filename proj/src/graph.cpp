#include "gvn/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gvn/error.hpp"

namespace gvn {

VertexIndex DirectedGraph::add_vertex(std::string label) {
  if (by_label_.contains(label)) {
    throw InvalidParameter("duplicate vertex label '" + display_label(label) + "'");
  }
  VertexIndex v = labels_.size();
  by_label_.emplace(label, v);
  labels_.push_back(std::move(label));
  out_steps_.emplace_back();
  return v;
}

EdgeIndex DirectedGraph::add_edge(VertexIndex source, VertexIndex target, int tag) {
  if (source >= labels_.size() || target >= labels_.size()) {
    throw InvalidParameter("edge endpoint is not a declared vertex");
  }
  if (find_edge(source, target, tag)) {
    throw InvalidParameter("duplicate edge " + display_label(labels_[source]) + ">" +
                           display_label(labels_[target]) + "#" + std::to_string(tag));
  }
  EdgeIndex e = edges_.size();
  edges_.push_back({source, target, tag});
  out_steps_[source].push_back(step(e, false));
  out_steps_[target].push_back(step(e, true));
  for (auto v : {source, target}) std::sort(out_steps_[v].begin(), out_steps_[v].end());
  return e;
}

EdgeIndex DirectedGraph::add_edge(std::string_view source, std::string_view target, int tag) {
  return add_edge(index_of(source), index_of(target), tag);
}

std::optional<VertexIndex> DirectedGraph::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DirectedGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidParameter("unknown vertex '" + display_label(label) + "'");
}

std::optional<EdgeIndex> DirectedGraph::find_edge(VertexIndex source, VertexIndex target,
                                                  int tag) const {
  if (source >= out_steps_.size()) return std::nullopt;
  for (const Step& s : out_steps_[source]) {
    if (!s.shadow && s.to == target && edges_[s.edge].tag == tag) return s.edge;
  }
  return std::nullopt;
}

Step DirectedGraph::step(EdgeIndex e, bool shadow) const {
  const Edge& ed = edges_.at(e);
  return shadow ? Step{e, true, ed.target, ed.source} : Step{e, false, ed.source, ed.target};
}

std::size_t DirectedGraph::level(VertexIndex v) const {
  if (kind_ != GraphKind::regular_tree) return 0;
  const std::string& l = labels_.at(v);
  if (tree_n_ == 1) return std::stoul(l) - 1;
  return l.size();
}

void DirectedGraph::mark_regular_tree(std::size_t n, std::size_t depth) {
  kind_ = GraphKind::regular_tree;
  tree_n_ = n;
  tree_depth_ = depth;
}

DirectedGraph build_regular_tree(std::size_t n, std::size_t depth) {
  if (n == 0) throw InvalidParameter("regular tree needs branching factor n >= 1");
  if (n > 9) throw InvalidParameter("regular tree labels support n <= 9");
  DirectedGraph g;
  if (n == 1) {
    for (std::size_t i = 1; i <= depth + 1; ++i) g.add_vertex(std::to_string(i));
    for (std::size_t i = 0; i < depth; ++i) g.add_edge(i, i + 1);
  } else {
    g.add_vertex("");
    std::size_t level_begin = 0;
    std::size_t level_end = 1;
    for (std::size_t d = 0; d < depth; ++d) {
      for (std::size_t v = level_begin; v < level_end; ++v) {
        std::string parent = g.label(v);
        for (std::size_t j = 1; j <= n; ++j) {
          VertexIndex child = g.add_vertex(parent + static_cast<char>('0' + j));
          g.add_edge(v, child);
        }
      }
      level_begin = level_end;
      level_end = g.vertex_count();
    }
  }
  g.mark_regular_tree(n, depth);
  return g;
}

ShadowedGraph shadowed(const DirectedGraph& g) {
  ShadowedGraph out{&g, {}};
  out.steps.reserve(2 * g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) out.steps.push_back(g.step(e, false));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) out.steps.push_back(g.step(e, true));
  return out;
}

ShadowedGraph shadowed(const ShadowedGraph& g) { return g; }

bool is_simplicial(const DirectedGraph& g) {
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) return false;
    if (!seen.emplace(e.source, e.target).second) return false;
  }
  return true;
}

std::string display_label(std::string_view label) {
  return label.empty() ? std::string("∅") : std::string(label);
}

}  // namespace gvn
