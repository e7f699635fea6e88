#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gvn {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// A directed edge of the underlying (unshadowed) graph. `tag` separates
/// parallel edges so the pair notation (source, target) stays usable.
struct Edge {
  VertexIndex source;
  VertexIndex target;
  int tag = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One edge of the shadowed graph: either an edge e or its shadow e^-1.
/// `from`/`to` are the endpoints in traversal direction.
struct Step {
  EdgeIndex edge;
  bool shadow;
  VertexIndex from;
  VertexIndex to;

  Step inverse() const { return {edge, !shadow, to, from}; }

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step& a, const Step& b) {
    if (auto c = a.to <=> b.to; c != 0) return c;
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    if (auto c = a.shadow <=> b.shadow; c != 0) return c;
    return a.from <=> b.from;
  }
};

enum class GraphKind { general, regular_tree };

/// Finite directed graph; loops and multi-edges allowed. Immutable once
/// built: construct with add_vertex / add_edge, then share it read-only.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  VertexIndex add_vertex(std::string label);
  EdgeIndex add_edge(VertexIndex source, VertexIndex target, int tag = 0);
  EdgeIndex add_edge(std::string_view source, std::string_view target, int tag = 0);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexIndex> find(std::string_view label) const;
  /// Throws InvalidParameter for an unknown label.
  VertexIndex index_of(std::string_view label) const;

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeIndex> find_edge(VertexIndex source, VertexIndex target, int tag = 0) const;

  /// e (shadow = false) or e^-1 (shadow = true) as a traversal step.
  Step step(EdgeIndex e, bool shadow) const;
  /// Steps of the shadowed graph leaving v, in deterministic order.
  std::span<const Step> steps_from(VertexIndex v) const { return out_steps_.at(v); }

  GraphKind kind() const { return kind_; }
  /// Branching factor and depth; meaningful only for regular trees.
  std::size_t tree_branching() const { return tree_n_; }
  std::size_t tree_depth() const { return tree_depth_; }
  /// Distance from the root for tree vertices; 0 for general graphs.
  std::size_t level(VertexIndex v) const;

  void mark_regular_tree(std::size_t n, std::size_t depth);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> by_label_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Step>> out_steps_;
  GraphKind kind_ = GraphKind::general;
  std::size_t tree_n_ = 0;
  std::size_t tree_depth_ = 0;
};

/// Depth-truncated N-regular rooted tree, edges pointing away from the root.
/// N = 1 is the line 1 -> 2 -> ... -> depth+1; N >= 2 labels vertices by
/// words over {1..N} with the empty word as the root.
DirectedGraph build_regular_tree(std::size_t n, std::size_t depth);

/// Ĝ: the edges of g together with their shadows.
struct ShadowedGraph {
  const DirectedGraph* base = nullptr;
  std::vector<Step> steps;
};

ShadowedGraph shadowed(const DirectedGraph& g);
/// (G^-1)^-1 = G, so shadowing again changes nothing.
ShadowedGraph shadowed(const ShadowedGraph& g);

/// No loop-edges and no two edges sharing (source, target).
bool is_simplicial(const DirectedGraph& g);

/// Display form of a vertex label; the empty root label prints as "∅".
std::string display_label(std::string_view label);

}  // namespace gvn
