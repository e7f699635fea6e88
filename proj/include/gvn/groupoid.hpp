#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gvn/graph.hpp"

namespace gvn {

/// Element of the graph groupoid: the empty word ∅ (absorbing zero), a
/// vertex unit, or a reduced admissible path on the shadowed graph.
///
/// Paths can only be produced by reduce(), product() and shadow(), so every
/// Path value is admissible and contains no adjacent (e, e^-1) pair.
class GroupoidWord {
 public:
  enum class Kind { empty, vertex, path };

  static GroupoidWord empty() { return GroupoidWord(); }
  static GroupoidWord vertex(VertexIndex v) { return GroupoidWord(Kind::vertex, v, v, {}); }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::empty; }
  bool is_vertex() const { return kind_ == Kind::vertex; }
  bool is_path() const { return kind_ == Kind::path; }

  /// Initial and terminal vertex. Undefined for the empty word.
  VertexIndex source() const { return source_; }
  VertexIndex range() const { return range_; }
  std::span<const Step> steps() const { return steps_; }
  /// Number of steps; 0 for vertices and ∅.
  std::size_t length() const { return steps_.size(); }

  friend bool operator==(const GroupoidWord&, const GroupoidWord&) = default;
  /// Enumeration order: kind, then length, then source, then steps.
  friend std::strong_ordering operator<=>(const GroupoidWord& a, const GroupoidWord& b);

 private:
  GroupoidWord() = default;
  GroupoidWord(Kind k, VertexIndex s, VertexIndex r, std::vector<Step> steps)
      : kind_(k), source_(s), range_(r), steps_(std::move(steps)) {}

  friend GroupoidWord reduce_validated(std::vector<Step> steps);
  friend GroupoidWord shadow(const GroupoidWord& w);

  Kind kind_ = Kind::empty;
  VertexIndex source_ = 0;
  VertexIndex range_ = 0;
  std::vector<Step> steps_;
};

/// Applies (RR) to a raw step sequence. Any non-admissible adjacent pair
/// yields ∅; otherwise adjacent (e, e^-1) pairs cancel until none remain and
/// a fully cancelled sequence becomes the unit at its initial vertex.
/// Throws ForeignEdge for a step not in g, InvalidParameter for no steps.
GroupoidWord reduce(const DirectedGraph& g, std::span<const Step> steps);

/// reduce() for steps already known to come from the graph.
GroupoidWord reduce_validated(std::vector<Step> steps);

/// Partial groupoid product; ∅ whenever a and b are not admissible.
GroupoidWord product(const GroupoidWord& a, const GroupoidWord& b);

/// w^-1: reversed sequence with every step inverted; vertices and ∅ fixed.
GroupoidWord shadow(const GroupoidWord& w);

/// Finite window onto the groupoid: all vertices plus the reduced paths of
/// length at most max_path_length.
struct Truncation {
  const DirectedGraph* graph;
  std::size_t max_path_length;
};

/// Every word of the window exactly once: vertices in graph order, then
/// paths by length and lexicographically.
std::vector<GroupoidWord> enumerate(const Truncation& t);
std::vector<GroupoidWord> enumerate(const DirectedGraph& g, std::size_t max_path_length);

// Word literals: "v:LABEL", "A>B[#tag];B>C" for paths ("A<B" walks the shadow
// of the edge B>A from A to B), "null" for ∅. The root label prints as "∅".

std::string format_step(const DirectedGraph& g, const Step& s);
std::string format_word(const DirectedGraph& g, const GroupoidWord& w);

/// Raw steps of a path literal, not reduced. ParseError on bad syntax,
/// ForeignEdge when a label or edge is missing from g.
std::vector<Step> parse_steps(const DirectedGraph& g, std::string_view literal);
/// Parses any literal and reduces it.
GroupoidWord parse_word(const DirectedGraph& g, std::string_view literal);

}  // namespace gvn
