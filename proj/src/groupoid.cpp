#include "gvn/groupoid.hpp"

#include <algorithm>

#include "gvn/error.hpp"

namespace gvn {

std::strong_ordering operator<=>(const GroupoidWord& a, const GroupoidWord& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (a.kind_ == GroupoidWord::Kind::empty) return std::strong_ordering::equal;
  if (auto c = a.steps_.size() <=> b.steps_.size(); c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(),
                                                b.steps_.begin(), b.steps_.end());
}

GroupoidWord reduce_validated(std::vector<Step> steps) {
  if (steps.empty()) throw InvalidParameter("cannot reduce an empty step sequence");
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1].to != steps[i].from) return GroupoidWord::empty();
  }
  const VertexIndex start = steps.front().from;
  // Stack pass: a step cancels the top when it is the top's shadow.
  std::vector<Step> stack;
  stack.reserve(steps.size());
  for (const Step& s : steps) {
    if (!stack.empty() && stack.back() == s.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  if (stack.empty()) return GroupoidWord::vertex(start);
  VertexIndex range = stack.back().to;
  return GroupoidWord(GroupoidWord::Kind::path, start, range, std::move(stack));
}

GroupoidWord reduce(const DirectedGraph& g, std::span<const Step> steps) {
  for (const Step& s : steps) {
    if (s.edge >= g.edge_count() || g.step(s.edge, s.shadow) != s) {
      throw ForeignEdge("step does not belong to the graph");
    }
  }
  return reduce_validated(std::vector<Step>(steps.begin(), steps.end()));
}

GroupoidWord product(const GroupoidWord& a, const GroupoidWord& b) {
  if (a.is_empty() || b.is_empty()) return GroupoidWord::empty();
  if (a.range() != b.source()) return GroupoidWord::empty();
  if (a.is_vertex()) return b;
  if (b.is_vertex()) return a;
  std::vector<Step> joined(a.steps().begin(), a.steps().end());
  joined.insert(joined.end(), b.steps().begin(), b.steps().end());
  return reduce_validated(std::move(joined));
}

GroupoidWord shadow(const GroupoidWord& w) {
  if (!w.is_path()) return w;
  std::vector<Step> rev;
  rev.reserve(w.length());
  for (auto it = w.steps_.rbegin(); it != w.steps_.rend(); ++it) rev.push_back(it->inverse());
  return GroupoidWord(GroupoidWord::Kind::path, w.range_, w.source_, std::move(rev));
}

std::vector<GroupoidWord> enumerate(const DirectedGraph& g, std::size_t max_path_length) {
  std::vector<GroupoidWord> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(GroupoidWord::vertex(v));

  std::vector<std::vector<Step>> frontier;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (const Step& s : g.steps_from(v)) frontier.push_back({s});
  }
  for (std::size_t len = 1; len <= max_path_length && !frontier.empty(); ++len) {
    std::vector<GroupoidWord> level;
    std::vector<std::vector<Step>> next;
    for (auto& path : frontier) {
      if (len < max_path_length) {
        const Step last = path.back();
        for (const Step& s : g.steps_from(last.to)) {
          if (s == last.inverse()) continue;
          auto longer = path;
          longer.push_back(s);
          next.push_back(std::move(longer));
        }
      }
      level.push_back(reduce_validated(std::move(path)));
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
    frontier = std::move(next);
  }
  return out;
}

std::vector<GroupoidWord> enumerate(const Truncation& t) {
  return enumerate(*t.graph, t.max_path_length);
}

std::string format_step(const DirectedGraph& g, const Step& s) {
  std::string out = display_label(g.label(s.from));
  out += s.shadow ? '<' : '>';
  out += display_label(g.label(s.to));
  if (int tag = g.edge(s.edge).tag; tag != 0) out += "#" + std::to_string(tag);
  return out;
}

std::string format_word(const DirectedGraph& g, const GroupoidWord& w) {
  switch (w.kind()) {
    case GroupoidWord::Kind::empty:
      return "null";
    case GroupoidWord::Kind::vertex:
      return "v:" + display_label(g.label(w.source()));
    case GroupoidWord::Kind::path:
      break;
  }
  std::string out;
  for (const Step& s : w.steps()) {
    if (!out.empty()) out += ';';
    out += format_step(g, s);
  }
  return out;
}

namespace {

VertexIndex lookup_vertex(const DirectedGraph& g, std::string_view label) {
  if (label == "∅") label = "";
  if (auto v = g.find(label)) return *v;
  throw ForeignEdge("unknown vertex '" + std::string(label) + "'");
}

Step parse_one_step(const DirectedGraph& g, std::string_view text) {
  int tag = 0;
  if (auto hash = text.find('#'); hash != std::string_view::npos) {
    std::string_view tag_text = text.substr(hash + 1);
    if (tag_text.empty() || tag_text.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("bad edge tag in '" + std::string(text) + "'");
    }
    tag = std::stoi(std::string(tag_text));
    text = text.substr(0, hash);
  }
  auto arrow = text.find_first_of("<>");
  if (arrow == std::string_view::npos || text.find_first_of("<>", arrow + 1) != std::string_view::npos) {
    throw ParseError("step needs exactly one '>' or '<': '" + std::string(text) + "'");
  }
  const bool shadow_step = text[arrow] == '<';
  VertexIndex from = lookup_vertex(g, text.substr(0, arrow));
  VertexIndex to = lookup_vertex(g, text.substr(arrow + 1));
  // A shadow step from A to B is the inverse of the edge B -> A.
  auto e = shadow_step ? g.find_edge(to, from, tag) : g.find_edge(from, to, tag);
  if (!e) throw ForeignEdge("no edge for step '" + std::string(text) + "'");
  return g.step(*e, shadow_step);
}

}  // namespace

std::vector<Step> parse_steps(const DirectedGraph& g, std::string_view literal) {
  std::vector<Step> steps;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    auto semi = literal.find(';', pos);
    std::string_view part = literal.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    if (part.empty()) throw ParseError("empty step in '" + std::string(literal) + "'");
    steps.push_back(parse_one_step(g, part));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return steps;
}

GroupoidWord parse_word(const DirectedGraph& g, std::string_view literal) {
  if (literal == "null") return GroupoidWord::empty();
  if (literal.starts_with("v:")) return GroupoidWord::vertex(lookup_vertex(g, literal.substr(2)));
  if (literal.empty()) throw ParseError("empty word literal");
  return reduce(g, parse_steps(g, literal));
}

}  // namespace gvn
