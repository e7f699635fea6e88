#pragma once

#include <string>

#include <json.hpp>

#include "gvn/algebra.hpp"
#include "gvn/sparse.hpp"

namespace gvn {

/// "dim n nnz m" then one "row col re im" line per entry, 0-based, in
/// row-then-column order.
std::string matrix_to_coord(const SparseComplexMatrix& m);
/// {"dim", "nnz", "entries": [[row, col, re, im], ...]}, same order.
nlohmann::json matrix_to_json(const SparseComplexMatrix& m);

/// {"vertices": [...], "edges": [{"src", "dst", "tag"}], "kind": "general"}
/// or {"tree": {"n": N, "depth": D}}. Throws ParseError on bad shape,
/// ForeignEdge when an edge names a missing vertex.
DirectedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const DirectedGraph& g);
DirectedGraph load_graph(const std::string& path);

/// [{"word": literal, "re": "1/2", "im": "0"}, ...]; re/im may also be
/// integers. Repeated words add up.
AlgebraElement element_from_json(const nlohmann::json& j, const GraphPtr& graph);
nlohmann::json element_to_json(const AlgebraElement& a);
AlgebraElement load_element(const std::string& path, const GraphPtr& graph);

}  // namespace gvn
