#pragma once

#include <string>

#include "berge/graph.hh"

namespace berge {

/// Canonical .bg text of a bipartite graph. Two graphs get the same text iff
/// they are isomorphic by a map that permutes X and Y separately.
struct GraphEncoding {
  std::string text;
  bool operator==(const GraphEncoding&) const = default;
};

/// The canonical representative: among all row orders, with columns sorted
/// in decreasing order (row 0 most significant), the adjacency matrix that is
/// lexicographically largest row by row. Its rows are non-increasing and its
/// columns are non-increasing, so the first row is 1^d 0^(m-d) for the
/// largest X-degree d.
BipartiteGraph canonical_form(const BipartiteGraph& g);

GraphEncoding canonical_encode(const BipartiteGraph& g);

/// True iff g is literally its own canonical representative.
bool is_canonical(const BipartiteGraph& g);

}  // namespace berge
