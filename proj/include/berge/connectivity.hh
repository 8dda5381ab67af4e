#pragma once

#include <vector>

#include "berge/cycle.hh"
#include "berge/graph.hh"

namespace berge {

/// An x,V(C)-fan: paths from the apex to distinct cycle vertices that
/// pairwise share only the apex and touch C only at their last vertex.
/// Each path is listed apex first, target last.
struct Fan {
  int apex = -1;
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> targets;

  int size() const { return static_cast<int>(paths.size()); }
  /// |V(F)|: apex plus every path vertex.
  int vertex_count() const;
  int y_target_count() const;
};

/// Minimum vertex-cut size. A complete bipartite graph returns min(n, m);
/// a disconnected graph returns 0.
int vertex_connectivity(const BipartiteGraph& g);

/// vertex_connectivity(g) >= k and |V(G)| > k.
bool is_k_connected(const BipartiteGraph& g, int k);

/// Number of internally vertex-disjoint paths between two distinct
/// non-adjacent vertices (local connectivity), capped at `limit`.
int local_connectivity(const BipartiteGraph& g, Vertex s, Vertex t,
                       int limit = 1 << 30);

/// A maximum fan from X-vertex x to C. Among maximum fans it prefers more
/// Y-targets, then fewer vertices. Throws berge::Error when x lies on C.
Fan max_fan(const BipartiteGraph& g, int x, const AltCycle& c);

/// Problems with `f` as an x,C-fan of g; empty means valid.
std::vector<std::string> validate_fan(const BipartiteGraph& g,
                                      const AltCycle& c, const Fan& f);

/// F[a,b]: the unique a,b-path in the fan viewed as a spider rooted at the
/// apex. Both vertices must lie on the fan.
std::vector<Vertex> fan_path(const Fan& f, Vertex a, Vertex b);

bool fan_contains(const Fan& f, Vertex v);

}  // namespace berge
