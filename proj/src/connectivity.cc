#include "berge/connectivity.hh"

#include <algorithm>
#include <climits>

#include "berge/error.hh"
#include "flow.hh"

namespace berge {
namespace {

constexpr int kInf = INT_MAX / 4;

// Vertex-split network: flat id v becomes in-node 2v and out-node 2v+1.
detail::FlowNetwork split_network(const BipartiteGraph& g, int s, int t) {
  const int nv = g.order();
  detail::FlowNetwork net(2 * nv);
  for (int v = 0; v < nv; ++v)
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
  for (int x = 0; x < g.n(); ++x) {
    for (int y : g.x_neighbors(x)) {
      int a = x, b = g.n() + y;
      net.add_arc(2 * a + 1, 2 * b, 1);
      net.add_arc(2 * b + 1, 2 * a, 1);
    }
  }
  return net;
}

bool is_connected(const BipartiteGraph& g) {
  if (g.order() <= 1) return true;
  return components_without(g, std::vector<bool>(g.order(), false)).size() == 1;
}

}  // namespace

int Fan::vertex_count() const {
  int total = 1;
  for (const auto& p : paths) total += static_cast<int>(p.size()) - 1;
  return total;
}

int Fan::y_target_count() const {
  return static_cast<int>(
      std::count_if(targets.begin(), targets.end(), [](Vertex v) { return v.is_y(); }));
}

int local_connectivity(const BipartiteGraph& g, Vertex s, Vertex t, int limit) {
  if (s == t) throw Error("local_connectivity: endpoints coincide");
  if (g.adjacent(s, t)) throw Error("local_connectivity: endpoints are adjacent");
  int fs = g.flat(s), ft = g.flat(t);
  auto net = split_network(g, fs, ft);
  return net.max_flow(2 * fs + 1, 2 * ft, limit);
}

int vertex_connectivity(const BipartiteGraph& g) {
  const int nv = g.order();
  if (nv <= 1) return 0;
  if (g.edge_count() == g.n() * g.m()) return std::min(g.n(), g.m());
  if (!is_connected(g)) return 0;

  // Any minimum separator S misses one of the first |S|+1 vertices, and that
  // vertex has a non-neighbour on the far side of S.
  int best = nv - 1;
  for (int v = 0; v < nv; ++v) best = std::min(best, g.degree(g.vertex(v)));
  for (int i = 0; i <= best && i < nv; ++i) {
    Vertex vi = g.vertex(i);
    for (int j = 0; j < nv; ++j) {
      if (j == i) continue;
      Vertex vj = g.vertex(j);
      if (g.adjacent(vi, vj)) continue;
      best = std::min(best, local_connectivity(g, vi, vj, best));
    }
  }
  return best;
}

bool is_k_connected(const BipartiteGraph& g, int k) {
  return g.order() > k && vertex_connectivity(g) >= k;
}

Fan max_fan(const BipartiteGraph& g, int x, const AltCycle& c) {
  if (x < 0 || x >= g.n()) throw Error("max_fan: X-vertex out of range");
  if (c.contains(xv(x))) throw Error("max_fan: apex lies on the cycle");

  const int nv = g.order();
  const int src = g.flat(xv(x));
  const int sink = 2 * nv;
  // A Y-target outweighs every possible count of interior vertices.
  const int y_bonus = nv + 1;
  detail::FlowNetwork net(2 * nv + 1);
  std::vector<bool> on_cycle(nv, false);
  for (Vertex v : c.vertices()) on_cycle[g.flat(v)] = true;

  for (int v = 0; v < nv; ++v) {
    if (v == src) continue;
    if (on_cycle[v])
      net.add_arc(2 * v, sink, 1, g.vertex(v).is_y() ? -y_bonus : 0);
    else
      net.add_arc(2 * v, 2 * v + 1, 1, 1);
  }
  for (int a = 0; a < nv; ++a) {
    if (on_cycle[a]) continue;
    for (int b : g.flat_neighbors(a)) {
      if (b == src) continue;
      net.add_arc(2 * a + 1, 2 * b, 1);
    }
  }
  net.min_cost_max_flow(2 * src + 1, sink);

  Fan fan;
  fan.apex = x;
  // Walk saturated arcs out of the apex; vertex capacities make every walk a
  // simple path and positive interior costs rule out flow circulations.
  for (auto& first : net.arcs(2 * src + 1)) {
    // Only forward unit arcs leave the apex; a used one has capacity 0.
    if (first.cap != 0) continue;
    std::vector<Vertex> path{xv(x)};
    int node = first.to;
    while (true) {
      int v = node / 2;
      path.push_back(g.vertex(v));
      if (on_cycle[v]) break;
      int out = 2 * v + 1;
      int next = -1;
      for (auto& a : net.arcs(out)) {
        // Besides the reverse of its own split arc, an out-node only has
        // forward unit arcs.
        if (a.to != 2 * v && a.cap == 0) {
          next = a.to;
          break;
        }
      }
      if (next < 0) throw Error("max_fan: broken flow decomposition");
      node = next;
    }
    fan.targets.push_back(path.back());
    fan.paths.push_back(std::move(path));
  }
  return fan;
}

std::vector<std::string> validate_fan(const BipartiteGraph& g, const AltCycle& c,
                                      const Fan& f) {
  std::vector<std::string> problems;
  if (f.apex < 0 || f.apex >= g.n()) {
    problems.push_back("apex out of range");
    return problems;
  }
  if (c.contains(xv(f.apex))) problems.push_back("apex lies on the cycle");
  if (f.targets.size() != f.paths.size()) problems.push_back("targets/paths size mismatch");
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < f.paths.size(); ++i) {
    const auto& p = f.paths[i];
    if (p.size() < 2 || p.front() != xv(f.apex)) {
      problems.push_back("path " + std::to_string(i) + " does not start at the apex");
      continue;
    }
    for (std::size_t k = 1; k < p.size(); ++k) {
      const Vertex v = p[k];
      if ((v.is_x() && v.index >= g.n()) || (v.is_y() && v.index >= g.m()) || v.index < 0) {
        problems.push_back("path " + std::to_string(i) + " leaves the graph");
        break;
      }
      if (!g.adjacent(p[k - 1], v))
        problems.push_back("path " + std::to_string(i) + " uses a non-edge");
      bool last = k + 1 == p.size();
      if (c.contains(v) != last)
        problems.push_back("path " + std::to_string(i) + " meets the cycle at " +
                           to_string(v) + (last ? " (target off cycle)" : ""));
      if (seen[g.flat(v)]++)
        problems.push_back("vertex " + to_string(v) + " shared by two paths");
    }
    if (i < f.targets.size() && f.targets[i] != p.back())
      problems.push_back("target " + std::to_string(i) + " is not the path end");
  }
  return problems;
}

bool fan_contains(const Fan& f, Vertex v) {
  if (v == xv(f.apex)) return true;
  for (const auto& p : f.paths)
    if (std::find(p.begin(), p.end(), v) != p.end()) return true;
  return false;
}

std::vector<Vertex> fan_path(const Fan& f, Vertex a, Vertex b) {
  const Vertex apex = xv(f.apex);
  // Leg from the apex to v, apex first.
  auto leg = [&](Vertex v) -> std::pair<int, std::vector<Vertex>> {
    if (v == apex) return {-1, {apex}};
    for (int i = 0; i < f.size(); ++i) {
      const auto& p = f.paths[i];
      auto it = std::find(p.begin(), p.end(), v);
      if (it != p.end()) return {i, std::vector<Vertex>(p.begin(), it + 1)};
    }
    throw Error("fan_path: " + to_string(v) + " is not on the fan");
  };
  auto [ia, la] = leg(a);
  auto [ib, lb] = leg(b);
  if (ia >= 0 && ia == ib) {
    // Same leg: the sub-path between them.
    if (la.size() <= lb.size()) return {lb.begin() + (la.size() - 1), lb.end()};
    std::vector<Vertex> out(la.begin() + (lb.size() - 1), la.end());
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::vector<Vertex> out(la.rbegin(), la.rend());
  out.insert(out.end(), lb.begin() + 1, lb.end());
  return out;
}

}  // namespace berge
