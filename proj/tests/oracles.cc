#include "oracles.hh"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace oracle {

using berge::xv;
using berge::yv;

std::string brute_iso_key(const BipartiteGraph& g) {
  const int n = g.n(), m = g.m();
  std::vector<int> px(n), py(m);
  std::iota(px.begin(), px.end(), 0);
  std::string best;
  bool have = false;
  do {
    std::iota(py.begin(), py.end(), 0);
    do {
      std::string key(static_cast<std::size_t>(n) * m, '0');
      for (int x = 0; x < n; ++x)
        for (int y : g.x_neighbors(x)) key[px[x] * m + py[y]] = '1';
      if (!have || key < best) {
        best = key;
        have = true;
      }
    } while (std::next_permutation(py.begin(), py.end()));
  } while (std::next_permutation(px.begin(), px.end()));
  return std::to_string(n) + "x" + std::to_string(m) + ":" + best;
}

int brute_class_count(int n, int m, int delta, int min_degree) {
  std::set<std::string> keys;
  const int cells = n * m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::vector<int>> rows(n);
    std::vector<int> ydeg(m, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < m; ++y)
        if (mask >> (x * m + y) & 1) {
          rows[x].push_back(y);
          ++ydeg[y];
        }
    bool ok = true;
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) < std::max(delta, min_degree)) ok = false;
    for (int d : ydeg)
      if (d < min_degree) ok = false;
    if (!ok) continue;
    keys.insert(brute_iso_key(BipartiteGraph(m, rows)));
  }
  return static_cast<int>(keys.size());
}

namespace {

void cycles_from(const BipartiteGraph& g, int start, int at, std::vector<bool>& on,
                 int len, int& best) {
  for (int w : g.flat_neighbors(at)) {
    if (w == start && len >= 4) best = std::max(best, len);
    if (w <= start || on[w]) continue;
    on[w] = true;
    cycles_from(g, start, w, on, len + 1, best);
    on[w] = false;
  }
}

}  // namespace

int naive_longest_cycle(const BipartiteGraph& g) {
  int best = 0;
  std::vector<bool> on(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    on[s] = true;
    cycles_from(g, s, s, on, 1, best);
    on[s] = false;
  }
  return best;
}

int matrix_fan_flow(const BipartiteGraph& g, int x, const AltCycle& c) {
  // Nodes: in(v) = 2v, out(v) = 2v+1, sink = 2N.
  const int nv = g.order();
  const int nodes = 2 * nv + 1;
  const int sink = 2 * nv;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  std::vector<bool> on_c(nv, false);
  for (Vertex v : c.vertices()) on_c[g.flat(v)] = true;
  const int src = g.flat(xv(x));
  for (int v = 0; v < nv; ++v) {
    if (on_c[v])
      cap[2 * v][sink] = 1;
    else
      cap[2 * v][2 * v + 1] = (v == src) ? nv : 1;
  }
  for (int v = 0; v < nv; ++v) {
    if (on_c[v]) continue;
    for (int w : g.flat_neighbors(v)) cap[2 * v + 1][2 * w] = 1;
  }
  int flow = 0;
  const int s = 2 * src + 1;
  while (true) {
    std::vector<int> parent(nodes, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[sink] < 0) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b)
        if (parent[b] < 0 && cap[a][b] > 0) {
          parent[b] = a;
          q.push(b);
        }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != s; b = parent[b]) {
      --cap[parent[b]][b];
      ++cap[b][parent[b]];
    }
    ++flow;
  }
  return flow;
}

std::vector<std::vector<int>> flood_components(const BipartiteGraph& g,
                                               const std::vector<bool>& removed) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (removed[s] || label[s] >= 0) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b : g.flat_neighbors(a))
        if (!removed[b] && label[b] < 0) {
          label[b] = label[s];
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int brute_connectivity(const BipartiteGraph& g) {
  const int nv = g.order();
  for (int size = 0; size <= nv - 2; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<bool> removed(nv);
      for (int v = 0; v < nv; ++v) removed[v] = mask >> v & 1;
      if (flood_components(g, removed).size() >= 2) return size;
    }
  }
  return std::max(nv - 1, 0);
}

namespace {

void paths_from(const BipartiteGraph& g, const std::vector<bool>& inner, int at, int v,
                std::vector<bool>& on, int depth, int xs, bool direct_ok, int& best) {
  for (int w : g.flat_neighbors(at)) {
    if (w == v && (depth > 0 || direct_ok)) best = std::max(best, xs);
    if (w == v || !inner[w] || on[w]) continue;
    on[w] = true;
    paths_from(g, inner, w, v, on, depth + 1, xs + g.vertex(w).is_x(), direct_ok, best);
    on[w] = false;
  }
}

}  // namespace

int brute_best_component_path(const BipartiteGraph& g, const std::vector<bool>& inner,
                              int u, int v, bool direct_ok) {
  int best = -1;
  std::vector<bool> on(g.order(), false);
  on[u] = true;
  paths_from(g, inner, u, v, on, 0, 0, direct_ok, best);
  return best;
}

std::vector<int> naive_crossings(const BipartiteGraph& g, const AltCycle& c, int x1,
                                 int x2) {
  const int len = c.length();
  const int p1 = c.position(xv(x1)), p2 = c.position(xv(x2));
  std::vector<int> out;
  for (int p3 = 0; p3 < len; ++p3) {
    Vertex v3 = c.at(p3);
    if (!v3.is_x() || p3 == p1 || p3 == p2) continue;
    const Vertex after = c.at(p3 + 1), before = c.at(p3 - 1);
    // Clockwise distance from x1 decides which cyclic order holds.
    const int d3 = ((p3 - p1) % len + len) % len;
    const int d2 = ((p2 - p1) % len + len) % len;
    const bool between = d3 < d2;
    const bool hit = between
                         ? g.adjacent(xv(x1), after) && g.adjacent(xv(x2), before)
                         : g.adjacent(xv(x1), before) && g.adjacent(xv(x2), after);
    if (hit) out.push_back(v3.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph random_graph(int n, int m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<int>> rows(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y)
      if (coin(rng)) rows[x].push_back(y);
  return BipartiteGraph(m, rows);
}

BipartiteGraph random_min_degree_graph(int n, int m, int delta, std::mt19937_64& rng) {
  std::vector<std::vector<int>> rows(n);
  std::uniform_int_distribution<int> size(delta, m);
  std::vector<int> ys(m);
  std::iota(ys.begin(), ys.end(), 0);
  for (int x = 0; x < n; ++x) {
    std::shuffle(ys.begin(), ys.end(), rng);
    rows[x].assign(ys.begin(), ys.begin() + size(rng));
    std::sort(rows[x].begin(), rows[x].end());
  }
  return BipartiteGraph(m, rows);
}

std::pair<BipartiteGraph, AltCycle> random_graph_with_cycle(int n, int m, int half,
                                                            double p,
                                                            std::mt19937_64& rng) {
  std::vector<int> xs(n), ys(m);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<std::set<int>> adj(n);
  std::vector<Vertex> seq;
  for (int i = 0; i < half; ++i) {
    seq.push_back(xv(xs[i]));
    seq.push_back(yv(ys[i]));
    adj[xs[i]].insert(ys[i]);
    adj[xs[(i + 1) % half]].insert(ys[i]);
  }
  std::bernoulli_distribution coin(p);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y)
      if (coin(rng)) adj[x].insert(y);
  std::vector<std::vector<int>> rows(n);
  for (int x = 0; x < n; ++x) rows[x].assign(adj[x].begin(), adj[x].end());
  BipartiteGraph g(m, rows);
  return {g, AltCycle::from_sequence(g, seq)};
}

}  // namespace oracle
