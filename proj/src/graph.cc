#include "berge/graph.hh"

#include <algorithm>
#include <sstream>

#include "berge/error.hh"

namespace berge {

std::string to_string(Vertex v) {
  return (v.is_x() ? "x" : "y") + std::to_string(v.index);
}

BipartiteGraph::BipartiteGraph(int m, std::vector<std::vector<int>> rows)
    : m_(m), rows_(std::move(rows)), cols_(std::max(m, 0)) {
  matrix_.assign(static_cast<std::size_t>(n()) * std::max(m_, 0), 0);
  for (int x = 0; x < n(); ++x) {
    for (int y : rows_[x]) {
      if (y < 0 || y >= m_) continue;
      auto& cell = matrix_[static_cast<std::size_t>(x) * m_ + y];
      if (cell) continue;
      cell = 1;
      cols_[y].push_back(x);
      ++edges_;
    }
  }
}

BipartiteGraph BipartiteGraph::checked(int m,
                                       std::vector<std::vector<int>> rows) {
  BipartiteGraph g(m, std::move(rows));
  auto problems = validate(g);
  if (!problems.empty()) {
    std::string msg = "invalid bipartite graph:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw Error(msg);
  }
  return g;
}

bool BipartiteGraph::adjacent(Vertex a, Vertex b) const {
  if (a.side == b.side) return false;
  if (a.is_y()) std::swap(a, b);
  if (a.index < 0 || a.index >= n() || b.index < 0 || b.index >= m_)
    return false;
  return adjacent(a.index, b.index);
}

int BipartiteGraph::degree(Vertex v) const {
  return static_cast<int>(v.is_x() ? rows_[v.index].size()
                                   : cols_[v.index].size());
}

std::vector<int> BipartiteGraph::flat_neighbors(int flat_id) const {
  std::vector<int> out;
  if (flat_id < n()) {
    for (int y : rows_[flat_id]) out.push_back(n() + y);
  } else {
    out = cols_[flat_id - n()];
  }
  return out;
}

BipartiteGraph BipartiteGraph::with_edge(int x, int y) const {
  auto rows = rows_;
  auto& row = rows[x];
  auto it = std::lower_bound(row.begin(), row.end(), y);
  if (it == row.end() || *it != y) row.insert(it, y);
  return BipartiteGraph(m_, std::move(rows));
}

std::vector<std::string> validate(const BipartiteGraph& g) {
  std::vector<std::string> out;
  if (g.m() < 0) out.push_back("negative m");
  for (int x = 0; x < g.n(); ++x) {
    const auto& row = g.x_neighbors(x);
    for (std::size_t i = 0; i < row.size(); ++i) {
      int y = row[i];
      if (y < 0 || y >= g.m()) {
        std::ostringstream os;
        os << "x" << x << " lists out-of-range neighbor " << y;
        out.push_back(os.str());
      }
      if (i > 0 && row[i - 1] == y) {
        std::ostringstream os;
        os << "x" << x << " lists neighbor " << y << " twice";
        out.push_back(os.str());
      } else if (i > 0 && row[i - 1] > y) {
        std::ostringstream os;
        os << "x" << x << " neighbors not sorted at " << y;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const Hypergraph& h) {
  std::vector<std::string> out;
  if (h.vertex_count < 0) out.push_back("negative vertex count");
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& edge = h.edges[e];
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] < 0 || edge[i] >= h.vertex_count)
        out.push_back("edge " + std::to_string(e) + " has out-of-range vertex " +
                      std::to_string(edge[i]));
      if (i > 0 && edge[i - 1] >= edge[i])
        out.push_back("edge " + std::to_string(e) +
                      " is not a sorted vertex set");
    }
  }
  return out;
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
  DegreeProfile p;
  p.x_degrees.resize(g.n());
  p.y_degrees.resize(g.m());
  for (int x = 0; x < g.n(); ++x) p.x_degrees[x] = g.degree(xv(x));
  for (int y = 0; y < g.m(); ++y) p.y_degrees[y] = g.degree(yv(y));
  p.min_x_degree = p.x_degrees.empty()
                       ? 0
                       : *std::min_element(p.x_degrees.begin(), p.x_degrees.end());
  int min_y = p.y_degrees.empty()
                  ? p.min_x_degree
                  : *std::min_element(p.y_degrees.begin(), p.y_degrees.end());
  p.min_degree = p.x_degrees.empty() ? min_y : std::min(p.min_x_degree, min_y);
  return p;
}

BipartiteGraph incidence_graph(const Hypergraph& h) {
  std::vector<std::vector<int>> rows(h.vertex_count);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e]) rows[v].push_back(static_cast<int>(e));
  return BipartiteGraph::checked(static_cast<int>(h.edges.size()),
                                 std::move(rows));
}

Hypergraph to_hypergraph(const BipartiteGraph& g) {
  Hypergraph h;
  h.vertex_count = g.n();
  h.edges.resize(g.m());
  for (int y = 0; y < g.m(); ++y) {
    h.edges[y] = g.y_neighbors(y);
    std::sort(h.edges[y].begin(), h.edges[y].end());
  }
  return h;
}

bool same_up_to_edge_order(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count != b.vertex_count) return false;
  auto ea = a.edges, eb = b.edges;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

std::vector<std::vector<int>> components_without(
    const BipartiteGraph& g, const std::vector<bool>& removed) {
  const int total = g.order();
  std::vector<int> comp(total, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < total; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.flat_neighbors(v)) {
        if (removed[w] || comp[w] >= 0) continue;
        comp[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace berge
