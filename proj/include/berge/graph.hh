#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace berge {

enum class Side : std::uint8_t { X, Y };

/// A vertex reference that carries its part. X and Y indices live in
/// separate namespaces, both starting at 0.
struct Vertex {
  Side side = Side::X;
  int index = 0;

  bool is_x() const { return side == Side::X; }
  bool is_y() const { return side == Side::Y; }

  auto operator<=>(const Vertex&) const = default;
};

constexpr Vertex xv(int i) { return {Side::X, i}; }
constexpr Vertex yv(int j) { return {Side::Y, j}; }

std::string to_string(Vertex v);

/// Bipartite graph with parts X = {0..n-1} and Y = {0..m-1}. Immutable once
/// built. The rows are stored exactly as given; `validate` reports any broken
/// invariant and `checked` refuses to build an invalid graph.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int m, std::vector<std::vector<int>> rows);

  /// Throws berge::Error listing the violations when the rows are malformed.
  static BipartiteGraph checked(int m, std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  int m() const { return m_; }
  int order() const { return n() + m_; }
  int edge_count() const { return edges_; }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& x_neighbors(int x) const { return rows_[x]; }
  const std::vector<int>& y_neighbors(int y) const { return cols_[y]; }

  bool adjacent(int x, int y) const {
    return matrix_[static_cast<std::size_t>(x) * m_ + y] != 0;
  }
  bool adjacent(Vertex a, Vertex b) const;

  int degree(Vertex v) const;

  /// Dense ids for algorithms that ignore the bipartition: X first, then Y.
  int flat(Vertex v) const { return v.is_x() ? v.index : n() + v.index; }
  Vertex vertex(int flat_id) const {
    return flat_id < n() ? xv(flat_id) : yv(flat_id - n());
  }
  std::vector<int> flat_neighbors(int flat_id) const;

  /// Returns a new graph with the extra X–Y edge.
  BipartiteGraph with_edge(int x, int y) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_;
  }

 private:
  int m_ = 0;
  int edges_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
  std::vector<std::uint8_t> matrix_;
};

/// Hypergraph with vertices {0..vertex_count-1}. Edges are sorted vertex
/// lists; empty edges and repeated equal edges are both allowed.
struct Hypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;

  bool operator==(const Hypergraph&) const = default;
};

struct DegreeProfile {
  std::vector<int> x_degrees;
  std::vector<int> y_degrees;
  int min_x_degree = 0;
  int min_degree = 0;
};

std::vector<std::string> validate(const BipartiteGraph& g);
std::vector<std::string> validate(const Hypergraph& h);

DegreeProfile degree_profile(const BipartiteGraph& g);

/// X := vertices of h, Y := edges of h, adjacency = containment.
BipartiteGraph incidence_graph(const Hypergraph& h);
Hypergraph to_hypergraph(const BipartiteGraph& g);

/// Multiset comparison of edge lists (edge order is not significant).
bool same_up_to_edge_order(const Hypergraph& a, const Hypergraph& b);

/// Connected components of the graph after deleting `removed` (flat ids).
/// Each component is returned as sorted flat ids; components are ordered by
/// their smallest member.
std::vector<std::vector<int>> components_without(
    const BipartiteGraph& g, const std::vector<bool>& removed);

}  // namespace berge
