#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "berge/graph.hh"

namespace berge {

/// An even cycle stored as x_0 y_0 x_1 y_1 ... x_{l-1} y_{l-1}. List order is
/// the clockwise orientation; the successor of the last entry is the first.
class AltCycle {
 public:
  /// Validates against `g` (alternation, distinctness, adjacency, l >= 2)
  /// and throws berge::Error on failure. A sequence starting with a Y-vertex
  /// is rotated so that it starts with an X-vertex.
  static AltCycle from_sequence(const BipartiteGraph& g,
                                std::vector<Vertex> seq);
  static std::optional<AltCycle> try_from_sequence(const BipartiteGraph& g,
                                                   std::vector<Vertex> seq);

  std::span<const Vertex> vertices() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  int half_length() const { return length() / 2; }

  /// Position in the list, or -1 when the vertex is not on the cycle.
  int position(Vertex v) const;
  bool contains(Vertex v) const { return position(v) >= 0; }
  Vertex at(int pos) const {
    int l = length();
    return seq_[((pos % l) + l) % l];
  }

  std::vector<int> x_vertices() const;
  std::vector<int> y_vertices() const;

  AltCycle reversed() const;

  /// Rotation/reflection-independent form: starts at the smallest X-vertex
  /// and walks towards the smaller of its two cycle neighbours.
  std::vector<Vertex> normalized() const;

  bool operator==(const AltCycle& o) const { return seq_ == o.seq_; }

 private:
  AltCycle(std::vector<Vertex> seq, int n, int m);
  std::vector<Vertex> seq_;
  std::vector<int> pos_x_;
  std::vector<int> pos_y_;
};

/// Problems with `seq` read as a cycle of g; empty means it is valid.
std::vector<std::string> validate_cycle(const BipartiteGraph& g,
                                        std::span<const Vertex> seq);

/// Connected components of G - V(C), each as a sorted vertex list.
std::vector<std::vector<Vertex>> components_off_cycle(const BipartiteGraph& g,
                                                      const AltCycle& c);

/// "x0 y3 x1 y2" text form used by the CLI and logs.
std::string format_vertices(std::span<const Vertex> seq);
std::vector<Vertex> parse_vertices(const std::string& text);

}  // namespace berge
