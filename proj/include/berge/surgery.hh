#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/connectivity.hh"
#include "berge/cycle.hh"
#include "berge/graph.hh"

namespace berge {

enum class Step { x_plus, x_minus, y_plus, y_minus };

/// Nearest X- (or Y-) vertex strictly after (plus) or before (minus) u in
/// the clockwise orientation of c. Throws when u is not on c.
Vertex successor(const AltCycle& c, Vertex u, Step which);

/// d_C(v): neighbours of v on the cycle.
int cycle_degree(const BipartiteGraph& g, const AltCycle& c, Vertex v);

/// Cycle, off-cycle apex, fan, and the derived statistics.
struct Triple {
  AltCycle cycle;
  int apex = -1;
  Fan fan;
  int ell = 0;  // |C| / 2
  int t = 0;
  int t_x = 0;
  int t_y = 0;
  std::vector<Vertex> targets{};    // T = V(F) ∩ V(C), cycle order
  std::vector<Vertex> neighbors{};  // T̃ = N_C(D), cycle order
  int t_tilde = 0;
  std::vector<Vertex> component{};  // D, sorted
  int fan_size = 0;
  int d_size = 0;
};

/// Throws when x lies on c or f is not a valid x,C-fan.
Triple triple_stats(const BipartiteGraph& g, const AltCycle& c, int x,
                    const Fan& f);

/// The five quantities the "better triple" order looks at.
struct TripleKey {
  int length = 0;
  int t = 0;
  int t_y = 0;
  int fan_size = 0;
  int d_size = 0;
  bool operator==(const TripleKey&) const = default;
};

TripleKey key_of(const Triple& t);
std::string to_string(const TripleKey& k);

enum class Better { first, second, tie };

/// Longer cycle, then larger t, then more Y-targets, then fewer fan
/// vertices, then a smaller component.
Better triple_compare(const TripleKey& a, const TripleKey& b);
Better triple_compare(const Triple& a, const Triple& b);

/// Every x3 at which x1 and x2 cross, sorted. x1, x2 must be distinct
/// X-vertices of c.
std::vector<int> crossings(const BipartiteGraph& g, const AltCycle& c, int x1,
                           int x2);

/// N(u) ∩ N(v) − V(C) for X-vertices u, v, as sorted Y indices.
std::vector<int> common_outside_neighbors(const BipartiteGraph& g,
                                          const AltCycle& c, int u, int v);

struct GoodSetVerdict {
  bool good = true;
  /// 0 when good, otherwise the first failed condition (1, 2 or 3).
  int clause = 0;
  /// Offending pair for clauses 2 and 3.
  std::optional<std::pair<int, int>> pair;
  std::string detail;
};

/// Checks (1) d_C(x) <= |W|, (2) no two of {x} ∪ W share an off-cycle
/// neighbour, (3) two members of the same block cross at most once.
/// `blocks` must partition w into parts of size >= 2.
GoodSetVerdict is_good_set(const BipartiteGraph& g, const AltCycle& c, int x,
                           const std::vector<int>& w,
                           const std::vector<std::vector<int>>& blocks);

/// Every pair of the given connectors is joined through d by a path with at
/// least two internal X-vertices.
bool is_two_rich(const BipartiteGraph& g, const AltCycle& c,
                 const std::vector<Vertex>& d,
                 const std::vector<Vertex>& connectors);

/// Three connectors u_1, u_2, u_3 in clockwise order, u_1 being the one met
/// first from the start of the cycle list. Indices i wrap modulo 3; U_i is
/// the open arc from u_i to u_{i+1}.
class SegmentView {
 public:
  SegmentView(const AltCycle& c, std::vector<Vertex> connectors);

  Vertex u(int i) const { return u_[wrap(i)]; }
  /// Open arc U_i in clockwise order.
  const std::vector<Vertex>& segment(int i) const { return seg_[wrap(i)]; }
  std::vector<int> segment_x(int i) const;
  std::vector<int> segment_y(int i) const;
  /// x_{i,j}: for j > 0 the j-th X-vertex of U_i clockwise; for j < 0 the
  /// |j|-th X-vertex of U_{i-1} counting back from u_i.
  std::optional<int> x(int i, int j) const;
  std::optional<int> y(int i, int j) const;

 private:
  static int wrap(int i) { return ((i - 1) % 3 + 3) % 3; }
  std::vector<Vertex> u_;
  std::vector<std::vector<Vertex>> seg_;
};

/// Requires t̃ = 3.
SegmentView segment_view(const Triple& t);

enum class ConfigKind { short_type, medium_type, long_type };
const char* to_string(ConfigKind k);

struct ConfigType {
  int i = 0;
  ConfigKind kind = ConfigKind::short_type;
  /// The two endpoints coincide or one of them does not exist; such pairs
  /// are reported and never classified.
  bool degenerate = false;
};

/// Short: x_{i,-1}, x_{i,1}. Medium: x_{i,1}, x_{i+1,-1}. Long: x_{i,-1},
/// x_{i+1,1}. A pair is listed when it shares an off-cycle neighbour, or
/// when it is degenerate.
std::vector<ConfigType> classify_config_types(const BipartiteGraph& g,
                                              const AltCycle& c,
                                              const SegmentView& seg);

/// Every x_{i,2} .. x_{i+1,-2} shares off-cycle neighbours with both x_{i,1}
/// and x_{i+1,-1}.
bool is_abundant(const BipartiteGraph& g, const AltCycle& c,
                 const SegmentView& seg, int i);

enum class Guarantee { strictly_longer, equal_length };
const char* to_string(Guarantee g);

struct MoveResult {
  AltCycle new_cycle;
  std::string kind;
  Guarantee guarantee = Guarantee::strictly_longer;
  /// X-vertices of the old cycle missing from the new one.
  std::vector<int> sacrificed{};
};

/// Rewired cycles built from the triple. Every result is a validated cycle
/// at least as long as the old one; each keeps all of X ∩ V(C) except the
/// vertices its pattern names as expendable. Results are deduplicated.
std::vector<MoveResult> propose_moves(const BipartiteGraph& g, const Triple& t);

/// Longest-cycle extensions that may drop a stretch of C: a, b on C joined
/// by a fan path or a path through D that is longer than the arc it
/// replaces. Used by the search loop; not restricted in what they drop.
std::vector<MoveResult> extension_moves(const BipartiteGraph& g, const Triple& t);

/// The best triple over all off-cycle X-vertices, each with its max_fan;
/// ties go to the smallest apex. nullopt when C covers X.
std::optional<Triple> best_triple(const BipartiteGraph& g, const AltCycle& c);

/// A cycle through a random X-vertex, or nullopt when g is acyclic.
std::optional<AltCycle> random_cycle(const BipartiteGraph& g, std::uint64_t seed);

struct TraceRecord {
  int round = 0;
  std::string kind;
  TripleKey before;
  TripleKey after;
};

struct ImproveResult {
  AltCycle best;
  bool spans_x = false;
  bool budget_exhausted = false;
  int rounds = 0;
  int restarts = 0;
  std::vector<TraceRecord> trace{};
};

/// Rounds without a better triple before restarting.
inline constexpr int kStagnationLimit = 50;

/// Local search over cycles: each round takes the best triple, applies the
/// longest strictly longer move, else an equal-length move that yields a
/// better triple, else a random equal-length perturbation. Restarts from a
/// fresh random cycle after kStagnationLimit rounds without improvement.
/// `budget` counts rounds. Throws when g has no cycle.
ImproveResult improve_search(const BipartiteGraph& g, std::int64_t budget,
                             std::uint64_t seed);

}  // namespace berge
