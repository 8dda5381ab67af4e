#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/cycle.hh"
#include "berge/graph.hh"

namespace berge {

/// Node expansions allowed to the exact solvers before they give up.
inline constexpr std::int64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { found, none, budget_exceeded };

const char* to_string(SearchStatus s);

struct CycleSearchResult {
  SearchStatus status = SearchStatus::none;
  /// For `found`: the answer. For `budget_exceeded`: the best cycle seen so
  /// far, if any.
  std::optional<AltCycle> cycle;
  std::int64_t nodes = 0;
};

/// Exact longest cycle. `found` carries a longest cycle, `none` means the
/// graph is acyclic. Budget exhaustion is reported, never a wrong answer.
CycleSearchResult longest_cycle(const BipartiteGraph& g,
                                std::int64_t budget = kDefaultBudget);

/// Decides whether a cycle through every X-vertex exists.
CycleSearchResult has_x_spanning_cycle(const BipartiteGraph& g,
                                       std::int64_t budget = kDefaultBudget);

/// Decides whether a cycle with at least `min_half` X-vertices exists
/// (length >= 2 * min_half). Returns the first such cycle found.
CycleSearchResult find_cycle_at_least(const BipartiteGraph& g, int min_half,
                                      std::int64_t budget = kDefaultBudget);

/// Hypergraph cycle v_1 e_1 ... v_l e_l with v_i, v_{i+1} in e_i.
struct BergeCycle {
  std::vector<int> base_vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(base_vertices.size()); }
  bool operator==(const BergeCycle&) const = default;
};

std::vector<std::string> validate_berge(const Hypergraph& h, const BergeCycle& b);

/// Reads a cycle of incidence_graph(h) as a Berge cycle of h. Throws
/// berge::Error when `c` is not a cycle of the incidence graph.
BergeCycle berge_from_incidence_cycle(const Hypergraph& h, const AltCycle& c);
AltCycle incidence_cycle_from_berge(const Hypergraph& h, const BergeCycle& b);

/// Components up to this many vertices get an exhaustive path search.
inline constexpr int kExactComponentLimit = 14;

/// A u,v-path whose internal vertices all lie in `d` and avoid `avoid`.
/// With prefer_x the number of internal X-vertices is maximised (exactly for
/// small components, best effort above kExactComponentLimit); otherwise a
/// shortest such path is returned. When neither endpoint lies in `d` the
/// path has at least one internal vertex. nullopt when no path exists.
std::optional<std::vector<Vertex>> path_through_component(
    const BipartiteGraph& g, const AltCycle& c, const std::vector<Vertex>& d,
    Vertex u, Vertex v, bool prefer_x, const std::vector<Vertex>& avoid = {});

}  // namespace berge
