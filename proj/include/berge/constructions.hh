#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/cycle_search.hh"
#include "berge/graph.hh"

namespace berge {

struct GkParams {
  int k = 2;
  std::vector<int> parts;  // n_1 >= ... >= n_{k+1} >= 1
  int delta = 3;
};

/// Problems with the parameters; empty means valid.
std::vector<std::string> validate(const GkParams& p);

/// Claims attached to a generated instance, each checkable independently.
struct Certificate {
  std::string construction;
  int claimed_n = 0;
  int claimed_m = 0;
  int claimed_min_x_degree = 0;
  /// Exact degree of every X-vertex; empty when not claimed.
  std::vector<int> claimed_x_degrees;
  /// Length (2 * X-count) of a longest cycle; nullopt when unstated.
  std::optional<int> claimed_longest;
  /// No cycle through every X-vertex (for hypergraphs: no Hamiltonian Berge
  /// cycle).
  bool claims_no_x_spanning = false;
  /// Vertices whose removal disconnects the graph; bounds the connectivity.
  std::vector<Vertex> named_cut;
  /// Number of components left after removing `named_cut`, when claimed.
  int claimed_cut_components = 0;
};

struct GkInstance {
  BipartiteGraph graph;
  Certificate cert;
};

/// K_{delta-k, n_1} u ... u K_{delta-k, n_{k+1}} plus k connectors adjacent to
/// every X-vertex. Layout: X-groups in part order; Y-blocks in part order;
/// connectors a_1..a_k are the last k Y-vertices. Throws berge::Error on
/// invalid parameters.
GkInstance build_gk(const GkParams& p);

struct Con4Instance {
  Hypergraph hypergraph;
  Certificate cert;
  int v1_size = 0;
  int v2_size = 0;
  int edge_size = 0;
  int v1_degree = 0;
  int v2_degree = 0;
};

/// Vertices 0..|V1|-1 form V1, the rest V2. Edges: every ceil(n/4)-subset
/// meeting V1 in exactly one vertex (in lexicographic order), then V1
/// itself. Throws berge::Error for n < 4.
Con4Instance build_con4(int n);

std::int64_t binomial(int n, int k);

struct ClaimCheck {
  std::string claim;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CertificateReport {
  std::vector<ClaimCheck> checks;
  bool all_pass() const;
};

/// Re-derives every claim. Longest-cycle claims are checked exactly when the
/// solver finishes within `budget`; otherwise only the absence of a cycle
/// longer than claimed is decided, and the check says so.
CertificateReport check_certificate(const BipartiteGraph& g, const Certificate& cert,
                                    std::int64_t budget = kDefaultBudget);

}  // namespace berge
