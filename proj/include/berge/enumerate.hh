#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hh"

namespace berge {

/// G(n, m, delta) restricted by the degree conditions every k-connected
/// graph meets: X-degrees >= max(delta, k), Y-degrees >= k. k = 0 disables
/// the connectivity pruning.
struct SpaceParams {
  int n = 0;
  int m = 0;
  int delta = 0;
  int k = 0;
};

/// One X-row as a bitmask; column 0 is the most significant of m bits, so
/// integer order is lexicographic order of the row.
using RowMask = std::uint64_t;
using Rows = std::vector<RowMask>;

inline constexpr int kMaxEnumerateM = 62;

/// Throws berge::Error when n < 1, m < 1 or m > kMaxEnumerateM.
void check_space(const SpaceParams& p);

/// Rows as "0,1,2/0,1,3" (Y indices per row, '-' for an empty row).
std::string format_rows(const Rows& rows, int m);
Rows parse_rows(const std::string& text, int m);
Rows rows_of(const BipartiteGraph& g);
BipartiteGraph graph_from_rows(const Rows& rows, int m);

/// Canonical prefixes of min(depth, n) rows; their completions partition
/// the space.
std::vector<Rows> shard_prefixes(const SpaceParams& p, int depth);

/// Visits every canonical representative extending `prefix`, in a fixed
/// order. With `resume_after`, starts just after that graph. `visit`
/// returns false to stop; the function then returns false.
bool enumerate_shard(const SpaceParams& p, const Rows& prefix,
                     const std::optional<Rows>& resume_after,
                     const std::function<bool(const Rows&)>& visit);

/// One canonical representative per isomorphism class (X and Y permuted
/// separately). Infeasible parameters (delta > m) yield nothing.
void enumerate_space(const SpaceParams& p,
                     const std::function<bool(const BipartiteGraph&)>& visit);

std::int64_t count_classes(const SpaceParams& p);

/// Random-probe estimate of the number of classes from the branching of
/// the canonical prefix tree.
struct SpaceEstimate {
  double classes = 0;
  int probes = 0;
};
SpaceEstimate estimate_classes(const SpaceParams& p, int probes, std::uint64_t seed);

}  // namespace berge
