#include "berge/enumerate.hh"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "berge/canonical.hh"
#include "berge/error.hh"

namespace berge {
namespace {

RowMask bit_of(int y, int m) { return RowMask{1} << (m - 1 - y); }

// Canonical prefixes have non-increasing columns, so equal columns form
// contiguous groups and a child row fills each group from the left.
struct Node {
  Rows rows;
  std::vector<int> groups;  // sizes, left to right
  std::vector<int> col_degree;
};

Node root(const SpaceParams& p) { return {{}, {p.m}, std::vector<int>(p.m, 0)}; }

Node child(const Node& at, RowMask row, int m) {
  Node next{at.rows, {}, at.col_degree};
  next.rows.push_back(row);
  int start = 0;
  for (int size : at.groups) {
    int ones = 0;
    for (int y = start; y < start + size; ++y) ones += (row & bit_of(y, m)) != 0;
    if (ones > 0) next.groups.push_back(ones);
    if (size - ones > 0) next.groups.push_back(size - ones);
    start += size;
  }
  for (int y = 0; y < m; ++y) next.col_degree[y] += (row & bit_of(y, m)) != 0;
  return next;
}

// Valid next rows in decreasing order.
std::vector<RowMask> children(const SpaceParams& p, const Node& at) {
  std::vector<RowMask> cand{0};
  int start = 0;
  for (int size : at.groups) {
    std::vector<RowMask> grown;
    for (RowMask base : cand) {
      RowMask fill = base;
      grown.push_back(fill);
      for (int h = 0; h < size; ++h) {
        fill |= bit_of(start + h, p.m);
        grown.push_back(fill);
      }
    }
    cand = std::move(grown);
    start += size;
  }
  std::sort(cand.rbegin(), cand.rend());

  const int row_min = std::max(p.delta, p.k);
  const int left_after = p.n - static_cast<int>(at.rows.size()) - 1;
  std::vector<RowMask> out;
  for (RowMask r : cand) {
    if (!at.rows.empty() && r > at.rows.back()) continue;
    if (std::popcount(r) < row_min) continue;
    bool short_col = false;
    for (int y = 0; y < p.m && !short_col; ++y)
      short_col = at.col_degree[y] + ((r & bit_of(y, p.m)) != 0) + left_after < p.k;
    if (short_col) continue;
    Rows rows = at.rows;
    rows.push_back(r);
    if (!is_canonical(graph_from_rows(rows, p.m))) continue;
    out.push_back(r);
  }
  return out;
}

Node node_of(const SpaceParams& p, const Rows& prefix) {
  Node at = root(p);
  for (RowMask r : prefix) {
    auto kids = children(p, at);
    if (std::find(kids.begin(), kids.end(), r) == kids.end())
      throw Error("prefix " + format_rows(prefix, p.m) + " is not a canonical prefix of the space");
    at = child(at, r, p.m);
  }
  return at;
}

class Walker {
 public:
  Walker(const SpaceParams& p, const std::optional<Rows>& cursor,
         const std::function<bool(const Rows&)>& visit)
      : p_(p), cursor_(cursor), visit_(visit) {}

  // Returns false once visit asks to stop.
  bool walk(const Node& at, bool tight) {
    const std::size_t level = at.rows.size();
    if (static_cast<int>(level) == p_.n) {
      if (tight) return true;  // the cursor graph itself was already visited
      return visit_(at.rows);
    }
    for (RowMask r : children(p_, at)) {
      bool next_tight = false;
      if (tight) {
        if (r > (*cursor_)[level]) continue;
        next_tight = r == (*cursor_)[level];
      }
      if (!walk(child(at, r, p_.m), next_tight)) return false;
    }
    return true;
  }

 private:
  const SpaceParams& p_;
  const std::optional<Rows>& cursor_;
  const std::function<bool(const Rows&)>& visit_;
};

}  // namespace

void check_space(const SpaceParams& p) {
  if (p.n < 1 || p.m < 1) throw Error("enumeration needs n >= 1 and m >= 1");
  if (p.m > kMaxEnumerateM)
    throw Error("enumeration supports m <= " + std::to_string(kMaxEnumerateM));
}

std::string format_rows(const Rows& rows, int m) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '/';
    std::string row;
    for (int y = 0; y < m; ++y)
      if (rows[i] & bit_of(y, m)) row += (row.empty() ? "" : ",") + std::to_string(y);
    out += row.empty() ? "-" : row;
  }
  return out;
}

Rows parse_rows(const std::string& text, int m) {
  Rows rows;
  if (text.empty()) return rows;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '/')) {
    RowMask r = 0;
    if (part != "-") {
      std::stringstream cells(part);
      std::string cell;
      while (std::getline(cells, cell, ',')) {
        int y = -1;
        try {
          y = std::stoi(cell);
        } catch (const std::exception&) {
          throw Error("bad row list '" + text + "'");
        }
        if (y < 0 || y >= m) throw Error("row entry " + cell + " out of range");
        r |= bit_of(y, m);
      }
    }
    rows.push_back(r);
  }
  return rows;
}

Rows rows_of(const BipartiteGraph& g) {
  Rows rows;
  for (int x = 0; x < g.n(); ++x) {
    RowMask r = 0;
    for (int y : g.x_neighbors(x)) r |= bit_of(y, g.m());
    rows.push_back(r);
  }
  return rows;
}

BipartiteGraph graph_from_rows(const Rows& rows, int m) {
  std::vector<std::vector<int>> adj(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (int y = 0; y < m; ++y)
      if (rows[x] & bit_of(y, m)) adj[x].push_back(y);
  return BipartiteGraph(m, std::move(adj));
}

std::vector<Rows> shard_prefixes(const SpaceParams& p, int depth) {
  check_space(p);
  if (depth < 0) throw Error("shard depth must be >= 0");
  depth = std::min(depth, p.n);
  std::vector<Rows> out;
  std::function<void(const Node&)> grow = [&](const Node& at) {
    if (static_cast<int>(at.rows.size()) == depth) {
      out.push_back(at.rows);
      return;
    }
    for (RowMask r : children(p, at)) grow(child(at, r, p.m));
  };
  grow(root(p));
  return out;
}

bool enumerate_shard(const SpaceParams& p, const Rows& prefix,
                     const std::optional<Rows>& resume_after,
                     const std::function<bool(const Rows&)>& visit) {
  check_space(p);
  if (resume_after) {
    if (static_cast<int>(resume_after->size()) != p.n ||
        !std::equal(prefix.begin(), prefix.end(), resume_after->begin()))
      throw Error("resume cursor does not belong to shard " + format_rows(prefix, p.m));
  }
  Walker w(p, resume_after, visit);
  return w.walk(node_of(p, prefix), resume_after.has_value());
}

void enumerate_space(const SpaceParams& p,
                     const std::function<bool(const BipartiteGraph&)>& visit) {
  check_space(p);
  if (p.delta > p.m) return;
  enumerate_shard(p, {}, std::nullopt,
                  [&](const Rows& rows) { return visit(graph_from_rows(rows, p.m)); });
}

std::int64_t count_classes(const SpaceParams& p) {
  check_space(p);
  std::int64_t count = 0;
  if (p.delta > p.m) return 0;
  enumerate_shard(p, {}, std::nullopt, [&](const Rows&) {
    ++count;
    return true;
  });
  return count;
}

SpaceEstimate estimate_classes(const SpaceParams& p, int probes, std::uint64_t seed) {
  check_space(p);
  SpaceEstimate est{0, probes};
  if (p.delta > p.m || probes <= 0) return est;
  std::mt19937_64 rng(seed);
  double sum = 0;
  for (int i = 0; i < probes; ++i) {
    Node at = root(p);
    double weight = 1;
    while (static_cast<int>(at.rows.size()) < p.n) {
      auto kids = children(p, at);
      if (kids.empty()) {
        weight = 0;
        break;
      }
      weight *= static_cast<double>(kids.size());
      std::uniform_int_distribution<std::size_t> pick(0, kids.size() - 1);
      at = child(at, kids[pick(rng)], p.m);
    }
    sum += weight;
  }
  est.classes = sum / probes;
  return est;
}

}  // namespace berge
