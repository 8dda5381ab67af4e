#include "berge/cycle_search.hh"

#include <algorithm>
#include <climits>
#include <map>

#include "berge/error.hh"

namespace berge {
namespace {

// A bipartite cycle is a cyclic X-sequence x_0..x_{L-1} plus distinct Y
// connectors, one common neighbour per consecutive pair. The search fixes x_0
// as the smallest X-vertex of the cycle, extends the sequence one X-vertex at
// a time and keeps a maximum matching of pairs to connectors up to date.
//
// X-vertices with identical neighbourhoods are interchangeable, so members of
// such a class are placed in increasing index order only, and a class whose
// smallest member is below x_0 is never used.
class XSequenceSearch {
 public:
  XSequenceSearch(const BipartiteGraph& g, std::int64_t budget)
      : g_(g), n_(g.n()), budget_(budget) {
    common_.assign(static_cast<std::size_t>(n_) * n_, {});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        auto& out = common_[a * n_ + b];
        const auto& ra = g.x_neighbors(a);
        const auto& rb = g.x_neighbors(b);
        std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                              std::back_inserter(out));
      }
    std::map<std::vector<int>, int> by_row;
    class_of_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
      auto [it, fresh] = by_row.emplace(g.x_neighbors(x), static_cast<int>(members_.size()));
      if (fresh) members_.emplace_back();
      class_of_[x] = it->second;
      members_[it->second].push_back(x);
    }
    for (int y = 0; y < g.m(); ++y)
      if (g.y_neighbors(y).size() >= 2) ++y_usable_;
  }

  /// Searches for a cycle with more than `floor` X-vertices, stopping as soon
  /// as one with at least `stop_at` is found.
  CycleSearchResult run(int floor, int stop_at) {
    best_ = floor;
    stop_at_ = stop_at;
    for (int x0 = 0; x0 < n_ && !aborted_ && !done_; ++x0) {
      if (g_.x_neighbors(x0).size() < 2) continue;
      const int cls = class_of_[x0];
      if (members_[cls].front() != x0) continue;
      int upper = 0;
      for (std::size_t c = 0; c < members_.size(); ++c) {
        if (members_[c].front() < x0) continue;
        if (g_.x_neighbors(members_[c].front()).size() < 2) continue;
        upper += static_cast<int>(members_[c].size());
      }
      upper = std::min(upper, y_usable_);
      // Later starting points only lose vertices.
      if (upper <= best_) break;
      x0_ = x0;
      upper_ = upper;
      used_in_class_.assign(members_.size(), 0);
      used_in_class_[cls] = 1;
      seq_.assign(1, x0);
      owner_.assign(g_.m(), -1);
      pair_y_.clear();
      dfs();
    }
    CycleSearchResult r;
    r.nodes = nodes_;
    if (!best_cycle_.empty()) r.cycle = AltCycle::from_sequence(g_, best_cycle_);
    if (aborted_)
      r.status = SearchStatus::budget_exceeded;
    else
      r.status = best_cycle_.empty() ? SearchStatus::none : SearchStatus::found;
    return r;
  }

 private:
  const std::vector<int>& common(int a, int b) const { return common_[a * n_ + b]; }

  std::pair<int, int> pair_at(int p) const {
    const int len = static_cast<int>(seq_.size());
    return {seq_[p], seq_[(p + 1) % len]};
  }

  bool augment(int p) {
    auto [a, b] = pair_at(p);
    for (int y : common(a, b)) {
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      if (owner_[y] < 0 || augment(owner_[y])) {
        owner_[y] = p;
        pair_y_[p] = y;
        return true;
      }
    }
    return false;
  }

  bool add_pair() {
    pair_y_.push_back(-1);
    seen_.assign(g_.m(), 0);
    stamp_ = 1;
    return augment(static_cast<int>(pair_y_.size()) - 1);
  }

  void try_close() {
    // Pairs 0..depth-2 are matched; the closing pair joins x_{L-1} to x_0.
    auto saved_owner = owner_;
    auto saved_pair = pair_y_;
    if (add_pair()) {
      best_ = static_cast<int>(seq_.size());
      best_cycle_.clear();
      for (std::size_t i = 0; i < seq_.size(); ++i) {
        best_cycle_.push_back(xv(seq_[i]));
        best_cycle_.push_back(yv(pair_y_[i]));
      }
      if (best_ >= stop_at_ || best_ >= upper_) done_ = true;
    }
    owner_ = std::move(saved_owner);
    pair_y_ = std::move(saved_pair);
  }

  void dfs() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const int depth = static_cast<int>(seq_.size());
    if (depth >= 2 && depth > best_) {
      try_close();
      if (done_) return;
    }
    if (depth >= upper_) return;
    const int last = seq_.back();
    for (std::size_t c = 0; c < members_.size(); ++c) {
      const auto& mem = members_[c];
      if (mem.front() < x0_ || used_in_class_[c] >= static_cast<int>(mem.size())) continue;
      const int x = mem[used_in_class_[c]];
      if (g_.x_neighbors(x).size() < 2 || common(last, x).empty()) continue;
      auto saved_owner = owner_;
      auto saved_pair = pair_y_;
      seq_.push_back(x);
      // The new pair is (last, x); while the sequence is open there is no
      // wrap-around pair, so pair_at(depth - 1) reads exactly that.
      if (add_pair()) {
        ++used_in_class_[c];
        dfs();
        --used_in_class_[c];
      }
      seq_.pop_back();
      owner_ = std::move(saved_owner);
      pair_y_ = std::move(saved_pair);
      if (aborted_ || done_) return;
    }
  }

  const BipartiteGraph& g_;
  int n_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<int>> common_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
  int y_usable_ = 0;

  int best_ = 0;
  int stop_at_ = INT_MAX;
  int x0_ = 0;
  int upper_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::vector<int> used_in_class_;
  std::vector<int> seq_;
  std::vector<int> owner_;
  std::vector<int> pair_y_;
  std::vector<int> seen_;
  int stamp_ = 0;
  std::vector<Vertex> best_cycle_;
};

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

CycleSearchResult longest_cycle(const BipartiteGraph& g, std::int64_t budget) {
  return XSequenceSearch(g, budget).run(1, INT_MAX);
}

CycleSearchResult has_x_spanning_cycle(const BipartiteGraph& g, std::int64_t budget) {
  if (g.n() < 2) return {};
  for (int x = 0; x < g.n(); ++x)
    if (g.x_neighbors(x).size() < 2) return {};
  return XSequenceSearch(g, budget).run(g.n() - 1, g.n());
}

CycleSearchResult find_cycle_at_least(const BipartiteGraph& g, int min_half,
                                      std::int64_t budget) {
  min_half = std::max(min_half, 2);
  if (min_half > g.n()) return {};
  return XSequenceSearch(g, budget).run(min_half - 1, min_half);
}

std::vector<std::string> validate_berge(const Hypergraph& h, const BergeCycle& b) {
  std::vector<std::string> problems;
  const int len = b.length();
  if (len < 2) problems.push_back("fewer than two base vertices");
  if (static_cast<int>(b.edges.size()) != len) {
    problems.push_back("edge count differs from vertex count");
    return problems;
  }
  std::vector<int> vs(b.base_vertices), es(b.edges);
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    problems.push_back("repeated base vertex");
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    problems.push_back("repeated edge");
  for (int i = 0; i < len; ++i) {
    int v = b.base_vertices[i], w = b.base_vertices[(i + 1) % len], e = b.edges[i];
    if (v < 0 || v >= h.vertex_count || w < 0 || w >= h.vertex_count) {
      problems.push_back("base vertex out of range");
      continue;
    }
    if (e < 0 || e >= static_cast<int>(h.edges.size())) {
      problems.push_back("edge index out of range");
      continue;
    }
    const auto& edge = h.edges[e];
    if (!std::binary_search(edge.begin(), edge.end(), v) ||
        !std::binary_search(edge.begin(), edge.end(), w))
      problems.push_back("edge " + std::to_string(e) + " misses a flanking vertex");
  }
  return problems;
}

BergeCycle berge_from_incidence_cycle(const Hypergraph& h, const AltCycle& c) {
  auto g = incidence_graph(h);
  if (auto problems = validate_cycle(g, c.vertices()); !problems.empty())
    throw Error("not a cycle of the incidence graph: " + problems.front());
  BergeCycle b;
  for (Vertex v : c.vertices())
    (v.is_x() ? b.base_vertices : b.edges).push_back(v.index);
  return b;
}

AltCycle incidence_cycle_from_berge(const Hypergraph& h, const BergeCycle& b) {
  if (auto problems = validate_berge(h, b); !problems.empty())
    throw Error("invalid Berge cycle: " + problems.front());
  std::vector<Vertex> seq;
  for (int i = 0; i < b.length(); ++i) {
    seq.push_back(xv(b.base_vertices[i]));
    seq.push_back(yv(b.edges[i]));
  }
  return AltCycle::from_sequence(incidence_graph(h), std::move(seq));
}

namespace {

class ComponentPathSearch {
 public:
  ComponentPathSearch(const BipartiteGraph& g, const std::vector<bool>& inner, int u,
                      int v, std::int64_t cap)
      : g_(g), inner_(inner), u_(u), v_(v), cap_(cap), visited_(g.order(), false) {
    for (int w = 0; w < g.order(); ++w)
      if (inner_[w] && g.vertex(w).is_x()) ++inner_x_;
  }

  std::optional<std::vector<int>> run() {
    path_.assign(1, u_);
    visited_[u_] = true;
    dfs(0, inner_x_);
    if (best_.empty()) return std::nullopt;
    return best_;
  }

 private:
  void dfs(int internal_x, int remaining_x) {
    if (++nodes_ > cap_ || best_score_ == inner_x_) return;
    const int at = path_.back();
    auto nbrs = g_.flat_neighbors(at);
    // X-vertices first: they are what the search is maximising.
    std::stable_partition(nbrs.begin(), nbrs.end(),
                          [&](int w) { return g_.vertex(w).is_x(); });
    for (int w : nbrs) {
      if (w == v_) {
        bool has_internal = path_.size() > 1;
        if ((has_internal || inner_[u_] || inner_[v_]) && internal_x > best_score_) {
          best_score_ = internal_x;
          best_ = path_;
          best_.push_back(v_);
        }
        continue;
      }
      if (!inner_[w] || visited_[w]) continue;
      const bool is_x = g_.vertex(w).is_x();
      if (internal_x + remaining_x <= best_score_) return;
      visited_[w] = true;
      path_.push_back(w);
      dfs(internal_x + is_x, remaining_x - is_x);
      path_.pop_back();
      visited_[w] = false;
      if (nodes_ > cap_) return;
    }
  }

  const BipartiteGraph& g_;
  const std::vector<bool>& inner_;
  int u_, v_;
  std::int64_t cap_;
  std::int64_t nodes_ = 0;
  int inner_x_ = 0;
  int best_score_ = -1;
  std::vector<bool> visited_;
  std::vector<int> path_;
  std::vector<int> best_;
};

std::optional<std::vector<int>> shortest_component_path(const BipartiteGraph& g,
                                                        const std::vector<bool>& inner,
                                                        int u, int v) {
  const bool direct_ok = inner[u] || inner[v];
  std::vector<int> parent(g.order(), -2);
  std::vector<int> queue{u};
  parent[u] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int at = queue[head];
    for (int w : g.flat_neighbors(at)) {
      if (w == v && (at != u || direct_ok)) {
        std::vector<int> path{v};
        for (int p = at; p != -1; p = parent[p]) path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!inner[w] || parent[w] != -2) continue;
      parent[w] = at;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> path_through_component(
    const BipartiteGraph& g, const AltCycle& c, const std::vector<Vertex>& d, Vertex u,
    Vertex v, bool prefer_x, const std::vector<Vertex>& avoid) {
  if (u == v) throw Error("path_through_component: endpoints coincide");
  std::vector<bool> inner(g.order(), false);
  for (Vertex w : d) {
    if (c.contains(w)) throw Error("path_through_component: component meets the cycle");
    inner[g.flat(w)] = true;
  }
  for (Vertex w : avoid) inner[g.flat(w)] = false;
  const int fu = g.flat(u), fv = g.flat(v);
  std::optional<std::vector<int>> flat_path;
  if (prefer_x) {
    const bool exact = static_cast<int>(d.size()) <= kExactComponentLimit;
    flat_path = ComponentPathSearch(g, inner, fu, fv, exact ? 5'000'000 : 200'000).run();
  } else {
    flat_path = shortest_component_path(g, inner, fu, fv);
  }
  if (!flat_path) return std::nullopt;
  std::vector<Vertex> out;
  out.reserve(flat_path->size());
  for (int w : *flat_path) out.push_back(g.vertex(w));
  return out;
}

}  // namespace berge
