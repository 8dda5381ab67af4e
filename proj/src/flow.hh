#pragma once

// Internal flow kernels shared by the connectivity code.

#include <algorithm>
#include <climits>
#include <deque>
#include <vector>

namespace berge::detail {

struct Arc {
  int to;
  int cap;
  int cost;
  int rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  int add_arc(int from, int to, int cap, int cost = 0) {
    adj_[from].push_back({to, cap, cost, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, -cost, static_cast<int>(adj_[from].size()) - 1});
    return static_cast<int>(adj_[from].size()) - 1;
  }

  int size() const { return static_cast<int>(adj_.size()); }
  std::vector<Arc>& arcs(int v) { return adj_[v]; }

  /// Dinic max-flow, stopping once `limit` units have been pushed.
  int max_flow(int s, int t, int limit = INT_MAX) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (flow < limit) {
        int f = dfs(s, t, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  /// Successive shortest paths (Bellman-Ford queue). Returns {flow, cost}
  /// of a maximum flow with minimum cost.
  std::pair<int, long long> min_cost_max_flow(int s, int t) {
    int flow = 0;
    long long cost = 0;
    const int nn = size();
    std::vector<long long> dist(nn);
    std::vector<int> prev_node(nn), prev_arc(nn);
    std::vector<bool> in_queue(nn);
    while (true) {
      std::fill(dist.begin(), dist.end(), LLONG_MAX);
      std::fill(in_queue.begin(), in_queue.end(), false);
      dist[s] = 0;
      std::deque<int> q{s};
      in_queue[s] = true;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        in_queue[v] = false;
        for (int i = 0; i < static_cast<int>(adj_[v].size()); ++i) {
          const auto& a = adj_[v][i];
          if (a.cap <= 0 || dist[v] + a.cost >= dist[a.to]) continue;
          dist[a.to] = dist[v] + a.cost;
          prev_node[a.to] = v;
          prev_arc[a.to] = i;
          if (!in_queue[a.to]) {
            in_queue[a.to] = true;
            q.push_back(a.to);
          }
        }
      }
      if (dist[t] == LLONG_MAX) break;
      int push = INT_MAX;
      for (int v = t; v != s; v = prev_node[v])
        push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
      for (int v = t; v != s; v = prev_node[v]) {
        auto& a = adj_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        adj_[v][a.rev].cap += push;
      }
      flow += push;
      cost += static_cast<long long>(push) * dist[t];
    }
    return {flow, cost};
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& a : adj_[v]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int pushed) {
    if (v == t) return pushed;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      auto& a = adj_[v][i];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      int f = dfs(a.to, t, std::min(pushed, a.cap));
      if (f > 0) {
        a.cap -= f;
        adj_[a.to][a.rev].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace berge::detail
