#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "berge/error.hh"
#include "berge/surgery.hh"

namespace berge {
namespace {

std::optional<AltCycle> cycle_through(const BipartiteGraph& g, int x0, std::mt19937_64& rng) {
  auto ys = g.x_neighbors(x0);
  std::shuffle(ys.begin(), ys.end(), rng);
  const int start = g.flat(xv(x0));
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const int s = g.flat(yv(ys[i])), t = g.flat(yv(ys[j]));
      std::vector<int> parent(g.order(), -1);
      parent[s] = s;
      parent[start] = start;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent[t] < 0) {
        int a = q.front();
        q.pop();
        auto nb = g.flat_neighbors(a);
        std::shuffle(nb.begin(), nb.end(), rng);
        for (int b : nb)
          if (parent[b] < 0) {
            parent[b] = a;
            q.push(b);
          }
      }
      if (parent[t] < 0) continue;
      std::vector<Vertex> seq{xv(x0)};
      for (int v = t; v != s; v = parent[v]) seq.push_back(g.vertex(v));
      seq.push_back(g.vertex(s));
      return AltCycle::from_sequence(g, seq);
    }
  return std::nullopt;
}

TripleKey cycle_key(const BipartiteGraph& g, const AltCycle& c) {
  if (auto t = best_triple(g, c)) return key_of(*t);
  return {c.length(), 0, 0, 0, 0};
}

bool spans_x(const BipartiteGraph& g, const AltCycle& c) { return c.half_length() == g.n(); }

// Equal-length rewirings used to escape plateaus: two-chord exchanges and
// swapping an on-cycle vertex for an off-cycle twin of it.
std::vector<AltCycle> perturbations(const BipartiteGraph& g, const AltCycle& c) {
  std::vector<AltCycle> out;
  const int len = c.length();
  std::vector<Vertex> seq(c.vertices().begin(), c.vertices().end());
  for (int p = 0; p < len; p += 2)
    for (int q = 1; q < len; q += 2) {
      if (q == p + 1 || (q + 1) % len == p) continue;
      if (!g.adjacent(c.at(p), c.at(q)) || !g.adjacent(c.at(p + 1), c.at(q + 1))) continue;
      // c[p] c[q] c[q-1] ... c[p+1] c[q+1] ... c[p-1]
      std::vector<Vertex> next{c.at(p)};
      const int back = ((q - p) % len + len) % len;
      for (int k = 0; k < back; ++k) next.push_back(c.at(q - k));
      for (int r = q + 1; c.at(r) != c.at(p); ++r) next.push_back(c.at(r));
      if (auto cyc = AltCycle::try_from_sequence(g, next)) out.push_back(*cyc);
    }
  for (int p = 0; p < len; ++p) {
    const Vertex v = c.at(p), a = c.at(p - 1), b = c.at(p + 1);
    const int bound = v.is_x() ? g.n() : g.m();
    for (int w = 0; w < bound; ++w) {
      const Vertex cand{v.side, w};
      if (c.contains(cand) || !g.adjacent(cand, a) || !g.adjacent(cand, b)) continue;
      auto next = seq;
      next[p] = cand;
      if (auto cyc = AltCycle::try_from_sequence(g, next)) out.push_back(*cyc);
    }
  }
  return out;
}

}  // namespace

std::optional<Triple> best_triple(const BipartiteGraph& g, const AltCycle& c) {
  std::optional<Triple> best;
  for (int x = 0; x < g.n(); ++x) {
    if (c.contains(xv(x))) continue;
    Triple t = triple_stats(g, c, x, max_fan(g, x, c));
    if (!best || triple_compare(t, *best) == Better::first) best = std::move(t);
  }
  return best;
}

std::optional<AltCycle> random_cycle(const BipartiteGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> xs(g.n());
  std::iota(xs.begin(), xs.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  for (int x : xs)
    if (auto c = cycle_through(g, x, rng)) return c;
  return std::nullopt;
}

ImproveResult improve_search(const BipartiteGraph& g, std::int64_t budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto first = random_cycle(g, rng());
  if (!first) throw Error("improve_search: the graph has no cycle");
  ImproveResult res{*first};
  AltCycle cur = *first;
  TripleKey cur_key = cycle_key(g, cur);
  int stagnant = 0;

  auto keep_best = [&](const AltCycle& c) {
    if (c.length() > res.best.length()) res.best = c;
  };

  while (!spans_x(g, res.best)) {
    if (res.rounds >= budget) {
      res.budget_exhausted = true;
      break;
    }
    ++res.rounds;

    auto bt = best_triple(g, cur);
    auto moves = propose_moves(g, *bt);
    for (auto& mv : extension_moves(g, *bt)) moves.push_back(std::move(mv));

    const MoveResult* chosen = nullptr;
    for (const auto& mv : moves)
      if (mv.guarantee == Guarantee::strictly_longer &&
          (!chosen || mv.new_cycle.length() > chosen->new_cycle.length()))
        chosen = &mv;
    TripleKey chosen_key;
    if (chosen) {
      chosen_key = cycle_key(g, chosen->new_cycle);
    } else {
      for (const auto& mv : moves) {
        if (mv.guarantee != Guarantee::equal_length) continue;
        TripleKey k = cycle_key(g, mv.new_cycle);
        if (triple_compare(k, chosen ? chosen_key : cur_key) == Better::first) {
          chosen = &mv;
          chosen_key = k;
        }
      }
    }

    if (chosen) {
      res.trace.push_back({res.rounds, chosen->kind, cur_key, chosen_key});
      cur = chosen->new_cycle;
      cur_key = chosen_key;
      stagnant = 0;
      keep_best(cur);
      continue;
    }

    if (++stagnant >= kStagnationLimit) {
      auto fresh = random_cycle(g, rng());
      cur = *fresh;
      cur_key = cycle_key(g, cur);
      stagnant = 0;
      ++res.restarts;
      res.trace.push_back({res.rounds, "restart", cur_key, cur_key});
      keep_best(cur);
      continue;
    }
    auto options = perturbations(g, cur);
    if (options.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    AltCycle next = options[pick(rng)];
    TripleKey next_key = cycle_key(g, next);
    res.trace.push_back({res.rounds, "perturb", cur_key, next_key});
    cur = std::move(next);
    cur_key = next_key;
  }
  res.spans_x = spans_x(g, res.best);
  return res;
}

}  // namespace berge
