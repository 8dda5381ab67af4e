// Runs every acceptance criterion at its stated size and time limit and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "berge/connectivity.hh"
#include "berge/constructions.hh"
#include "berge/cycle_search.hh"
#include "berge/enumerate.hh"
#include "berge/predicates.hh"
#include "berge/surgery.hh"
#include "berge/verify.hh"
#include "oracles.hh"

using namespace berge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks; a criterion passes when none were recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }

  std::string summary() const {
    std::ostringstream out;
    const auto& items = ok() ? notes_ : failures_;
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "; " : "") << items[i];
    return out.str();
  }

 private:
  std::vector<std::string> failures_, notes_;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int x_degree_on_cycle(const BipartiteGraph& g, const AltCycle& c, int x) {
  int d = 0;
  for (int y : g.x_neighbors(x)) d += c.contains(yv(y));
  return d;
}

void construction_certificates(Checks& ck) {
  {
    const auto start = Clock::now();
    auto g = build_gk({2, {2, 2, 2}, 6}).graph;
    auto prof = degree_profile(g);
    ck.expect(g.m() == 14, "k=2: m != 14");
    ck.expect(std::all_of(prof.x_degrees.begin(), prof.x_degrees.end(),
                          [](int d) { return d == 6; }),
              "k=2: X-degree != 6");
    ck.expect(is_k_connected(g, 2), "k=2: not 2-connected");
    auto lc = longest_cycle(g);
    ck.expect(lc.status == SearchStatus::found && lc.cycle && lc.cycle->length() == 8,
              "k=2: longest cycle != 8");
    const double t = seconds_since(start);
    ck.expect(t < 5.0, "k=2 took " + std::to_string(t) + " s");
    ck.note("G_2(2,2,2;6) m=14 longest 8");
  }
  {
    const auto start = Clock::now();
    auto g = build_gk({3, {1, 1, 1, 1}, 4}).graph;
    ck.expect(g.m() == 7, "k=3: m != 7");
    auto lc = longest_cycle(g);
    ck.expect(lc.status == SearchStatus::found && lc.cycle && lc.cycle->length() == 6,
              "k=3: longest cycle != 6");
    ck.expect(oracle::naive_longest_cycle(g) == 6, "k=3: enumeration disagrees");
    const double t = seconds_since(start);
    ck.expect(t < 5.0, "k=3 took " + std::to_string(t) + " s");
    ck.note("G_3(1,1,1,1;4) m=7 longest 6");
  }
}

void sharpness_witness(Checks& ck) {
  auto g = build_gk({3, {3, 3, 3, 3}, 12}).graph;
  ck.expect(g.n() == 12, "n != 12");
  ck.expect(is_k_connected(g, 3), "not 3-connected");
  ck.expect(degree_profile(g).min_x_degree == 12, "min X-degree != 12");
  ck.expect(g.m() == 39, "m != 39");
  auto r = has_x_spanning_cycle(g);
  ck.expect(r.status != SearchStatus::budget_exceeded, "decision ran out of budget");
  ck.expect(r.status == SearchStatus::none, "found an X-spanning cycle");
  ck.note("G_3(3,3,3,3;12) 3-connected, m=39, no X-spanning cycle (" +
          std::to_string(r.nodes) + " nodes)");
}

void desk_scale_verification(Checks& ck) {
  VerifyOptions vo;
  vo.n_lo = vo.n_hi = 4;
  vo.m_lo = 4;
  vo.m_hi = 6;
  vo.delta = 4;
  vo.config = make_predicate("three_conn_quarter");
  vo.jobs = jobs();
  auto rep = verify_theorem(vo);
  ck.expect(rep.complete, "exhaustive run incomplete");
  ck.expect(rep.total.fail == 0, "exhaustive failures: " + std::to_string(rep.total.fail));
  ck.expect(rep.total.undecided == 0, "exhaustive undecided: " + std::to_string(rep.total.undecided));
  for (const auto& s : rep.spaces) ck.expect(!s.sampled, "space was sampled, not enumerated");
  ck.note("n=4 examined " + std::to_string(rep.total.examined) + ", pass " +
          std::to_string(rep.total.pass));

  for (int n : {5, 6}) {
    HuntOptions ho;
    ho.n = n;
    ho.delta = n;
    ho.m_lo = n;
    ho.m_hi = 4 * n - 10;
    ho.config = make_predicate("three_conn_quarter");
    ho.samples = 10000;
    ho.seed = 20 + n;
    ho.jobs = jobs();
    auto h = hunt(ho);
    const std::string tag = "n=" + std::to_string(n);
    ck.expect(h.tally.fail == 0, tag + " failures: " + std::to_string(h.tally.fail));
    ck.expect(h.accepted == ho.samples, tag + " accepted only " + std::to_string(h.accepted));
    ck.note(tag + " sampled " + std::to_string(h.accepted) + ", fail 0, undecided " +
            std::to_string(h.tally.undecided));
  }
}

void con4_check(Checks& ck) {
  for (int n : {6, 7}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    auto inst = build_con4(n);
    const auto& h = inst.hypergraph;
    const int v1 = (n + 3) / 2, v2 = (n - 2) / 2, s = (n + 3) / 4;
    const std::int64_t d1 = choose(v2, s - 1) + 1, d2 = v1 * choose(v2 - 1, s - 2);
    ck.expect(h.vertex_count == n, tag + "vertex count");
    std::vector<std::int64_t> deg(h.vertex_count, 0);
    for (const auto& e : h.edges)
      for (int v : e) ++deg[v];
    for (int v = 0; v < h.vertex_count; ++v)
      ck.expect(deg[v] == (v < v1 ? d1 : d2), tag + "degree of vertex " + std::to_string(v));
    ck.expect(*std::min_element(deg.begin(), deg.end()) == 3, tag + "min degree != 3");
    auto r = has_x_spanning_cycle(incidence_graph(h));
    ck.expect(r.status == SearchStatus::none, tag + "Hamiltonian Berge cycle not excluded");
    ck.note(tag + "min degree 3, no Hamiltonian Berge cycle");
  }
}

void crossing_bound(Checks& ck) {
  std::mt19937_64 rng(4242);
  int violations = 0, instances = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int half = 2 + rep % 6;
    auto [g, c] = oracle::random_graph_with_cycle(8, 8, half, 0.15 + 0.1 * (rep % 7), rng);
    auto xs = c.x_vertices();
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) j = (i + 1) % xs.size();
    const int a = static_cast<int>(oracle::naive_crossings(g, c, xs[i], xs[j]).size());
    const int lhs = x_degree_on_cycle(g, c, xs[i]) + x_degree_on_cycle(g, c, xs[j]);
    ++instances;
    if (2 * lhs > c.length() + 4 + 2 * a) ++violations;
  }
  ck.expect(violations == 0, std::to_string(violations) + " violations");
  ck.note(std::to_string(instances) + " instances, 0 violations");
}

void fan_flow_equivalence(Checks& ck) {
  std::mt19937_64 rng(1313);
  int instances = 0, three = 0, mismatches = 0, fans = 0;
  while (instances < 1000) {
    const int n = 5 + static_cast<int>(rng() % 4), m = 5 + static_cast<int>(rng() % 4);
    const int half = 2 + static_cast<int>(rng() % 3);
    auto [g, c] = oracle::random_graph_with_cycle(n, m, half, 0.35 + 0.05 * (rng() % 5), rng);
    if (!is_k_connected(g, 2)) continue;
    bool any = false;
    for (int x = 0; x < n; ++x) {
      if (c.contains(xv(x))) continue;
      any = true;
      ++fans;
      if (max_fan(g, x, c).size() != oracle::matrix_fan_flow(g, x, c)) ++mismatches;
    }
    if (!any) continue;
    ++instances;
    three += is_k_connected(g, 3);
  }
  ck.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  ck.expect(three > 0, "no 3-connected instance drawn");
  ck.note(std::to_string(instances) + " instances (" + std::to_string(three) +
          " 3-connected), " + std::to_string(fans) + " fans, exact match");
}

std::vector<int> lost_x(const AltCycle& before, const AltCycle& after) {
  std::vector<int> out;
  for (int x : before.x_vertices())
    if (!after.contains(xv(x))) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

void surgery_soundness(Checks& ck) {
  std::mt19937_64 rng(777);
  int fixtures = 0, moves = 0, bad = 0;
  while (fixtures < 1000) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int m = n + static_cast<int>(rng() % 4);
    auto g = oracle::random_min_degree_graph(n, m, 3, rng);
    if (!is_k_connected(g, 3)) continue;
    auto c = random_cycle(g, rng());
    if (!c) continue;
    auto t = best_triple(g, *c);
    if (!t) continue;
    ++fixtures;
    auto all = propose_moves(g, *t);
    for (auto& mv : extension_moves(g, *t)) all.push_back(std::move(mv));
    for (const auto& mv : all) {
      ++moves;
      const bool valid = validate_cycle(g, mv.new_cycle.vertices()).empty();
      const bool honored = mv.guarantee == Guarantee::strictly_longer
                               ? mv.new_cycle.length() > c->length()
                               : mv.new_cycle.length() == c->length();
      if (!valid || !honored || mv.sacrificed != lost_x(*c, mv.new_cycle)) ++bad;
    }
  }
  ck.expect(bad == 0, std::to_string(bad) + " unsound moves");
  ck.note(std::to_string(fixtures) + " fixtures, " + std::to_string(moves) + " moves sound");

  int instances = 0, spanned = 0;
  for (int n = 4; n <= 8; ++n)
    for (int rep = 0; rep < 30; ++rep) {
      const int delta = n + static_cast<int>(rng() % 2);
      const int m = delta + static_cast<int>(rng() % (3 * delta - 9));
      if (4 * delta < m + 10) continue;
      auto g = oracle::random_min_degree_graph(n, m, delta, rng);
      if (!is_k_connected(g, 3)) continue;
      ++instances;
      auto exact = has_x_spanning_cycle(g);
      ck.expect(exact.status == SearchStatus::found, "exact solver found no spanning cycle");
      auto res = improve_search(g, 20000, rng());
      const bool ok = res.spans_x && validate_cycle(g, res.best.vertices()).empty() &&
                      res.best.half_length() == n;
      spanned += ok;
    }
  ck.expect(instances >= 100, "only " + std::to_string(instances) + " hypothesis instances");
  ck.expect(spanned == instances, "improve_search spanned " + std::to_string(spanned) + "/" +
                                      std::to_string(instances));
  ck.note(std::to_string(spanned) + "/" + std::to_string(instances) +
          " hypothesis instances spanned");

  int sharp = 0;
  for (auto p : {GkParams{3, {1, 1, 1, 1}, 4}, GkParams{3, {2, 2, 2, 2}, 8},
                 GkParams{3, {3, 3, 3, 3}, 12}, GkParams{3, {3, 2, 2, 1}, 8},
                 GkParams{2, {2, 2, 2}, 6}, GkParams{2, {3, 3, 3}, 9}}) {
    auto g = build_gk(p).graph;
    auto res = improve_search(g, 500, 11);
    ck.expect(!res.spans_x, "claimed a spanning cycle in a sharpness instance");
    ++sharp;
  }
  ck.note(std::to_string(sharp) + " sharpness instances never spanned");
}

void enumeration_correctness(Checks& ck) {
  struct Case {
    int n, m, delta;
  };
  for (Case c : {Case{2, 2, 1}, Case{2, 3, 2}, Case{3, 3, 2}}) {
    const SpaceParams p{c.n, c.m, c.delta, 0};
    const std::int64_t got = count_classes(p);
    const int want = oracle::brute_class_count(c.n, c.m, c.delta);
    ck.expect(got == want, "(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," +
                               std::to_string(c.delta) + "): " + std::to_string(got) +
                               " vs " + std::to_string(want));
    ck.note("(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," +
            std::to_string(c.delta) + ")=" + std::to_string(got));
  }
  for (SpaceParams p : {SpaceParams{2, 2, 1, 0}, SpaceParams{2, 3, 2, 0}, SpaceParams{3, 3, 2, 0},
                        SpaceParams{4, 5, 2, 2}, SpaceParams{4, 6, 4, 0}}) {
    std::int64_t whole = 0;
    enumerate_space(p, [&](const BipartiteGraph&) {
      ++whole;
      return true;
    });
    for (int depth = 1; depth <= 3; ++depth) {
      std::int64_t joined = 0;
      for (const auto& prefix : shard_prefixes(p, depth))
        enumerate_shard(p, prefix, std::nullopt, [&](const Rows&) {
          ++joined;
          return true;
        });
      ck.expect(joined == whole, "shard union differs at depth " + std::to_string(depth));
    }
  }
  ck.note("shard unions equal unsharded totals");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Checks&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "construction certificates", 10.0, construction_certificates},
      {2, "sharpness witness", 600.0, sharpness_witness},
      {3, "desk-scale theorem verification", 1800.0, desk_scale_verification},
      {4, "con4 hypergraph check", 60.0, con4_check},
      {5, "crossing bound", 0.0, crossing_bound},
      {6, "fan and max-flow agree", 0.0, fan_flow_equivalence},
      {7, "surgery soundness", 0.0, surgery_soundness},
      {8, "enumeration and canonical form", 0.0, enumeration_correctness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checks ck;
    const auto start = Clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    if (c.limit_seconds > 0)
      ck.expect(t < c.limit_seconds, "over time limit of " + std::to_string(c.limit_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", t);
    std::cout << (ck.ok() ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << " [" << timing
              << "]: " << ck.summary() << std::endl;
    failed += !ck.ok();
  }
  return failed;
}
