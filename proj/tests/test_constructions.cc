#include <doctest.h>

#include "berge/connectivity.hh"
#include "berge/constructions.hh"
#include "berge/error.hh"

using namespace berge;

TEST_CASE("G_k sizes and degrees") {
  auto g3 = build_gk({2, {2, 2, 2}, 6});
  CHECK(g3.graph.n() == 6);
  CHECK(g3.graph.m() == 14);
  CHECK(g3.cert.claimed_longest == 8);
  auto p = degree_profile(g3.graph);
  for (int d : p.x_degrees) CHECK(d == 6);

  auto g4 = build_gk({3, {1, 1, 1, 1}, 4});
  CHECK(g4.graph.m() == 7);
  CHECK(g4.cert.claimed_longest == 6);

  auto g5 = build_gk({4, {1, 1, 1, 1, 1}, 6});
  CHECK(g5.graph.m() == 14);
  CHECK_FALSE(g5.cert.claimed_longest);
}

TEST_CASE("G_k layout puts the connectors last") {
  auto g = build_gk({2, {2, 1, 1}, 4}).graph;
  // block size 2: group Y-blocks {0,1}, {2,3}, {4,5}; connectors 6, 7
  CHECK(g.x_neighbors(0) == std::vector<int>{0, 1, 6, 7});
  CHECK(g.x_neighbors(1) == std::vector<int>{0, 1, 6, 7});
  CHECK(g.x_neighbors(2) == std::vector<int>{2, 3, 6, 7});
  CHECK(g.x_neighbors(3) == std::vector<int>{4, 5, 6, 7});
}

TEST_CASE("G_k parameter validation") {
  CHECK_THROWS_AS(build_gk({2, {2, 2}, 6}), Error);
  CHECK_THROWS_AS(build_gk({2, {1, 2, 2}, 6}), Error);
  CHECK_THROWS_AS(build_gk({2, {2, 2, 0}, 6}), Error);
  CHECK_THROWS_AS(build_gk({3, {1, 1, 1, 1}, 3}), Error);
  CHECK_THROWS_AS(build_gk({1, {1, 1}, 3}), Error);
}

TEST_CASE("G_k invariants over a parameter sweep") {
  for (int k = 2; k <= 4; ++k)
    for (int delta = k + 1; delta <= k + 4; ++delta)
      for (int big = 1; big <= 3; ++big) {
        GkParams p{k, std::vector<int>(k + 1, 1), delta};
        p.parts[0] = big;
        auto inst = build_gk(p);
        const auto& g = inst.graph;
        CHECK(g.m() == (k + 1) * (delta - k) + k);
        for (int x = 0; x < g.n(); ++x) CHECK(g.x_neighbors(x).size() == std::size_t(delta));
        std::vector<bool> removed(g.order(), false);
        for (Vertex v : inst.cert.named_cut) removed[g.flat(v)] = true;
        CHECK(components_without(g, removed).size() == std::size_t(k + 1));
        CHECK(vertex_connectivity(g) <= k);
      }
}

TEST_CASE("G_4 with large parts is exactly 3-connected with no 2n-cycle") {
  for (int parts : {3, 4}) {
    for (int delta : {3 * parts + 1, 4 * parts}) {
      if (delta < 4 * parts) continue;
      auto g = build_gk({3, {parts, parts, parts, parts}, delta}).graph;
      CHECK(vertex_connectivity(g) == 3);
      CHECK(has_x_spanning_cycle(g).status == SearchStatus::none);
    }
  }
}

TEST_CASE("con4 sizes and degree formulas") {
  auto c6 = build_con4(6);
  CHECK(c6.v1_size == 4);
  CHECK(c6.v2_size == 2);
  CHECK(c6.hypergraph.edges.size() == 9);
  CHECK(c6.cert.claimed_min_x_degree == 3);

  auto c8 = build_con4(8);
  CHECK(c8.v1_size == 5);
  CHECK(c8.v2_size == 3);
  CHECK(c8.edge_size == 2);
  CHECK(c8.hypergraph.edges.size() == 16);

  CHECK_THROWS_AS(build_con4(3), Error);

  for (int n = 4; n <= 12; ++n) {
    auto c = build_con4(n);
    const auto& h = c.hypergraph;
    CHECK(validate(h).empty());
    std::vector<int> deg(h.vertex_count, 0);
    for (const auto& e : h.edges)
      for (int v : e) ++deg[v];
    for (int v = 0; v < h.vertex_count; ++v)
      CHECK(deg[v] == (v < c.v1_size ? c.v1_degree : c.v2_degree));
    CHECK(deg == c.cert.claimed_x_degrees);
    CHECK(*std::min_element(deg.begin(), deg.end()) == c.cert.claimed_min_x_degree);
    CHECK(static_cast<int>(h.edges.size()) == c.cert.claimed_m);
  }
}

TEST_CASE("certificates check out") {
  auto g4 = build_gk({3, {1, 1, 1, 1}, 4});
  auto r = check_certificate(g4.graph, g4.cert);
  CHECK(r.all_pass());
  bool saw_longest = false;
  for (const auto& c : r.checks)
    if (c.claim == "longest") {
      saw_longest = true;
      CHECK(c.actual == "6");
    }
  CHECK(saw_longest);

  auto g3 = build_gk({2, {2, 2, 2}, 6});
  CHECK(check_certificate(g3.graph, g3.cert).all_pass());

  auto bad = g4.cert;
  bad.claimed_m += 1;
  auto rb = check_certificate(g4.graph, bad);
  CHECK_FALSE(rb.all_pass());
  for (const auto& c : rb.checks) CHECK(c.pass == (c.claim != "m"));

  auto c6 = build_con4(6);
  CHECK(check_certificate(incidence_graph(c6.hypergraph), c6.cert).all_pass());
}

TEST_CASE("longest claim falls back to a decision when the budget is small") {
  auto g3 = build_gk({2, {2, 2, 2}, 6});
  auto r = check_certificate(g3.graph, g3.cert, 5);
  bool saw = false;
  for (const auto& c : r.checks)
    if (c.claim.rfind("longest", 0) == 0) {
      saw = true;
      CHECK(c.claim == "longest (decision only)");
    }
  CHECK(saw);
}
