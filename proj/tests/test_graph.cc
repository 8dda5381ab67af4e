#include <doctest.h>

#include <map>
#include <random>

#include "berge/canonical.hh"
#include "berge/constructions.hh"
#include "berge/cycle.hh"
#include "berge/error.hh"
#include "berge/graph.hh"
#include "berge/io.hh"
#include "oracles.hh"

using namespace berge;

namespace {

BipartiteGraph complete(int n, int m) {
  std::vector<std::vector<int>> rows(n);
  for (auto& r : rows)
    for (int y = 0; y < m; ++y) r.push_back(y);
  return BipartiteGraph(m, rows);
}

}  // namespace

TEST_CASE("validate reports range and duplicate problems") {
  CHECK(validate(complete(2, 2)).empty());
  CHECK(validate(BipartiteGraph(2, {{0, 2}, {1}})).size() == 1);
  CHECK(validate(BipartiteGraph(2, {{0, 0}, {1}})).size() == 1);
  CHECK_THROWS_AS(BipartiteGraph::checked(2, {{3}}), Error);
}

TEST_CASE("degree profile") {
  auto p = degree_profile(complete(2, 3));
  CHECK(p.x_degrees == std::vector<int>{3, 3});
  CHECK(p.y_degrees == std::vector<int>{2, 2, 2});
  CHECK(p.min_x_degree == 3);
  CHECK(p.min_degree == 2);

  auto g3 = build_gk({2, {2, 2, 2}, 6}).graph;
  CHECK(degree_profile(g3).min_x_degree == 6);

  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    auto g = oracle::random_graph(5, 7, 0.4, rng);
    auto prof = degree_profile(g);
    int sx = 0, sy = 0;
    for (int x = 0; x < 5; ++x) {
      int d = 0;
      for (int y = 0; y < 7; ++y) d += g.adjacent(x, y);
      CHECK(prof.x_degrees[x] == d);
      sx += d;
    }
    for (int y = 0; y < 7; ++y) {
      int d = 0;
      for (int x = 0; x < 5; ++x) d += g.adjacent(x, y);
      CHECK(prof.y_degrees[y] == d);
      sy += d;
    }
    CHECK(sx == sy);
  }
}

TEST_CASE("incidence graph and inverse") {
  Hypergraph h{2, {{0, 1}}};
  auto g = incidence_graph(h);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.adjacent(0, 0));
  CHECK(g.adjacent(1, 0));
  CHECK(to_hypergraph(g) == h);

  Hypergraph empty_edges{3, {}};
  auto iso = incidence_graph(empty_edges);
  CHECK(iso.n() == 3);
  CHECK(iso.edge_count() == 0);

  Hypergraph with_empty{2, {{}, {0, 1}, {0, 1}}};
  auto back = to_hypergraph(incidence_graph(with_empty));
  CHECK(same_up_to_edge_order(back, with_empty));
  CHECK(back.edges[0].empty());

  auto c6 = build_con4(6).hypergraph;
  auto inc = incidence_graph(c6);
  CHECK(inc.n() == 6);
  CHECK(inc.m() == 9);

  auto g4 = build_gk({3, {1, 1, 1, 1}, 4}).graph;
  CHECK(incidence_graph(to_hypergraph(g4)) == g4);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    Hypergraph r;
    r.vertex_count = 5;
    std::uniform_int_distribution<int> mask(0, 31);
    for (int e = 0; e < 4; ++e) {
      int bits = mask(rng);
      std::vector<int> edge;
      for (int v = 0; v < 5; ++v)
        if (bits >> v & 1) edge.push_back(v);
      r.edges.push_back(edge);
    }
    CHECK(same_up_to_edge_order(to_hypergraph(incidence_graph(r)), r));
  }
}

TEST_CASE("hypergraph validation") {
  CHECK(validate(Hypergraph{3, {{0, 2}, {}}}).empty());
  CHECK_FALSE(validate(Hypergraph{3, {{0, 3}}}).empty());
  CHECK_FALSE(validate(Hypergraph{3, {{2, 0}}}).empty());
}

TEST_CASE("canonical encoding basics") {
  BipartiteGraph a(2, {{0}, {0, 1}});
  BipartiteGraph b(2, {{0, 1}, {1}});
  CHECK(canonical_encode(a).text == canonical_encode(b).text);
  CHECK(canonical_encode(complete(2, 2)).text != canonical_encode(a).text);
  auto enc = canonical_encode(a).text;
  CHECK(format_bg(parse_bg(enc)) == enc);
  CHECK(is_canonical(parse_bg(enc)));
}

TEST_CASE("canonical encoding agrees with brute force on every graph up to 3x3") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::map<std::string, std::string> canon_to_brute;
      std::map<std::string, std::string> brute_to_canon;
      for (int mask = 0; mask < (1 << (n * m)); ++mask) {
        std::vector<std::vector<int>> rows(n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < m; ++y)
            if (mask >> (x * m + y) & 1) rows[x].push_back(y);
        BipartiteGraph g(m, rows);
        auto canon = canonical_encode(g).text;
        auto brute = oracle::brute_iso_key(g);
        auto [it1, fresh1] = canon_to_brute.emplace(canon, brute);
        auto [it2, fresh2] = brute_to_canon.emplace(brute, canon);
        CHECK(it1->second == brute);
        CHECK(it2->second == canon);
      }
    }
}

TEST_CASE("canonical encoding is invariant under random relabeling") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + rep % 5, m = 2 + (rep / 5) % 5;
    auto g = oracle::random_graph(n, m, 0.5, rng);
    std::vector<int> px(n), py(m);
    std::iota(px.begin(), px.end(), 0);
    std::iota(py.begin(), py.end(), 0);
    std::shuffle(px.begin(), px.end(), rng);
    std::shuffle(py.begin(), py.end(), rng);
    std::vector<std::vector<int>> rows(n);
    for (int x = 0; x < n; ++x) {
      for (int y : g.x_neighbors(x)) rows[px[x]].push_back(py[y]);
      std::sort(rows[px[x]].begin(), rows[px[x]].end());
    }
    BipartiteGraph h(m, rows);
    CHECK(canonical_encode(g).text == canonical_encode(h).text);
    if (n <= 4 && m <= 4)
      CHECK((oracle::brute_iso_key(g) == oracle::brute_iso_key(h)));
  }
}

TEST_CASE("bg and hg round trips") {
  BipartiteGraph g(4, {{0, 3}, {}, {1, 2, 3}});
  CHECK(parse_bg(format_bg(g)) == g);
  CHECK(format_bg(g) == "3 4\n0 3\n\n1 2 3\n");
  Hypergraph h{4, {{0, 1}, {}, {1, 2, 3}}};
  CHECK(parse_hg(format_hg(h)) == h);
  CHECK_THROWS_AS(parse_bg("2 2\n0 5\n1\n"), Error);
  CHECK_THROWS_AS(parse_bg("2 2\n1 0\n1\n"), Error);
  CHECK_THROWS_AS(parse_bg("2 2\n0\n1\n1\n"), Error);
  CHECK_THROWS_AS(parse_bg("x y\n"), Error);
  CHECK_THROWS_AS(parse_hg("2 1\n0 2\n"), Error);
}

TEST_CASE("alternating cycle") {
  auto k22 = complete(2, 2);
  auto c = AltCycle::from_sequence(k22, {xv(0), yv(0), xv(1), yv(1)});
  CHECK(c.length() == 4);
  CHECK(c.half_length() == 2);
  CHECK(c.at(4) == xv(0));
  CHECK(c.at(-1) == yv(1));
  CHECK(c.position(yv(1)) == 3);

  auto rotated = AltCycle::from_sequence(k22, {yv(0), xv(1), yv(1), xv(0)});
  CHECK(rotated.vertices()[0].is_x());
  CHECK(rotated.normalized() == c.normalized());
  CHECK(c.reversed().normalized() == c.normalized());
  CHECK(c.reversed().at(1) == yv(1));

  CHECK_THROWS_AS(AltCycle::from_sequence(k22, {xv(0), yv(0)}), Error);
  CHECK_THROWS_AS(AltCycle::from_sequence(k22, {xv(0), xv(1), yv(0), yv(1)}), Error);
  CHECK_FALSE(AltCycle::try_from_sequence(BipartiteGraph(2, {{0}, {0, 1}}),
                                          {xv(0), yv(0), xv(1), yv(1)}));
  CHECK(parse_vertices(format_vertices(c.vertices())) ==
        std::vector<Vertex>(c.vertices().begin(), c.vertices().end()));
}

TEST_CASE("components off a cycle") {
  auto k22 = complete(2, 2);
  auto c = AltCycle::from_sequence(k22, {xv(0), yv(0), xv(1), yv(1)});
  CHECK(components_off_cycle(k22, c).empty());

  auto g3 = build_gk({2, {2, 2, 2}, 6}).graph;
  // x0..x3 cover groups 1 and 2 through connectors y12, y13.
  auto cyc = AltCycle::from_sequence(
      g3, {xv(0), yv(0), xv(1), yv(12), xv(2), yv(4), xv(3), yv(13)});
  auto comps = components_off_cycle(g3, cyc);
  std::vector<bool> removed(g3.order(), false);
  for (Vertex v : cyc.vertices()) removed[g3.flat(v)] = true;
  auto flood = oracle::flood_components(g3, removed);
  REQUIRE(comps.size() == flood.size());
  std::vector<std::vector<int>> flat;
  for (const auto& comp : comps) {
    std::vector<int> ids;
    for (Vertex v : comp) ids.push_back(g3.flat(v));
    std::sort(ids.begin(), ids.end());
    flat.push_back(ids);
  }
  std::sort(flat.begin(), flat.end());
  std::sort(flood.begin(), flood.end());
  CHECK(flat == flood);
  bool group3 = false;
  for (const auto& comp : comps)
    if (std::find(comp.begin(), comp.end(), xv(4)) != comp.end() &&
        std::find(comp.begin(), comp.end(), xv(5)) != comp.end())
      group3 = true;
  CHECK(group3);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    auto [g, cy] = oracle::random_graph_with_cycle(6, 7, 3, 0.25, rng);
    auto got = components_off_cycle(g, cy);
    std::vector<bool> rem(g.order(), false);
    for (Vertex v : cy.vertices()) rem[g.flat(v)] = true;
    auto want = oracle::flood_components(g, rem);
    CHECK(got.size() == want.size());
    std::size_t total = 0;
    for (const auto& comp : got) total += comp.size();
    CHECK(total == static_cast<std::size_t>(g.order() - cy.length()));
  }
}
