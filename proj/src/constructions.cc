#include "berge/constructions.hh"

#include <algorithm>

#include "berge/connectivity.hh"
#include "berge/error.hh"

namespace berge {

std::vector<std::string> validate(const GkParams& p) {
  std::vector<std::string> problems;
  if (p.k < 2) problems.push_back("k must be at least 2");
  if (static_cast<int>(p.parts.size()) != p.k + 1)
    problems.push_back("expected k+1 = " + std::to_string(p.k + 1) + " parts, got " +
                       std::to_string(p.parts.size()));
  for (std::size_t j = 0; j < p.parts.size(); ++j) {
    if (p.parts[j] < 1) problems.push_back("part sizes must be at least 1");
    if (j > 0 && p.parts[j] > p.parts[j - 1])
      problems.push_back("part sizes must be non-increasing");
  }
  if (p.delta < p.k + 1) problems.push_back("delta must be at least k+1");
  return problems;
}

GkInstance build_gk(const GkParams& p) {
  if (auto problems = validate(p); !problems.empty())
    throw Error("invalid G_k parameters: " + problems.front());
  const int block = p.delta - p.k;
  const int parts = p.k + 1;
  const int connectors_from = parts * block;
  const int m = connectors_from + p.k;
  std::vector<std::vector<int>> rows;
  for (int j = 0; j < parts; ++j) {
    std::vector<int> row;
    for (int i = 0; i < block; ++i) row.push_back(j * block + i);
    for (int i = 0; i < p.k; ++i) row.push_back(connectors_from + i);
    for (int r = 0; r < p.parts[j]; ++r) rows.push_back(row);
  }
  GkInstance out{BipartiteGraph::checked(m, std::move(rows)), {}};
  auto& c = out.cert;
  c.construction = "gk";
  c.claimed_n = out.graph.n();
  c.claimed_m = m;
  c.claimed_min_x_degree = p.delta;
  c.claimed_x_degrees.assign(out.graph.n(), p.delta);
  if (p.k == 2 || p.k == 3) c.claimed_longest = 2 * (c.claimed_n - p.parts.back());
  // k connectors cannot link k+1 blocks into one closed walk.
  c.claims_no_x_spanning = true;
  for (int i = 0; i < p.k; ++i) c.named_cut.push_back(yv(connectors_from + i));
  c.claimed_cut_components = parts;
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Con4Instance build_con4(int n) {
  if (n < 4) throw Error("build_con4 needs n >= 4");
  Con4Instance out;
  out.v1_size = (n + 2 + 1) / 2;
  out.v2_size = (n - 2) / 2;
  out.edge_size = (n + 3) / 4;
  const int s = out.edge_size;
  auto& h = out.hypergraph;
  h.vertex_count = out.v1_size + out.v2_size;

  // All (s-1)-subsets of V2 in lexicographic order.
  std::vector<std::vector<int>> v2_subsets;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == s - 1) {
      v2_subsets.push_back(pick);
      return;
    }
    for (int v = from; v < h.vertex_count; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, out.v1_size);
  for (int v = 0; v < out.v1_size; ++v)
    for (const auto& rest : v2_subsets) {
      std::vector<int> e{v};
      e.insert(e.end(), rest.begin(), rest.end());
      h.edges.push_back(std::move(e));
    }
  std::vector<int> v1(out.v1_size);
  for (int v = 0; v < out.v1_size; ++v) v1[v] = v;
  h.edges.push_back(std::move(v1));

  out.v1_degree = static_cast<int>(binomial(out.v2_size, s - 1) + 1);
  out.v2_degree = static_cast<int>(out.v1_size * binomial(out.v2_size - 1, s - 2));

  auto& c = out.cert;
  c.construction = "con4";
  c.claimed_n = h.vertex_count;
  c.claimed_m = static_cast<int>(out.v1_size * binomial(out.v2_size, s - 1) + 1);
  for (int v = 0; v < h.vertex_count; ++v)
    c.claimed_x_degrees.push_back(v < out.v1_size ? out.v1_degree : out.v2_degree);
  c.claimed_min_x_degree =
      out.v2_size > 0 ? std::min(out.v1_degree, out.v2_degree) : out.v1_degree;
  c.claims_no_x_spanning = true;
  return out;
}

bool CertificateReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.pass; });
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

ClaimCheck equal_check(std::string claim, int expected, int actual) {
  return {std::move(claim), expected == actual, std::to_string(expected),
          std::to_string(actual)};
}

}  // namespace

CertificateReport check_certificate(const BipartiteGraph& g, const Certificate& cert,
                                    std::int64_t budget) {
  CertificateReport r;
  auto prof = degree_profile(g);
  r.checks.push_back(equal_check("n", cert.claimed_n, g.n()));
  r.checks.push_back(equal_check("m", cert.claimed_m, g.m()));
  r.checks.push_back(
      equal_check("min_x_degree", cert.claimed_min_x_degree, prof.min_x_degree));
  if (!cert.claimed_x_degrees.empty())
    r.checks.push_back({"x_degrees", cert.claimed_x_degrees == prof.x_degrees,
                        join(cert.claimed_x_degrees), join(prof.x_degrees)});

  if (!cert.named_cut.empty()) {
    std::vector<bool> removed(g.order(), false);
    bool in_range = true;
    for (Vertex v : cert.named_cut) {
      if (v.index < 0 || v.index >= (v.is_x() ? g.n() : g.m())) {
        in_range = false;
        continue;
      }
      removed[g.flat(v)] = true;
    }
    int parts = in_range ? static_cast<int>(components_without(g, removed).size()) : 0;
    bool ok = cert.claimed_cut_components > 0 ? parts == cert.claimed_cut_components
                                              : parts >= 2;
    r.checks.push_back({"cut_components", ok,
                        cert.claimed_cut_components > 0
                            ? std::to_string(cert.claimed_cut_components)
                            : ">=2",
                        std::to_string(parts)});
    const int kappa = vertex_connectivity(g);
    const int ceiling = static_cast<int>(cert.named_cut.size());
    r.checks.push_back({"connectivity_ceiling", kappa <= ceiling,
                        "<=" + std::to_string(ceiling), std::to_string(kappa)});
  }

  if (cert.claimed_longest) {
    const int claimed = *cert.claimed_longest;
    auto res = longest_cycle(g, budget);
    if (res.status == SearchStatus::budget_exceeded) {
      auto longer = find_cycle_at_least(g, claimed / 2 + 1, budget);
      const bool seen = res.cycle && res.cycle->length() >= claimed;
      if (longer.status == SearchStatus::none) {
        r.checks.push_back({"longest (decision only)", seen,
                            std::to_string(claimed),
                            seen ? "no longer cycle; claimed length attained"
                                 : "no longer cycle; claimed length not reached"});
      } else {
        r.checks.push_back({"longest (decision only)", false, std::to_string(claimed),
                            longer.status == SearchStatus::found ? "longer cycle exists"
                                                                 : "undecided"});
      }
    } else {
      const int actual = res.cycle ? res.cycle->length() : 0;
      r.checks.push_back(equal_check("longest", claimed, actual));
    }
  }

  if (cert.claims_no_x_spanning) {
    auto res = has_x_spanning_cycle(g, budget);
    r.checks.push_back({"no_x_spanning_cycle", res.status == SearchStatus::none,
                        "none", to_string(res.status)});
  }
  return r;
}

}  // namespace berge
