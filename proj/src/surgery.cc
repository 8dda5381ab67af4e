#include "berge/surgery.hh"

#include <algorithm>

#include "berge/cycle_search.hh"
#include "berge/error.hh"

namespace berge {

Vertex successor(const AltCycle& c, Vertex u, Step which) {
  const int p = c.position(u);
  if (p < 0) throw Error("successor: " + to_string(u) + " is not on the cycle");
  const bool want_x = which == Step::x_plus || which == Step::x_minus;
  const int dir = (which == Step::x_plus || which == Step::y_plus) ? 1 : -1;
  // Sides alternate, so the answer is one or two steps away.
  Vertex v = c.at(p + dir);
  if (v.is_x() != want_x) v = c.at(p + 2 * dir);
  return v;
}

int cycle_degree(const BipartiteGraph& g, const AltCycle& c, Vertex v) {
  int d = 0;
  if (v.is_x()) {
    for (int y : g.x_neighbors(v.index)) d += c.contains(yv(y));
  } else {
    for (int x : g.y_neighbors(v.index)) d += c.contains(xv(x));
  }
  return d;
}

Triple triple_stats(const BipartiteGraph& g, const AltCycle& c, int x, const Fan& f) {
  if (x < 0 || x >= g.n()) throw Error("triple_stats: apex out of range");
  if (c.contains(xv(x))) throw Error("triple_stats: apex lies on the cycle");
  if (f.apex != x) throw Error("triple_stats: fan has a different apex");
  if (auto problems = validate_fan(g, c, f); !problems.empty())
    throw Error("triple_stats: invalid fan: " + problems.front());

  Triple t{c, x, f};
  t.ell = c.half_length();
  t.t = f.size();
  t.t_y = f.y_target_count();
  t.t_x = t.t - t.t_y;
  t.fan_size = f.vertex_count();
  for (const auto& comp : components_off_cycle(g, c))
    if (std::binary_search(comp.begin(), comp.end(), xv(x))) t.component = comp;
  t.d_size = static_cast<int>(t.component.size());

  std::vector<bool> in_d(g.order(), false);
  for (Vertex v : t.component) in_d[g.flat(v)] = true;
  for (Vertex v : c.vertices()) {
    if (std::find(f.targets.begin(), f.targets.end(), v) != f.targets.end())
      t.targets.push_back(v);
    for (int w : g.flat_neighbors(g.flat(v)))
      if (in_d[w]) {
        t.neighbors.push_back(v);
        break;
      }
  }
  t.t_tilde = static_cast<int>(t.neighbors.size());
  return t;
}

TripleKey key_of(const Triple& t) {
  return {t.cycle.length(), t.t, t.t_y, t.fan_size, t.d_size};
}

std::string to_string(const TripleKey& k) {
  return "(" + std::to_string(k.length) + "," + std::to_string(k.t) + "," +
         std::to_string(k.t_y) + "," + std::to_string(k.fan_size) + "," +
         std::to_string(k.d_size) + ")";
}

Better triple_compare(const TripleKey& a, const TripleKey& b) {
  // Larger is better for the first three fields, smaller for the last two.
  const int av[5] = {a.length, a.t, a.t_y, -a.fan_size, -a.d_size};
  const int bv[5] = {b.length, b.t, b.t_y, -b.fan_size, -b.d_size};
  for (int i = 0; i < 5; ++i) {
    if (av[i] > bv[i]) return Better::first;
    if (av[i] < bv[i]) return Better::second;
  }
  return Better::tie;
}

Better triple_compare(const Triple& a, const Triple& b) {
  return triple_compare(key_of(a), key_of(b));
}

std::vector<int> crossings(const BipartiteGraph& g, const AltCycle& c, int x1, int x2) {
  const int p1 = c.position(xv(x1)), p2 = c.position(xv(x2));
  if (p1 < 0 || p2 < 0) throw Error("crossings: vertex not on the cycle");
  if (x1 == x2) throw Error("crossings: vertices must be distinct");
  const int len = c.length();
  std::vector<int> out;
  // Walk clockwise from x1; X-vertices met before x2 lie in the order
  // x1, x3, x2, the rest in the order x1, x2, x3.
  bool before_x2 = true;
  for (int k = 2; k < len; k += 2) {
    const int p = p1 + k;
    const Vertex v = c.at(p);
    if (v.index == x2) {
      before_x2 = false;
      continue;
    }
    const Vertex after = c.at(p + 1), prev = c.at(p - 1);
    const bool hit = before_x2 ? g.adjacent(xv(x1), after) && g.adjacent(xv(x2), prev)
                               : g.adjacent(xv(x1), prev) && g.adjacent(xv(x2), after);
    if (hit) out.push_back(v.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> common_outside_neighbors(const BipartiteGraph& g, const AltCycle& c,
                                          int u, int v) {
  std::vector<int> out;
  for (int y : g.x_neighbors(u))
    if (g.adjacent(v, y) && !c.contains(yv(y))) out.push_back(y);
  return out;
}

GoodSetVerdict is_good_set(const BipartiteGraph& g, const AltCycle& c, int x,
                           const std::vector<int>& w,
                           const std::vector<std::vector<int>>& blocks) {
  for (int v : w)
    if (!c.contains(xv(v))) throw Error("is_good_set: x" + std::to_string(v) + " is off the cycle");
  std::vector<int> flat;
  for (const auto& b : blocks) {
    if (b.size() < 2) throw Error("is_good_set: blocks need at least two members");
    flat.insert(flat.end(), b.begin(), b.end());
  }
  std::vector<int> sorted_w = w;
  std::sort(flat.begin(), flat.end());
  std::sort(sorted_w.begin(), sorted_w.end());
  if (flat != sorted_w) throw Error("is_good_set: blocks do not partition W");

  GoodSetVerdict out;
  const int dx = cycle_degree(g, c, xv(x));
  if (dx > static_cast<int>(w.size())) {
    out.good = false;
    out.clause = 1;
    out.detail = "d_C(x) = " + std::to_string(dx) + " exceeds |W| = " + std::to_string(w.size());
    return out;
  }
  std::vector<int> all{x};
  all.insert(all.end(), w.begin(), w.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!common_outside_neighbors(g, c, all[i], all[j]).empty()) {
        out.good = false;
        out.clause = 2;
        out.pair = {all[i], all[j]};
        out.detail = "x" + std::to_string(all[i]) + " and x" + std::to_string(all[j]) +
                     " share an off-cycle neighbour";
        return out;
      }
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const auto cr = crossings(g, c, b[i], b[j]);
        if (cr.size() > 1) {
          out.good = false;
          out.clause = 3;
          out.pair = {b[i], b[j]};
          out.detail = "x" + std::to_string(b[i]) + " and x" + std::to_string(b[j]) +
                       " cross at " + std::to_string(cr.size()) + " vertices";
          return out;
        }
      }
  return out;
}

bool is_two_rich(const BipartiteGraph& g, const AltCycle& c, const std::vector<Vertex>& d,
                 const std::vector<Vertex>& connectors) {
  for (std::size_t i = 0; i < connectors.size(); ++i)
    for (std::size_t j = i + 1; j < connectors.size(); ++j) {
      auto p = path_through_component(g, c, d, connectors[i], connectors[j], true);
      if (!p) return false;
      int xs = 0;
      for (std::size_t k = 1; k + 1 < p->size(); ++k) xs += (*p)[k].is_x();
      if (xs < 2) return false;
    }
  return true;
}

SegmentView::SegmentView(const AltCycle& c, std::vector<Vertex> connectors) {
  if (connectors.size() != 3) throw Error("SegmentView: needs exactly three connectors");
  std::vector<int> pos;
  for (Vertex v : connectors) {
    int p = c.position(v);
    if (p < 0) throw Error("SegmentView: " + to_string(v) + " is not on the cycle");
    pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw Error("SegmentView: connectors must be distinct");
  for (int i = 0; i < 3; ++i) {
    u_.push_back(c.at(pos[i]));
    const int end = i == 2 ? pos[0] + c.length() : pos[i + 1];
    std::vector<Vertex> arc;
    for (int p = pos[i] + 1; p < end; ++p) arc.push_back(c.at(p));
    seg_.push_back(std::move(arc));
  }
}

std::vector<int> SegmentView::segment_x(int i) const {
  std::vector<int> out;
  for (Vertex v : segment(i))
    if (v.is_x()) out.push_back(v.index);
  return out;
}

std::vector<int> SegmentView::segment_y(int i) const {
  std::vector<int> out;
  for (Vertex v : segment(i))
    if (v.is_y()) out.push_back(v.index);
  return out;
}

namespace {

std::optional<int> pick(const std::vector<int>& fwd, const std::vector<int>& back, int j) {
  if (j > 0 && j <= static_cast<int>(fwd.size())) return fwd[j - 1];
  if (j < 0 && -j <= static_cast<int>(back.size())) return back[back.size() + j];
  return std::nullopt;
}

}  // namespace

std::optional<int> SegmentView::x(int i, int j) const {
  return pick(segment_x(i), segment_x(i - 1), j);
}

std::optional<int> SegmentView::y(int i, int j) const {
  return pick(segment_y(i), segment_y(i - 1), j);
}

SegmentView segment_view(const Triple& t) {
  if (t.t_tilde != 3)
    throw Error("segment_view: needs exactly three connectors, found " +
                std::to_string(t.t_tilde));
  return SegmentView(t.cycle, t.neighbors);
}

const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::short_type: return "short";
    case ConfigKind::medium_type: return "medium";
    case ConfigKind::long_type: return "long";
  }
  return "?";
}

std::vector<ConfigType> classify_config_types(const BipartiteGraph& g, const AltCycle& c,
                                              const SegmentView& seg) {
  std::vector<ConfigType> out;
  for (int i = 1; i <= 3; ++i) {
    const std::pair<std::optional<int>, std::optional<int>> pairs[3] = {
        {seg.x(i, -1), seg.x(i, 1)},
        {seg.x(i, 1), seg.x(i + 1, -1)},
        {seg.x(i, -1), seg.x(i + 1, 1)},
    };
    const ConfigKind kinds[3] = {ConfigKind::short_type, ConfigKind::medium_type,
                                 ConfigKind::long_type};
    for (int k = 0; k < 3; ++k) {
      const auto& [a, b] = pairs[k];
      if (!a || !b || *a == *b) {
        out.push_back({i, kinds[k], true});
        continue;
      }
      if (!common_outside_neighbors(g, c, *a, *b).empty()) out.push_back({i, kinds[k], false});
    }
  }
  return out;
}

bool is_abundant(const BipartiteGraph& g, const AltCycle& c, const SegmentView& seg, int i) {
  const auto xs = seg.segment_x(i);
  if (xs.size() <= 2) return true;
  const int first = xs.front(), last = xs.back();
  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    if (common_outside_neighbors(g, c, xs[k], first).empty()) return false;
    if (common_outside_neighbors(g, c, xs[k], last).empty()) return false;
  }
  return true;
}

const char* to_string(Guarantee g) {
  return g == Guarantee::strictly_longer ? "strictly longer" : "equal length, better triple candidate";
}

}  // namespace berge
