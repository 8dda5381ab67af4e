#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "berge/cycle_search.hh"
#include "berge/error.hh"
#include "berge/surgery.hh"

namespace berge {
namespace {

// Thrown while assembling a pattern whose named vertex or path does not
// exist; the pattern is then skipped.
struct Missing {};

// Off-cycle common neighbours tried per CON slot of a pattern.
constexpr int kConChoices = 3;

class Builder {
 public:
  explicit Builder(const AltCycle& c) : c_(c) {}

  Builder& v(Vertex w) {
    if (seq_.empty() || seq_.back() != w) seq_.push_back(w);
    return *this;
  }
  // C[a,b]: clockwise from a to b.
  Builder& arc(Vertex a, Vertex b) { return walk(a, b, 1); }
  // C^-[a,b]: counterclockwise from a to b.
  Builder& arc_ccw(Vertex a, Vertex b) { return walk(a, b, -1); }
  Builder& path(const std::vector<Vertex>& p) {
    for (Vertex w : p) v(w);
    return *this;
  }
  std::vector<Vertex> finish() {
    if (seq_.size() > 1 && seq_.back() == seq_.front()) seq_.pop_back();
    return seq_;
  }

 private:
  Builder& walk(Vertex a, Vertex b, int dir) {
    int pa = c_.position(a), pb = c_.position(b);
    if (pa < 0 || pb < 0) throw Missing{};
    const int len = c_.length();
    const int steps = ((dir * (pb - pa)) % len + len) % len;
    for (int k = 0; k <= steps; ++k) v(c_.at(pa + dir * k));
    return *this;
  }

  const AltCycle& c_;
  std::vector<Vertex> seq_;
};

class Generator {
 public:
  Generator(const BipartiteGraph& g, const Triple& t, const AltCycle& c,
            std::vector<MoveResult>& out, std::set<std::pair<std::string, std::vector<Vertex>>>& seen)
      : g_(g), t_(t), c_(c), out_(out), seen_(seen) {}

  const BipartiteGraph& graph() const { return g_; }
  const AltCycle& cycle() const { return c_; }
  const Triple& triple() const { return t_; }

  Vertex xp(Vertex u) const { return successor(c_, on(u), Step::x_plus); }
  Vertex xm(Vertex u) const { return successor(c_, on(u), Step::x_minus); }
  Vertex yp(Vertex u) const { return successor(c_, on(u), Step::y_plus); }
  Vertex ym(Vertex u) const { return successor(c_, on(u), Step::y_minus); }

  // F[a,b]
  std::vector<Vertex> fan(Vertex a, Vertex b) const {
    if (a == b || !fan_contains(t_.fan, a) || !fan_contains(t_.fan, b)) throw Missing{};
    return fan_path(t_.fan, a, b);
  }

  // P_D[a,b]
  std::vector<Vertex> dpath(Vertex a, Vertex b, const std::vector<Vertex>& avoid = {}) {
    if (a == b) throw Missing{};
    std::optional<std::vector<Vertex>> p;
    if (avoid.empty()) {
      const auto key = std::minmax(a, b);
      auto it = dcache_.find(key);
      if (it == dcache_.end())
        it = dcache_.emplace(key, path_through_component(g_, c_, t_.component, key.first,
                                                         key.second, true))
                 .first;
      p = it->second;
      if (p && a != key.first) std::reverse(p->begin(), p->end());
    } else {
      p = path_through_component(g_, c_, t_.component, a, b, true, avoid);
    }
    if (!p) throw Missing{};
    return *p;
  }

  // A few CONs of two X-vertices; empty when either is missing.
  std::vector<Vertex> cons(Vertex a, Vertex b) const {
    std::vector<Vertex> out;
    if (!a.is_x() || !b.is_x() || a == b) return out;
    for (int y : common_outside_neighbors(g_, c_, a.index, b.index)) {
      out.push_back(yv(y));
      if (static_cast<int>(out.size()) == kConChoices) break;
    }
    return out;
  }

  void emit(const std::string& kind, const std::function<void(Builder&)>& pattern,
            const std::vector<Vertex>& expendable = {}) {
    std::vector<Vertex> seq;
    try {
      Builder b(c_);
      pattern(b);
      seq = b.finish();
    } catch (const Missing&) {
      return;
    }
    auto fresh = AltCycle::try_from_sequence(g_, std::move(seq));
    if (!fresh || fresh->length() < c_.length()) return;
    std::vector<int> lost;
    for (int x : c_.x_vertices())
      if (!fresh->contains(xv(x))) {
        if (std::find(expendable.begin(), expendable.end(), xv(x)) == expendable.end())
          return;
        lost.push_back(x);
      }
    auto norm = fresh->normalized();
    if (norm == c_.normalized() || !seen_.insert({kind, norm}).second) return;
    std::sort(lost.begin(), lost.end());
    out_.push_back({*fresh, kind,
                    fresh->length() > c_.length() ? Guarantee::strictly_longer
                                                  : Guarantee::equal_length,
                    lost});
  }

  void emit_any(const std::string& kind, const std::function<void(Builder&)>& pattern) {
    std::vector<Vertex> seq;
    try {
      Builder b(c_);
      pattern(b);
      seq = b.finish();
    } catch (const Missing&) {
      return;
    }
    auto fresh = AltCycle::try_from_sequence(g_, std::move(seq));
    if (!fresh || fresh->length() <= c_.length()) return;
    auto norm = fresh->normalized();
    if (!seen_.insert({kind, norm}).second) return;
    std::vector<int> lost;
    for (int x : c_.x_vertices())
      if (!fresh->contains(xv(x))) lost.push_back(x);
    std::sort(lost.begin(), lost.end());
    out_.push_back({*fresh, kind, Guarantee::strictly_longer, lost});
  }

 private:
  Vertex on(Vertex u) const {
    if (!c_.contains(u)) throw Missing{};
    return u;
  }

  const BipartiteGraph& g_;
  const Triple& t_;
  const AltCycle& c_;
  std::vector<MoveResult>& out_;
  std::set<std::pair<std::string, std::vector<Vertex>>>& seen_;
  std::map<std::pair<Vertex, Vertex>, std::optional<std::vector<Vertex>>> dcache_;
};

bool open_arc_has_x(const AltCycle& c, Vertex a, Vertex b) {
  const int len = c.length();
  const int pa = c.position(a), pb = c.position(b);
  for (int k = 1; k < ((pb - pa) % len + len) % len; ++k)
    if (c.at(pa + k).is_x()) return true;
  return false;
}

// Moves that only need the fan, the component and the cycle order.
void general_moves(Generator& gen) {
  const auto& t = gen.triple();
  const auto& c = gen.cycle();
  const auto& T = t.targets;
  const auto& Tt = t.neighbors;

  for (Vertex a : T)
    for (Vertex b : T) {
      if (a == b || open_arc_has_x(c, a, b)) continue;
      gen.emit("fan-splice", [&](Builder& B) { B.path(gen.fan(a, b)).arc(b, a); });
    }
  for (Vertex a : Tt)
    for (Vertex b : Tt) {
      if (a == b || open_arc_has_x(c, a, b)) continue;
      gen.emit("component-splice", [&](Builder& B) { B.path(gen.dpath(a, b)).arc(b, a); });
    }

  for (Vertex w : Tt) {
    if (!w.is_x()) continue;
    for (Vertex v : Tt) {
      if (v == w) continue;
      gen.emit("component-reroute", [&](Builder& B) {
        Vertex u = gen.xp(v);
        B.v(w).arc_ccw(w, u).v(gen.yp(w)).arc(gen.yp(w), v).path(gen.dpath(v, w));
      });
    }
  }

  for (Vertex u1 : Tt)
    gen.emit("component-attach", [&](Builder& B) {
      Vertex x1 = gen.xp(u1);
      B.arc(x1, u1).path(gen.dpath(u1, x1));
    });

  for (Vertex u1 : Tt)
    for (Vertex x3 : Tt) {
      if (!x3.is_x()) continue;
      gen.emit("cross-splice", [&](Builder& B) {
        Vertex x1 = gen.xp(u1);
        if (x1 == x3) throw Missing{};
        B.v(x1).v(gen.yp(x3)).arc(gen.yp(x3), u1).path(gen.dpath(u1, x3)).arc_ccw(x3, x1);
      });
    }

  for (Vertex u1 : Tt)
    for (Vertex u2 : Tt) {
      if (u1 == u2) continue;
      Vertex x1, x2;
      try {
        x1 = gen.xp(u1);
        x2 = gen.xp(u2);
      } catch (const Missing&) {
        continue;
      }
      if (x1 == x2) continue;
      for (Vertex y : gen.cons(x1, x2))
        gen.emit("con-splice", [&](Builder& B) {
          B.arc(x1, u2).path(gen.dpath(u2, u1)).arc_ccw(u1, x2).v(y).v(x1);
        });

      // Crossings x3 with cyclic order x1, x3, x2, x1 ~ y+(x3), x2 ~ y-(x3).
      std::vector<Vertex> crossed;
      for (int x : crossings(gen.graph(), c, x1.index, x2.index)) {
        Vertex x3 = xv(x);
        const int len = c.length();
        const int d3 = ((c.position(x3) - c.position(x1)) % len + len) % len;
        const int d2 = ((c.position(x2) - c.position(x1)) % len + len) % len;
        if (d3 < d2) crossed.push_back(x3);
      }
      for (Vertex x3 : crossed) {
        gen.emit("cross-bypass",
                 [&](Builder& B) {
                   B.v(x1).v(gen.yp(x3)).arc(gen.yp(x3), u2).path(gen.dpath(u2, u1));
                   B.arc_ccw(u1, x2).v(gen.ym(x3)).arc_ccw(gen.ym(x3), x1);
                 },
                 {x3});
        for (Vertex uj : Tt) {
          Vertex xj;
          try {
            xj = gen.xp(uj);
          } catch (const Missing&) {
            continue;
          }
          for (Vertex y : gen.cons(x3, xj)) {
            gen.emit("cross-con", [&](Builder& B) {
              B.arc(x1, x3).v(y).v(xj).arc(xj, u1).path(gen.dpath(u1, uj));
              B.arc_ccw(uj, gen.yp(x3)).v(x1);
            });
            gen.emit("cross-con", [&](Builder& B) {
              B.arc(x2, uj).path(gen.dpath(uj, u2)).arc_ccw(u2, x3).v(y).v(xj);
              B.arc(xj, gen.ym(x3)).v(x2);
            });
          }
        }
        gen.emit("cross-degree", [&](Builder& B) {
          B.arc(gen.ym(x1), gen.ym(x3)).v(x2).arc(x2, u1).path(gen.dpath(u1, u2));
          B.arc_ccw(u2, x3).v(gen.ym(x1));
        });
        gen.emit("cross-degree", [&](Builder& B) {
          B.arc(x1, x3).v(gen.ym(x2)).arc(gen.ym(x2), u1).path(gen.dpath(u1, u2));
          B.arc_ccw(u2, gen.yp(x3)).v(x1);
        });
        gen.emit("crossing-reroute", [&](Builder& B) {
          B.arc(x1, gen.ym(x3)).v(x2).arc(x2, u1).path(gen.dpath(u1, u2));
          B.arc_ccw(u2, gen.yp(x3)).v(x1);
        });
      }
      for (Vertex x3 : crossed)
        for (Vertex x4 : crossed) {
          if (x3 == x4) continue;
          for (Vertex y : gen.cons(x3, x4)) {
            gen.emit("double-cross", [&](Builder& B) {
              B.arc(x1, x3).v(y).v(x4).arc(x4, u2).path(gen.dpath(u2, u1));
              B.arc_ccw(u1, x2).v(gen.ym(x4)).arc_ccw(gen.ym(x4), gen.yp(x3)).v(x1);
            });
            gen.emit("double-cross", [&](Builder& B) {
              B.arc(x1, x3).v(y).v(x4).arc_ccw(x4, x2).v(gen.yp(x4));
              B.arc(gen.yp(x4), u1).path(gen.dpath(u1, u2)).arc_ccw(u2, gen.yp(x3)).v(x1);
            });
          }
        }
    }
}


// Moves around three connectors u_1, u_2, u_3. `s` shifts the labels so
// that every connector takes the role of u_1 once.
void segment_moves(Generator& gen, const SegmentView& seg, int s) {
  auto U = [&](int i) { return seg.u(i + s); };
  auto X = [&](int i, int j) {
    auto v = seg.x(i + s, j);
    if (!v) throw Missing{};
    return xv(*v);
  };
  // Looks up a vertex outside any pattern; nullopt when it does not exist.
  auto try_x = [&](int i, int j) -> std::optional<Vertex> {
    auto v = seg.x(i + s, j);
    if (!v) return std::nullopt;
    return xv(*v);
  };
  auto cons = [&](std::optional<Vertex> a, std::optional<Vertex> b) {
    return (a && b) ? gen.cons(*a, *b) : std::vector<Vertex>{};
  };
  const int span = static_cast<int>(seg.segment(1 + s).size());
  const int back = static_cast<int>(seg.segment(s).size());
  const Vertex apex = xv(gen.triple().apex);

  gen.emit("fan-arc", [&](Builder& B) { B.path(gen.fan(U(1), U(2))).arc(U(2), U(1)); },
           {try_x(1, 1).value_or(apex)});

  for (Vertex y : cons(try_x(2, -1), try_x(2, 1)))
    gen.emit("short-swap",
             [&](Builder& B) {
               B.arc_ccw(U(2), X(2, -1)).v(y).v(X(2, 1)).arc(X(2, 1), U(1));
               B.path(gen.fan(U(1), U(2)));
             },
             {try_x(1, 1).value_or(apex)});
  for (Vertex y : cons(try_x(2, -1), try_x(0, 1)))
    gen.emit("long-swap",
             [&](Builder& B) {
               B.arc(X(2, -1), U(0)).path(gen.fan(U(0), U(1))).arc_ccw(U(1), X(0, 1));
               B.v(y).v(X(2, -1));
             },
             {try_x(1, 1).value_or(apex)});

  for (int j : {2, 3}) {
    // x_{1,1} jumps to a Y-vertex inside U_j.
    if (auto x11 = try_x(1, 1)) {
      for (int yk : seg.segment_y(j + s)) {
        const Vertex target = yv(yk);
        if (!gen.graph().adjacent(*x11, target)) continue;
        std::optional<Vertex> after;
        try {
          after = gen.xp(target);
        } catch (const Missing&) {
          continue;
        }
        for (Vertex y : cons(after, try_x(j, 1)))
          gen.emit("segment-jump", [&](Builder& B) {
            B.arc(X(1, 1), U(j)).path(gen.fan(U(j), U(1))).arc_ccw(U(1), *after);
            B.v(y).v(X(j, 1)).arc(X(j, 1), target).v(X(1, 1));
          });
      }
    }
    gen.emit("segment-detour",
             [&](Builder& B) {
               const Vertex top = gen.yp(X(j, 1));
               B.arc(X(1, 1), U(j)).path(gen.dpath(U(j), U(1))).arc_ccw(U(1), top).v(X(1, 1));
             },
             {try_x(j, 1).value_or(apex)});
    for (Vertex y : cons(try_x(j + 1, -1), try_x(j, 2)))
      gen.emit("segment-detour",
               [&](Builder& B) {
                 const Vertex w = gen.yp(gen.xm(U(j + 1)));
                 B.arc(X(1, 1), U(j)).path(gen.dpath(U(j), U(1))).arc_ccw(U(1), X(j + 1, -1));
                 B.v(y).v(X(j, 2)).arc(X(j, 2), gen.ym(w)).v(X(1, 1));
               },
               {try_x(j, 1).value_or(apex)});
  }

  const std::vector<Vertex> u1_only =
      U(1).is_x() ? std::vector<Vertex>{U(1)} : std::vector<Vertex>{};
  for (Vertex a : cons(try_x(3, -1), try_x(1, 1)))
    for (Vertex b : cons(try_x(1, -1), try_x(2, 1))) {
      gen.emit("double-long",
               [&](Builder& B) {
                 B.arc(U(3), X(1, -1)).v(b).v(X(2, 1)).arc(X(2, 1), X(3, -1)).v(a);
                 B.v(X(1, 1)).arc(X(1, 1), U(2)).path(gen.fan(U(2), U(3)));
               },
               u1_only);
      auto head = [&](Builder& B) {
        B.arc_ccw(U(2), X(1, 1)).v(a).v(X(3, -1)).arc_ccw(X(3, -1), X(2, 1)).v(b);
        B.v(X(1, -1)).arc_ccw(X(1, -1), U(3));
      };
      for (int yn : gen.graph().x_neighbors(apex.index)) {
        const Vertex y = yv(yn);
        if (gen.cycle().contains(y)) continue;
        gen.emit("double-long",
                 [&](Builder& B) {
                   head(B);
                   B.path(gen.fan(U(3), apex)).v(y).v(U(2));
                 },
                 u1_only);
      }
      gen.emit("double-long",
               [&](Builder& B) {
                 head(B);
                 auto f = gen.fan(U(3), U(1));
                 std::vector<Vertex> avoid(f.begin() + 1, f.end() - 1);
                 B.path(f).path(gen.dpath(U(1), U(2), avoid));
               },
               u1_only);
    }

  for (int a = 2; a <= span; ++a)
    for (Vertex yy : cons(try_x(2, -1), try_x(1, a - 1)))
      for (Vertex y : cons(try_x(1, a), try_x(3, -1)))
        gen.emit("medium-chain", [&](Builder& B) {
          B.arc(U(3), X(1, a - 1)).v(yy).v(X(2, -1)).arc_ccw(X(2, -1), X(1, a)).v(y);
          B.v(X(3, -1)).arc_ccw(X(3, -1), U(2)).path(gen.fan(U(2), U(3)));
        });

  for (int j = 1; j <= span; ++j)
    for (Vertex y : cons(try_x(1, j), try_x(3, 1)))
      for (Vertex yy : cons(try_x(1, 1), try_x(1, j + 1)))
        gen.emit("medium-super", [&](Builder& B) {
          B.arc(X(1, 1), X(1, j)).v(y).v(X(3, 1)).arc(X(3, 1), U(1));
          B.path(gen.fan(U(1), U(3))).arc_ccw(U(3), X(1, j + 1)).v(yy).v(X(1, 1));
        });

  for (int j = 2; j <= span; ++j) {
    std::optional<Vertex> before;
    try {
      before = gen.xm(gen.ym(X(1, j)));
    } catch (const Missing&) {
      continue;
    }
    for (Vertex yy : cons(try_x(2, -1), before))
      gen.emit("no-medium", [&](Builder& B) {
        const Vertex ym = gen.ym(X(1, j));
        B.arc(U(3), *before).v(yy).v(X(2, -1)).arc_ccw(X(2, -1), ym).v(X(3, -1));
        B.arc(X(3, -1), U(2)).path(gen.fan(U(2), U(3)));
      });
  }
  for (int b = 2; b <= back; ++b) {
    for (Vertex yy : cons(try_x(1, 1), try_x(1, 2)))
      for (Vertex y : cons(try_x(2, 1), try_x(1, -b + 1)))
        gen.emit("no-medium", [&](Builder& B) {
          B.v(X(1, 1)).v(yy).v(X(1, 2)).arc(X(1, 2), U(2)).path(gen.fan(U(2), U(1)));
          B.arc_ccw(U(1), X(1, -b + 1)).v(y).v(X(2, 1)).arc_ccw(X(2, 1), X(1, -b));
          B.v(gen.yp(X(1, 1))).v(X(1, 1));
        });
    for (Vertex y : cons(try_x(2, 1), try_x(1, -b + 1)))
      for (Vertex yy : cons(try_x(1, -b), try_x(1, 2)))
        gen.emit("no-medium",
                 [&](Builder& B) {
                   B.v(X(1, -b + 1)).v(y).v(X(2, 1)).arc(X(2, 1), X(1, -b)).v(yy);
                   B.v(X(1, 2)).arc(X(1, 2), U(2)).path(gen.fan(U(2), U(1)));
                   B.arc_ccw(U(1), X(1, -b + 1));
                 },
                 {try_x(1, 1).value_or(apex)});
  }
  for (int a = 1; a <= back; ++a)
    for (Vertex yy : cons(try_x(2, 1), try_x(1, -a)))
      gen.emit("no-medium", [&](Builder& B) {
        const Vertex ym = gen.ym(X(1, -a));
        B.arc(U(3), ym).v(X(3, -1)).arc_ccw(X(3, -1), X(2, 1)).v(yy).v(X(1, -a));
        B.arc(X(1, -a), U(2)).path(gen.fan(U(2), U(3)));
      });

  for (Vertex a : cons(try_x(3, -1), try_x(1, 1)))
    for (Vertex c : cons(try_x(1, 2), try_x(2, 1)))
      gen.emit("one-long", [&](Builder& B) {
        B.arc(U(3), X(1, 1)).v(a).v(X(3, -1)).arc_ccw(X(3, -1), X(2, 1)).v(c);
        B.v(X(1, 2)).arc(X(1, 2), U(2)).path(gen.fan(U(2), U(3)));
      });
  for (Vertex b : cons(try_x(1, -1), try_x(1, 1)))
    for (Vertex c : cons(try_x(1, 2), try_x(3, 1)))
      gen.emit("one-long", [&](Builder& B) {
        B.arc(X(3, 1), X(1, -1)).v(b).v(X(1, 1)).arc_ccw(X(1, 1), U(1));
        B.path(gen.fan(U(1), U(3))).arc_ccw(U(3), X(1, 2)).v(c).v(X(3, 1));
      });

  for (Vertex y1 : cons(try_x(1, -1), try_x(2, -2)))
    for (Vertex y2 : cons(try_x(2, -1), try_x(2, 1)))
      gen.emit("short-chain", [&](Builder& B) {
        B.arc(U(1), X(2, -2)).v(y1).v(X(1, -1)).arc_ccw(X(1, -1), X(2, 1)).v(y2);
        B.v(X(2, -1)).arc(X(2, -1), U(2)).path(gen.fan(U(2), U(1)));
      });
  for (int a = 1; a <= span; ++a)
    for (Vertex c : cons(try_x(1, -1), try_x(1, a + 1)))
      gen.emit("short-chain", [&](Builder& B) {
        B.arc(X(3, 1), X(1, -1)).v(c).v(X(1, a + 1)).arc(X(1, a + 1), U(3));
        B.path(gen.fan(U(3), U(1))).arc(U(1), gen.ym(X(1, a + 1))).v(X(3, 1));
      });
  for (int b = 2; b <= span + 1; ++b)
    for (Vertex c : cons(try_x(1, -1), try_x(1, b - 1)))
      gen.emit("short-chain", [&](Builder& B) {
        B.arc(X(3, 1), X(1, -1)).v(c).v(X(1, b - 1)).arc_ccw(X(1, b - 1), U(1));
        B.path(gen.fan(U(1), U(3))).arc_ccw(U(3), gen.yp(X(1, b - 1))).v(X(3, 1));
      });
  for (int c = 2; c <= span; ++c)
    for (Vertex r : cons(try_x(1, -1), try_x(1, c)))
      for (Vertex q : cons(try_x(2, -1), try_x(1, c - 1)))
        gen.emit("short-chain", [&](Builder& B) {
          B.arc(U(2), X(1, -1)).v(r).v(X(1, c)).arc(X(1, c), X(2, -1)).v(q);
          B.v(X(1, c - 1)).arc_ccw(X(1, c - 1), U(1)).path(gen.fan(U(1), U(2)));
        });
  for (int b = 2; b <= span; ++b)
    for (Vertex r : cons(try_x(1, -1), try_x(1, b - 1)))
      for (Vertex sv : cons(try_x(2, -1), try_x(1, b)))
        for (Vertex tv : cons(try_x(2, -2), try_x(2, 1)))
          gen.emit("short-chain", [&](Builder& B) {
            B.arc(X(2, 1), X(1, -1)).v(r).v(X(1, b - 1)).arc_ccw(X(1, b - 1), U(1));
            B.path(gen.fan(U(1), U(2))).arc_ccw(U(2), X(2, -1)).v(sv).v(X(1, b));
            B.arc(X(1, b), X(2, -2)).v(tv).v(X(2, 1));
          });
}

void all_moves(Generator& gen) {
  general_moves(gen);
  if (gen.triple().t_tilde != 3) return;
  SegmentView seg(gen.cycle(), gen.triple().neighbors);
  for (int s = 0; s < 3; ++s) segment_moves(gen, seg, s);
}

}  // namespace

std::vector<MoveResult> propose_moves(const BipartiteGraph& g, const Triple& t) {
  std::vector<MoveResult> out;
  std::set<std::pair<std::string, std::vector<Vertex>>> seen;
  const AltCycle rev = t.cycle.reversed();
  for (const AltCycle* c : {&t.cycle, &rev}) {
    Generator gen(g, t, *c, out, seen);
    all_moves(gen);
  }
  return out;
}

std::vector<MoveResult> extension_moves(const BipartiteGraph& g, const Triple& t) {
  std::vector<MoveResult> out;
  std::set<std::pair<std::string, std::vector<Vertex>>> seen;
  Generator gen(g, t, t.cycle, out, seen);
  for (Vertex a : t.targets)
    for (Vertex b : t.targets)
      if (a != b)
        gen.emit_any("fan-extension", [&](Builder& B) { B.path(gen.fan(a, b)).arc(b, a); });
  for (Vertex a : t.neighbors)
    for (Vertex b : t.neighbors)
      if (a != b)
        gen.emit_any("component-extension",
                     [&](Builder& B) { B.path(gen.dpath(a, b)).arc(b, a); });
  return out;
}

}  // namespace berge
