#include "berge/cycle.hh"

#include <algorithm>
#include <set>
#include <sstream>

#include "berge/error.hh"

namespace berge {

std::vector<std::string> validate_cycle(const BipartiteGraph& g,
                                        std::span<const Vertex> seq) {
  std::vector<std::string> out;
  const int len = static_cast<int>(seq.size());
  if (len < 4 || len % 2 != 0) {
    out.push_back("cycle length " + std::to_string(len) +
                  " is not an even number >= 4");
    return out;
  }
  std::set<Vertex> seen;
  for (int i = 0; i < len; ++i) {
    Vertex a = seq[i];
    Vertex b = seq[(i + 1) % len];
    const int bound = a.is_x() ? g.n() : g.m();
    if (a.index < 0 || a.index >= bound) {
      out.push_back(to_string(a) + " is out of range");
      continue;
    }
    if (!seen.insert(a).second) out.push_back(to_string(a) + " repeats");
    if (a.side == b.side)
      out.push_back(to_string(a) + " and " + to_string(b) +
                    " break the X/Y alternation");
    else if (!g.adjacent(a, b))
      out.push_back(to_string(a) + " and " + to_string(b) + " are not adjacent");
  }
  return out;
}

AltCycle::AltCycle(std::vector<Vertex> seq, int n, int m)
    : seq_(std::move(seq)), pos_x_(n, -1), pos_y_(m, -1) {
  for (int i = 0; i < length(); ++i) {
    const auto& v = seq_[i];
    (v.is_x() ? pos_x_ : pos_y_)[v.index] = i;
  }
}

AltCycle AltCycle::from_sequence(const BipartiteGraph& g,
                                 std::vector<Vertex> seq) {
  auto problems = validate_cycle(g, seq);
  if (!problems.empty()) {
    std::string msg = "invalid cycle:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw Error(msg);
  }
  if (seq.front().is_y()) std::rotate(seq.begin(), seq.begin() + 1, seq.end());
  return AltCycle(std::move(seq), g.n(), g.m());
}

std::optional<AltCycle> AltCycle::try_from_sequence(const BipartiteGraph& g,
                                                    std::vector<Vertex> seq) {
  if (!validate_cycle(g, seq).empty()) return std::nullopt;
  if (seq.front().is_y()) std::rotate(seq.begin(), seq.begin() + 1, seq.end());
  return AltCycle(std::move(seq), g.n(), g.m());
}

int AltCycle::position(Vertex v) const {
  const auto& pos = v.is_x() ? pos_x_ : pos_y_;
  if (v.index < 0 || v.index >= static_cast<int>(pos.size())) return -1;
  return pos[v.index];
}

std::vector<int> AltCycle::x_vertices() const {
  std::vector<int> out;
  for (const auto& v : seq_)
    if (v.is_x()) out.push_back(v.index);
  return out;
}

std::vector<int> AltCycle::y_vertices() const {
  std::vector<int> out;
  for (const auto& v : seq_)
    if (v.is_y()) out.push_back(v.index);
  return out;
}

AltCycle AltCycle::reversed() const {
  std::vector<Vertex> rev(seq_.rbegin(), seq_.rend());
  std::rotate(rev.begin(), rev.end() - 1, rev.end());
  return AltCycle(std::move(rev), static_cast<int>(pos_x_.size()),
                  static_cast<int>(pos_y_.size()));
}

std::vector<Vertex> AltCycle::normalized() const {
  int start = 0;
  for (int i = 0; i < length(); ++i)
    if (seq_[i] < seq_[start]) start = i;
  const bool forward = at(start + 1) < at(start - 1);
  std::vector<Vertex> out;
  out.reserve(seq_.size());
  for (int k = 0; k < length(); ++k)
    out.push_back(at(forward ? start + k : start - k));
  return out;
}

std::vector<std::vector<Vertex>> components_off_cycle(const BipartiteGraph& g,
                                                      const AltCycle& c) {
  if (auto problems = validate_cycle(g, c.vertices()); !problems.empty())
    throw Error("cycle is not valid for this graph: " + problems.front());
  std::vector<bool> removed(g.order(), false);
  for (const auto& v : c.vertices()) removed[g.flat(v)] = true;
  std::vector<std::vector<Vertex>> out;
  for (const auto& comp : components_without(g, removed)) {
    std::vector<Vertex> vs;
    for (int id : comp) vs.push_back(g.vertex(id));
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  return out;
}

std::string format_vertices(std::span<const Vertex> seq) {
  std::string out;
  for (const auto& v : seq) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
      throw Error("bad vertex token '" + tok + "'");
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1), &used);
    } catch (const std::exception&) {
      throw Error("bad vertex token '" + tok + "'");
    }
    if (used + 1 != tok.size() || idx < 0)
      throw Error("bad vertex token '" + tok + "'");
    out.push_back(tok[0] == 'x' ? xv(idx) : yv(idx));
  }
  return out;
}

}  // namespace berge
