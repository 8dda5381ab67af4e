#include "berge/io.hh"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "berge/error.hh"

namespace berge {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<int> parse_ints(const std::string& line, int lineno) {
  std::vector<int> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw Error("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::pair<int, int> parse_header(const std::vector<std::string>& lines) {
  if (lines.empty()) throw Error("empty file");
  auto head = parse_ints(lines[0], 1);
  if (head.size() != 2 || head[0] < 0 || head[1] < 0)
    throw Error("line 1: expected 'n m'");
  return {head[0], head[1]};
}

std::string join_line(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_bg(const BipartiteGraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& row : g.rows()) out += join_line(row) + "\n";
  return out;
}

BipartiteGraph parse_bg(const std::string& text) {
  auto lines = split_lines(text);
  auto [n, m] = parse_header(lines);
  if (static_cast<int>(lines.size()) > n + 1) {
    for (std::size_t i = n + 1; i < lines.size(); ++i)
      if (lines[i].find_first_not_of(" \t") != std::string::npos)
        throw Error("trailing content after " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<int>> rows(n);
  for (int x = 0; x < n; ++x)
    if (x + 1 < static_cast<int>(lines.size())) rows[x] = parse_ints(lines[x + 1], x + 2);
  return BipartiteGraph::checked(m, std::move(rows));
}

std::string format_hg(const Hypergraph& h) {
  std::string out = std::to_string(h.vertex_count) + " " +
                    std::to_string(h.edges.size()) + "\n";
  for (const auto& e : h.edges) out += join_line(e) + "\n";
  return out;
}

Hypergraph parse_hg(const std::string& text) {
  auto lines = split_lines(text);
  auto [n, m] = parse_header(lines);
  Hypergraph h;
  h.vertex_count = n;
  h.edges.resize(m);
  for (int e = 0; e < m; ++e)
    if (e + 1 < static_cast<int>(lines.size())) h.edges[e] = parse_ints(lines[e + 1], e + 2);
  if (auto problems = validate(h); !problems.empty())
    throw Error("invalid hypergraph: " + problems.front());
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << contents;
    if (!out) throw Error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename " + tmp + " to " + path);
}

}  // namespace berge
