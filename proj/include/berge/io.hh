#pragma once

#include <string>

#include "berge/graph.hh"

namespace berge {

// .bg: "n m" then one line per X-vertex with its sorted Y-neighbours.
// .hg: "n m" then one line per edge with its sorted vertices.
// Both are ASCII, LF-terminated; empty neighbour lines are allowed.

std::string format_bg(const BipartiteGraph& g);
BipartiteGraph parse_bg(const std::string& text);

std::string format_hg(const Hypergraph& h);
Hypergraph parse_hg(const std::string& text);

std::string read_file(const std::string& path);
/// Writes via a temporary file and rename so readers never see a torn file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace berge
