#ifndef MWBM_GRAPH_IO_HPP
#define MWBM_GRAPH_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mwbm/graph.hpp"

namespace mwbm {

// Line-oriented edge list:
//
//   c free-form comment
//   p bipartite <n1> <n2> <m>
//   e <left> <right> <weight>      (1-based indices, exactly m lines)
//
// Format violations throw ParseError carrying the line number; semantic
// violations (zero weight, duplicates, bad indices) throw the matching Error
// code with the line number in the message.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph(const std::string& text);
BipartiteGraph load_graph(const std::filesystem::path& path);

// Canonical form: header then edges sorted by (left, right).
void serialize_graph(const BipartiteGraph& g, std::ostream& out);
std::string serialize_graph(const BipartiteGraph& g);
void save_graph(const BipartiteGraph& g, const std::filesystem::path& path);

}  // namespace mwbm

#endif  // MWBM_GRAPH_IO_HPP
