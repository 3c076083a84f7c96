#ifndef STREAMND_GRAPH_IO_HPP_
#define STREAMND_GRAPH_IO_HPP_

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

// File formats (0-indexed vertex ids, blank lines and '#' comments ignored):
//   graph:        "n m" header, then m lines "u v [w]" (w defaults to 1)
//   edge lines:   "u v [w]" only, no header (link streams)
//   requirements: lines "u v r"
//   reliability:  one vertex id per line; listed vertices are non-reliable
// Self-loops are dropped while reading.

struct EdgeLine {
    int u;
    int v;
    Weight w;
    std::size_t line;
};

/// Parses headerless edge lines; `source` names the input in error messages.
std::vector<EdgeLine> parse_edge_lines(std::istream &in, const std::string &source);

Graph parse_graph(std::istream &in, const std::string &source);
Graph read_graph(const std::filesystem::path &path);

RequirementMap parse_requirements(std::istream &in, const std::string &source);
RequirementMap read_requirements(const std::filesystem::path &path);

/// Marks the listed vertices of g as non-reliable.
void apply_reliability(Graph &g, std::istream &in, const std::string &source);
void read_reliability(Graph &g, const std::filesystem::path &path);

void write_graph(std::ostream &out, const Graph &g);
void write_graph(const std::filesystem::path &path, const Graph &g);

/// Opens a file for reading or throws std::runtime_error naming the path.
std::ifstream open_input(const std::filesystem::path &path);

} // namespace streamnd

#endif // STREAMND_GRAPH_IO_HPP_
