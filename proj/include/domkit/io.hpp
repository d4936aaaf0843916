#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domkit/graph.hpp"

namespace domkit {

/// Input failure with the 1-based line number where it was detected.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

namespace detail {

inline bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoll(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

}  // namespace detail

/// Reads the edge-list format:
///   - lines starting with '#' are comments, blank lines are ignored
///   - first payload line is the header "n <vertex-count>"
///   - every following payload line is one edge "u v" with 0 <= u, v < count
/// Duplicate edges collapse; self-loops are rejected.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw ParseError(line_no, "expected header \"n <vertex-count>\"");
      long long value = 0;
      if (!detail::parse_int(tokens[1], value) || value < 0)
        throw ParseError(line_no, "vertex count must be a nonnegative integer");
      n = value;
      continue;
    }

    if (tokens.size() != 2)
      throw ParseError(line_no, "expected an edge \"u v\"");
    long long u = 0, v = 0;
    if (!detail::parse_int(tokens[0], u) || !detail::parse_int(tokens[1], v))
      throw ParseError(line_no, "edge endpoints must be integers");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(int(u), int(v));
  }

  if (n < 0) throw ParseError(line_no, "missing header \"n <vertex-count>\"");
  return build_graph(int(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

/// Writes the same format the reader accepts: header, then one edge per line
/// with u < v, sorted lexicographically, LF line endings.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
}

/// Reads whitespace-separated vertex ids (a dominating-set file).
inline VertexSet read_vertex_set(std::istream& in, int vertex_count) {
  std::vector<int> ids;
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    if (!detail::parse_int(tok, v))
      throw ParseError(1, "vertex id \"" + tok + "\" is not an integer");
    if (v < 0 || v >= vertex_count)
      throw ParseError(1, "vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(vertex_count) + ")");
    ids.push_back(int(v));
  }
  return VertexSet(std::move(ids));
}

inline VertexSet read_vertex_set_file(const std::string& path, int vertex_count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_vertex_set(in, vertex_count);
}

}  // namespace domkit
