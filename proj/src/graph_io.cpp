#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "idcodes/graph.hpp"

namespace idcodes {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

// Reads exactly `count` unsigned integers from a line, nothing else.
bool parse_fields(const std::string& text, std::size_t count,
                  std::vector<unsigned long long>& out) {
  std::istringstream fields(text);
  out.clear();
  std::string token;
  while (fields >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) return false;
    if (token.size() > 18) return false;
    out.push_back(std::stoull(token));
  }
  return out.size() == count;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<unsigned long long> fields;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw GraphError("empty edge list");
  if (!parse_fields(line, 2, fields)) parse_error(line_no, "expected header \"n m\"");
  const auto n = static_cast<std::size_t>(fields[0]);
  const auto m = static_cast<std::size_t>(fields[1]);
  if (n > kMaxVertices) parse_error(line_no, "too many vertices");
  if (m > kMaxEdges) parse_error(line_no, "too many edges");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) parse_error(line_no, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (!parse_fields(line, 2, fields)) parse_error(line_no, "expected \"u v\"");
    if (!(fields[0] < fields[1])) parse_error(line_no, "edge must satisfy u < v");
    if (fields[1] >= n) parse_error(line_no, "vertex out of range");
    edges.emplace_back(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
  }
  if (next_line()) parse_error(line_no, "trailing data after " + std::to_string(m) + " edges");
  Graph g(n, edges);
  if (g.size() != m) throw GraphError("duplicate edges in edge list");
  return g;
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

void write_vertex_set(std::ostream& out, const VertexSet& set) {
  for (Vertex v : set) out << v << '\n';
}

VertexSet read_vertex_set(std::istream& in, std::size_t universe) {
  std::vector<Vertex> members;
  std::string line;
  std::size_t line_no = 0;
  std::vector<unsigned long long> fields;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!parse_fields(line, 1, fields)) parse_error(line_no, "expected one vertex index");
    if (fields[0] >= universe) parse_error(line_no, "vertex out of range");
    members.push_back(static_cast<Vertex>(fields[0]));
  }
  return VertexSet(universe, std::move(members));
}

}  // namespace idcodes
