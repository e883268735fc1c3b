#include "dacol/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace dacol {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    Line line{number, {}};
    std::istringstream words(raw);
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

int to_int(const Line& line, std::string_view tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

// "v:" prefix of rotation and coloring lines.
int vertex_prefix(const Line& line) {
  if (line.tokens.empty()) fail(line, "empty line");
  const std::string& head = line.tokens[0];
  if (head.size() < 2 || head.back() != ':') fail(line, "expected 'v:' at line start");
  return to_int(line, std::string_view(head).substr(0, head.size() - 1));
}

// Reads "v: x" style blocks of exactly `count` lines starting at lines[pos].
std::vector<std::vector<int>> read_block(const std::vector<Line>& lines, std::size_t& pos, int count,
                                         const char* what) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(count));
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i, ++pos) {
    if (pos >= lines.size()) throw ParseError(std::string(what) + " block ends early: expected " + std::to_string(count) + " lines");
    const Line& line = lines[pos];
    const int v = vertex_prefix(line);
    if (v < 0 || v >= count) fail(line, std::string(what) + " vertex out of range");
    if (seen[v]) fail(line, std::string(what) + " vertex listed twice");
    seen[v] = 1;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) rows[v].push_back(to_int(line, line.tokens[t]));
  }
  return rows;
}

Coloring coloring_from_rows(const std::vector<std::vector<int>>& rows, int k, const Line& header) {
  std::vector<int> col;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].size() != 1) fail(header, "coloring line for vertex " + std::to_string(v) + " needs one colour");
    const int c = rows[v][0];
    if (c < 1 || c > k) fail(header, "colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
    col.push_back(c);
  }
  return Coloring(std::move(col), k);
}

GraphFile parse_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input: expected a 'graph <n> <m>' header");
  const Line& header = lines[0];
  if (header.tokens.size() < 3 || header.tokens[0] != "graph") fail(header, "expected 'graph <n> <m> [rotation] [triangulation]'");
  GraphFile file;
  file.n = to_int(header, header.tokens[1]);
  const int m = to_int(header, header.tokens[2]);
  if (file.n < 0 || m < 0) fail(header, "negative size");
  for (std::size_t t = 3; t < header.tokens.size(); ++t) {
    if (header.tokens[t] == "rotation") {
      file.rotation_flag = true;
    } else if (header.tokens[t] == "triangulation") {
      file.triangulation_flag = true;
    } else {
      fail(header, "unknown header flag '" + header.tokens[t] + "'");
    }
  }
  std::size_t pos = 1;
  for (int i = 0; i < m; ++i, ++pos) {
    if (pos >= lines.size()) throw ParseError("edge list ends early: expected " + std::to_string(m) + " edges");
    const Line& line = lines[pos];
    if (line.tokens.size() != 2) fail(line, "expected an edge 'u v'");
    file.edges.push_back({to_int(line, line.tokens[0]), to_int(line, line.tokens[1])});
  }
  while (pos < lines.size()) {
    const Line& line = lines[pos++];
    if (line.tokens[0] == "rotation" && line.tokens.size() == 1) {
      if (file.rotation) fail(line, "second rotation block");
      if (!file.rotation_flag) fail(line, "rotation block without the header flag");
      file.rotation = read_block(lines, pos, file.n, "rotation");
    } else if (line.tokens[0] == "coloring" && line.tokens.size() == 2) {
      if (file.coloring) fail(line, "second coloring block");
      const int k = to_int(line, line.tokens[1]);
      if (k < 1) fail(line, "palette size must be positive");
      file.coloring = coloring_from_rows(read_block(lines, pos, file.n, "coloring"), k, line);
    } else {
      fail(line, "unexpected line");
    }
  }
  if (file.rotation_flag && !file.rotation) throw ParseError("header announces a rotation block that is missing");
  return file;
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) { return parse_lines(content_lines(in)); }

GraphFile parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_file(in);
}

ValidationReport check_simple(const GraphFile& file) {
  ValidationReport report;
  std::set<Edge> seen;
  std::string problem;
  for (const Edge& e : file.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= file.n || e.v >= file.n) {
      problem = "endpoint out of range in " + to_string(e);
    } else if (e.u == e.v) {
      problem = "loop at " + std::to_string(e.u);
    } else if (!seen.insert(make_edge(e.u, e.v)).second) {
      problem = "repeated edge " + to_string(make_edge(e.u, e.v));
    }
    if (!problem.empty()) break;
  }
  report.add("simple", problem.empty(), problem);
  return report;
}

PlaneGraph to_graph(const GraphFile& file) {
  const ValidationReport simple = check_simple(file);
  if (!simple.ok()) throw InvalidGraph(simple.checks[0].message);
  return PlaneGraph(file.n, file.edges, file.rotation);
}

std::string serialize(const PlaneGraph& g, const std::optional<Coloring>& coloring, bool triangulation_flag) {
  std::ostringstream out;
  out << "graph " << g.n() << ' ' << g.num_edges();
  if (g.has_rotation()) out << " rotation";
  if (triangulation_flag) out << " triangulation";
  out << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.has_rotation()) {
    out << "rotation\n";
    for (Vertex v = 0; v < g.n(); ++v) {
      out << v << ':';
      for (Vertex w : g.rotation(v)) out << ' ' << w;
      out << '\n';
    }
  }
  if (coloring) out << serialize_coloring(*coloring);
  return out.str();
}

std::string serialize_coloring(const Coloring& phi) {
  std::ostringstream out;
  out << "coloring " << phi.k << '\n';
  for (std::size_t v = 0; v < phi.size(); ++v) out << v << ": " << phi.color[v] << '\n';
  return out.str();
}

std::string serialize_edges(const EdgeSet& edges) {
  std::ostringstream out;
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeSet parse_edge_list(std::istream& in) {
  EdgeSet out;
  for (const Line& line : content_lines(in)) {
    if (line.tokens.size() != 2) fail(line, "expected an edge 'u v'");
    const int u = to_int(line, line.tokens[0]);
    const int v = to_int(line, line.tokens[1]);
    if (u == v) fail(line, "loop in edge list");
    out.insert(make_edge(u, v));
  }
  return out;
}

Coloring parse_coloring_file(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty coloring file");
  if (lines[0].tokens[0] == "graph") {
    GraphFile file = parse_lines(lines);
    if (!file.coloring) throw ParseError("graph file has no coloring block");
    return *file.coloring;
  }
  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "coloring") fail(header, "expected 'coloring <k>'");
  const int k = to_int(header, header.tokens[1]);
  std::size_t pos = 1;
  auto rows = read_block(lines, pos, static_cast<int>(lines.size()) - 1, "coloring");
  return coloring_from_rows(rows, k, header);
}

}  // namespace dacol
