#include "avdc/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "avdc/errors.hpp"

namespace avdc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(tok) + "'");
  return value;
}

constexpr long long kMaxVertices = 1 << 24;

// ---- graph6 ---------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&')
    throw ParseError("graph6: sparse6/digraph6 input is not supported");
  if (text.find('\n') != std::string_view::npos)
    throw ParseError("graph6: expected a single graph");
  for (char ch : text)
    if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126)
      throw ParseError("graph6: byte outside 63..126");

  auto byte = [&](std::size_t i) { return static_cast<long long>(text[i]) - 63; };
  long long n = 0;
  std::size_t pos = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 4 && byte(1) < 63) {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else if (text.size() >= 8 && byte(1) == 63) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  } else {
    throw ParseError("graph6: malformed size header");
  }
  if (n > kMaxVertices) throw ParseError("graph6: vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));

  std::vector<EdgeId> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      long long b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < need * 6; ++k)
    if ((byte(pos + k / 6) >> (5 - k % 6)) & 1)
      throw ParseError("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0})
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> data(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const EdgeId& e : g.edges()) {
    // Position of (u, v), u < v, in column-major upper-triangle order.
    long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    data[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (auto b : data) out.push_back(static_cast<char>(63 + b));
  out.push_back('\n');
  return out;
}

// ---- DIMACS ---------------------------------------------------------------

Graph parse_dimacs(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<EdgeId> edges;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError("DIMACS: repeated problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError("DIMACS: malformed problem line at line " + std::to_string(line_no));
      n = parse_int(tok[2], line_no);
      m = parse_int(tok[3], line_no);
      if (n < 0 || m < 0 || n > kMaxVertices)
        throw ParseError("DIMACS: invalid sizes in problem line");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError("DIMACS: edge line before problem line");
      if (tok.size() != 3)
        throw ParseError("DIMACS: malformed edge line at line " + std::to_string(line_no));
      long long a = parse_int(tok[1], line_no), b = parse_int(tok[2], line_no);
      if (a < 1 || b < 1 || a > n || b > n)
        throw ParseError("DIMACS: vertex out of range at line " + std::to_string(line_no));
      edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
    } else {
      throw ParseError("DIMACS: unknown line type '" + std::string(tok[0]) + "' at line " +
                       std::to_string(line_no));
    }
  }
  if (n < 0) throw ParseError("DIMACS: missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("DIMACS: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const EdgeId& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

// ---- edge list ------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  long long declared = -1;
  long long max_label = -1;
  std::vector<EdgeId> edges;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      auto tok = tokens(line.substr(hash + 1));
      if (tok.size() == 2 && tok[0] == "vertices") {
        declared = parse_int(tok[1], line_no);
        if (declared < 0 || declared > kMaxVertices)
          throw ParseError("edge list: invalid vertex count");
      }
      line = line.substr(0, hash);
    }
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw ParseError("edge list: expected 'u v' at line " + std::to_string(line_no));
    long long a = parse_int(tok[0], line_no), b = parse_int(tok[1], line_no);
    if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices)
      throw ParseError("edge list: vertex out of range at line " + std::to_string(line_no));
    max_label = std::max({max_label, a, b});
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  long long n = max_label + 1;
  if (declared >= 0) {
    if (declared < n)
      throw ParseError("edge list: vertex label exceeds declared vertex count");
    n = declared;
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.vertex_count() << '\n';
  for (const EdgeId& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::EdgeList: return parse_edge_list(text);
  }
  throw PreconditionError("unknown graph format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return emit_graph6(g);
    case GraphFormat::Dimacs: return emit_dimacs(g);
    case GraphFormat::EdgeList: return emit_edge_list(g);
  }
  throw PreconditionError("unknown graph format");
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  if (name == "edgelist" || name == "edge-list" || name == "edges") return GraphFormat::EdgeList;
  return std::nullopt;
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edgelist";
  }
  return "?";
}

GraphFormat sniff_format(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') return GraphFormat::EdgeList;
    if (body.substr(0, 2) == "p " || body.substr(0, 2) == "c " || body == "c")
      return GraphFormat::Dimacs;
    if (body.substr(0, 10) == ">>graph6<<") return GraphFormat::Graph6;
    auto tok = tokens(body);
    bool numeric = tok.size() == 2;
    for (auto t : tok)
      for (char ch : t) numeric = numeric && ch >= '0' && ch <= '9';
    return numeric ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return GraphFormat::EdgeList;
}

}  // namespace avdc
