#include "dwlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace dwlab {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank lines that do not start with one of `comment` characters.
std::vector<Line> content_lines(std::istream& in, std::string_view comment) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view t = trim(raw);
    if (t.empty() || comment.find(t.front()) != std::string_view::npos) continue;
    std::string_view body = raw;
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
    out.push_back({number, std::string(body)});
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view token, Int& value) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t column_of(const std::string& line, std::string_view token) {
  return static_cast<std::size_t>(token.data() - line.data()) + 1;
}

}  // namespace

Tournament parse_tournament(std::istream& in) {
  const std::vector<Line> lines = content_lines(in, "#");
  if (lines.empty()) throw ParseError(1, 0, "missing vertex count");
  const Line& head = lines.front();
  std::size_t n = 0;
  if (!parse_int(trim(head.text), n) || n == 0)
    throw ParseError(head.number, 1, "expected a positive vertex count, got '" + std::string(trim(head.text)) + "'");
  if (lines.size() - 1 < n)
    throw ParseError(lines.back().number + 1, 0,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  if (lines.size() - 1 > n) throw ParseError(lines[n + 1].number, 1, "unexpected content after the last row");

  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = lines[i + 1];
    for (std::size_t j = 0; j < row.text.size() && j < n; ++j)
      if (row.text[j] != '0' && row.text[j] != '1')
        throw ParseError(row.number, j + 1, std::string("expected '0' or '1', got '") + row.text[j] + "'");
    if (row.text.size() != n)
      throw ParseError(row.number, std::min(row.text.size(), n) + 1,
                       "row " + std::to_string(i) + " has " + std::to_string(row.text.size()) + " entries, expected " +
                           std::to_string(n));
    if (row.text[i] != '0') throw ParseError(row.number, i + 1, "self-loop at vertex " + std::to_string(i));
  }

  TournamentBuilder tb(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ij = lines[i + 1].text[j] == '1';
      const bool ji = lines[j + 1].text[i] == '1';
      const std::string pair = "pair {" + std::to_string(i) + "," + std::to_string(j) + "}";
      if (ij && ji) throw ParseError(lines[j + 1].number, i + 1, pair + " has arcs in both directions");
      if (!ij && !ji) throw ParseError(lines[j + 1].number, i + 1, pair + " undecided");
      ij ? tb.add_arc(i, j) : tb.add_arc(j, i);
    }
  return tb.build();
}

Tournament parse_tournament(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tournament(in);
}

void emit_tournament(const Tournament& t, std::ostream& out) {
  const std::size_t n = t.size();
  std::string row(n, '0');
  out << n << '\n';
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) row[v] = t.has_arc(u, v) ? '1' : '0';
    out << row << '\n';
  }
}

std::string emit_tournament(const Tournament& t) {
  std::ostringstream out;
  emit_tournament(t, out);
  return out.str();
}

namespace {

std::vector<Vertex> parse_ids(std::string_view text, std::size_t n) {
  std::vector<Vertex> ids;
  for (std::string_view tok : split(text)) {
    Vertex v = 0;
    if (!parse_int(tok, v)) throw InvalidInput("'" + std::string(tok) + "' is not a vertex id");
    if (v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    ids.push_back(v);
  }
  return ids;
}

}  // namespace

Ordering parse_ordering(std::string_view text, std::size_t n) {
  std::vector<Vertex> ids = parse_ids(text, n);
  if (ids.size() != n)
    throw InvalidInput("ordering lists " + std::to_string(ids.size()) + " vertices, expected " + std::to_string(n));
  return Ordering(std::move(ids));
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  VertexSet s(n);
  for (Vertex v : parse_ids(text, n)) {
    if (s.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " listed twice");
    s.insert(v);
  }
  return s;
}

std::string format_vertices(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Balanced3Sat4 parse_dimacs_cnf(std::istream& in) {
  const std::vector<Line> lines = content_lines(in, "c");
  if (lines.empty()) throw ParseError(1, 0, "missing 'p cnf' header");
  const Line& head = lines.front();
  const auto h = split(head.text);
  std::size_t vars = 0, clauses = 0;
  if (h.size() != 4 || h[0] != "p" || h[1] != "cnf" || !parse_int(h[2], vars) || !parse_int(h[3], clauses))
    throw ParseError(head.number, 1, "expected 'p cnf <variables> <clauses>'");

  Balanced3Sat4 f;
  f.n_vars = vars;
  std::vector<Literal> current;
  std::size_t current_line = head.number;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (trim(line.text).front() == '%') break;
    for (std::string_view tok : split(line.text)) {
      long long lit = 0;
      if (!parse_int(tok, lit)) throw ParseError(line.number, column_of(line.text, tok), "expected an integer literal");
      if (lit == 0) {
        if (current.size() != 3)
          throw ParseError(line.number, column_of(line.text, tok),
                           "clause has " + std::to_string(current.size()) + " literals, expected 3");
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > vars)
        throw ParseError(line.number, column_of(line.text, tok),
                         "variable " + std::to_string(var) + " exceeds the declared " + std::to_string(vars));
      if (current.empty()) current_line = line.number;
      current.push_back({var - 1, lit > 0});
    }
  }
  if (!current.empty()) throw ParseError(current_line, 0, "clause not terminated by 0");
  if (f.clauses.size() != clauses)
    throw ParseError(head.number, 0,
                     "header declares " + std::to_string(clauses) + " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

Balanced3Sat4 parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_cnf(in);
}

void emit_dimacs_cnf(const Balanced3Sat4& f, std::ostream& out) {
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    out << "0\n";
  }
}

CubicGraph parse_dimacs_edges(std::istream& in) {
  const std::vector<Line> lines = content_lines(in, "c");
  if (lines.empty()) throw ParseError(1, 0, "missing 'p edge' header");
  const Line& head = lines.front();
  const auto h = split(head.text);
  std::size_t n = 0, m = 0;
  if (h.size() != 4 || h[0] != "p" || h[1] != "edge" || !parse_int(h[2], n) || !parse_int(h[3], m))
    throw ParseError(head.number, 1, "expected 'p edge <vertices> <edges>'");
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto tok = split(line.text);
    std::size_t a = 0, b = 0;
    if (tok.size() != 3 || tok[0] != "e" || !parse_int(tok[1], a) || !parse_int(tok[2], b))
      throw ParseError(line.number, 1, "expected 'e <u> <v>'");
    if (a == 0 || b == 0 || a > n || b > n)
      throw ParseError(line.number, column_of(line.text, a == 0 || a > n ? tok[1] : tok[2]),
                       "endpoint out of range [1, " + std::to_string(n) + "]");
    edges.push_back({a - 1, b - 1});
  }
  if (edges.size() != m)
    throw ParseError(head.number, 0,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return make_cubic_graph(n, std::move(edges));
}

CubicGraph parse_dimacs_edges(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_edges(in);
}

void emit_dimacs_edges(const CubicGraph& g, std::ostream& out) {
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [a, b] : g.edges) out << "e " << a + 1 << ' ' << b + 1 << '\n';
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace dwlab
