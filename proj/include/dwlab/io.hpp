#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "dwlab/error.hpp"
#include "dwlab/reductions.hpp"
#include "dwlab/tournament.hpp"

namespace dwlab {

/// Malformed text input; line and column are 1-based (column 0 = whole line).
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InvalidInput("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") + ": " +
                     message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Line 1: n. Then n rows of n '0'/'1' characters, row i column j = 1 iff i -> j.
/// Lines starting with '#' are skipped.
Tournament parse_tournament(std::istream& in);
Tournament parse_tournament(std::string_view text);
void emit_tournament(const Tournament& t, std::ostream& out);
std::string emit_tournament(const Tournament& t);

/// Whitespace-separated 0-based vertex ids.
Ordering parse_ordering(std::string_view text, std::size_t n);
VertexSet parse_vertex_set(std::string_view text, std::size_t n);
std::string format_vertices(std::span<const Vertex> vs);

/// DIMACS cnf restricted to 3-literal clauses; balance is not checked here.
Balanced3Sat4 parse_dimacs_cnf(std::istream& in);
Balanced3Sat4 parse_dimacs_cnf(std::string_view text);
void emit_dimacs_cnf(const Balanced3Sat4& f, std::ostream& out);

/// "p edge N M" followed by M lines "e u v" (1-based); validated as cubic.
CubicGraph parse_dimacs_edges(std::istream& in);
CubicGraph parse_dimacs_edges(std::string_view text);
void emit_dimacs_edges(const CubicGraph& g, std::ostream& out);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace dwlab
