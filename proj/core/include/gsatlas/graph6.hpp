#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsatlas/graph.hpp"

namespace gsatlas {

// graph6 interchange format, one graph per line, printable ASCII 63..126.
// Only the single-byte size header is supported (n <= 31 here).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs);

}  // namespace gsatlas
