#include "gsatlas/graph6.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace gsatlas {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty()) throw std::invalid_argument("graph6: empty record");
  unsigned char head = static_cast<unsigned char>(s[0]);
  if (head < 63 || head > 126) throw std::invalid_argument("graph6: malformed header byte");
  if (head == 126) throw std::invalid_argument("graph6: multi-byte sizes (n > 62) not supported");
  int n = head - 63;
  if (n < 1 || n > Graph::max_vertices)
    throw std::invalid_argument("graph6: vertex count out of range: " + std::to_string(n));

  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) - 1 < nbytes) throw std::invalid_argument("graph6: truncated bit field");
  if (static_cast<int>(s.size()) - 1 > nbytes) throw std::invalid_argument("graph6: trailing characters");

  Graph g(n);
  int pos = 0;  // bit position in column order (0,1),(0,2),(1,2),(0,3),...
  for (int byte = 0; byte < nbytes; ++byte) {
    unsigned char c = static_cast<unsigned char>(s[1 + byte]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
    int v = c - 63;
    for (int t = 5; t >= 0; --t, ++pos) {
      int bit = (v >> t) & 1;
      if (pos >= nbits) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (bit) {
        // invert pos -> (i, j): columns j = 1..n-1, rows i = 0..j-1
        int j = 1, acc = 0;
        while (acc + j <= pos) acc += j, ++j;
        int i = pos - acc;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.size();
  if (n < 1) throw std::invalid_argument("graph6: cannot encode the empty graph");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace gsatlas
