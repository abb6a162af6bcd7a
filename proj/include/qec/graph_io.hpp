#ifndef QEC_GRAPH_IO_HPP
#define QEC_GRAPH_IO_HPP

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace qec {

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// graph6: N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte + 63.

inline std::string to_graph6(const Graph &g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 record. Accepts an optional ">>graph6<<" header and
/// trailing whitespace; rejects nonzero padding so that emit(parse(s)) == s.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty())
    throw parse_error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte outside printable range 63..126");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~')
      throw parse_error("graph6: unsupported vertex count");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) |
        (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n == 0)
    throw parse_error("graph6: graph has no vertices");
  if (n > max_vertices)
    throw parse_error("graph6: more than 64 vertices is not supported");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw parse_error("graph6: expected " + std::to_string(bytes) +
                      " data bytes, got " + std::to_string(text.size() - pos));

  std::vector<edge> es;
  std::size_t k = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1)
        es.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw parse_error("graph6: nonzero padding bits");
  }
  return Graph(n, es);
}

/// One graph per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

// Edge list: first line "n", then one "u v" pair per line, 0-indexed.

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream os;
  os << g.size() << '\n';
  for (auto [u, v] : g.edges())
    os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph from_edge_list(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  auto fail = [&](const std::string &what) {
    throw parse_error("edge list line " + std::to_string(lineno) + ": " + what);
  };

  if (!next_line())
    throw parse_error("edge list: missing vertex count");
  long long n = 0;
  {
    std::istringstream ls(line);
    std::string rest;
    if (!(ls >> n) || (ls >> rest))
      fail("expected a single vertex count");
  }
  if (n < 1 || n > static_cast<long long>(max_vertices))
    fail("vertex count must be in 1..64");

  std::vector<edge> es;
  while (next_line()) {
    std::istringstream ls(line);
    long long u = 0, v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail("vertex out of range");
    if (u == v)
      fail("loops are not allowed");
    es.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), es);
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

} // namespace qec

#endif // QEC_GRAPH_IO_HPP
