#ifndef QEC_ENUMERATE_HPP
#define QEC_ENUMERATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

namespace qec {

/// Canonical forms are computed by searching vertex orders, so the cost grows
/// factorially for highly symmetric graphs.
inline constexpr std::size_t max_canonical_vertices = 8;

/// Vertex order whose relabeled upper-triangle bitstring (graph6 order) is
/// lexicographically smallest among all n! orders. order[k] is the original
/// vertex placed at position k.
///
/// Placing the vertex at position k fixes exactly the bits x(0,k)..x(k-1,k),
/// which form the next block of the bitstring, so the search keeps, level by
/// level, only the partial orders whose block is minimal.
inline std::vector<vertex> canonical_order(const Graph &g) {
  const std::size_t n = g.size();
  if (n > max_canonical_vertices)
    throw std::invalid_argument("canonical_order: at most 8 vertices supported");

  struct Partial {
    std::array<std::uint8_t, max_canonical_vertices> order{};
    VertexSet used;
  };
  std::vector<Partial> level(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Partial> next;
    std::uint64_t best = ~std::uint64_t{0};
    for (const Partial &p : level) {
      for (vertex v : (g.vertices() - p.used).members()) {
        std::uint64_t block = 0;
        for (std::size_t i = 0; i < k; ++i)
          block = (block << 1) | (g.adjacent(p.order[i], v) ? 1u : 0u);
        if (block > best)
          continue;
        if (block < best) {
          best = block;
          next.clear();
        }
        Partial q = p;
        q.order[k] = static_cast<std::uint8_t>(v);
        q.used.insert(v);
        next.push_back(q);
      }
    }
    level = std::move(next);
  }
  const Partial &winner = level.front();
  return {winner.order.begin(), winner.order.begin() + static_cast<std::ptrdiff_t>(n)};
}

/// Relabels so that new vertex k is old vertex order[k].
inline Graph relabel(const Graph &g, std::span<const vertex> order) {
  if (order.size() != g.size())
    throw std::invalid_argument("relabel: order has wrong length");
  std::vector<vertex> position(g.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    position[order[k]] = k;
  std::vector<edge> es;
  for (auto [u, v] : g.edges())
    es.emplace_back(position[u], position[v]);
  return Graph(g.size(), es);
}

inline Graph canonical_form(const Graph &g) { return relabel(g, canonical_order(g)); }

inline std::string canonical_graph6(const Graph &g) { return to_graph6(canonical_form(g)); }

/// Canonical representatives of the connected graphs on n vertices, sorted by
/// graph6 string.
///
/// Every connected graph on n >= 2 vertices has a non-cut vertex, so each one
/// arises from a connected graph on n-1 vertices by adding a vertex with a
/// non-empty neighbourhood.
inline std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > max_canonical_vertices)
    throw std::invalid_argument("enumerate_connected: n must be in 1..8");
  if (n == 1)
    return {Graph(1)};
  const auto smaller = enumerate_connected_graphs(n - 1);
  std::set<std::string> seen;
  std::vector<Graph> out;
  const vertex added = n - 1;
  for (const Graph &h : smaller) {
    const auto base_edges = h.edges();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << added); ++mask) {
      std::vector<edge> es = base_edges;
      for (vertex u : VertexSet(mask).members())
        es.emplace_back(u, added);
      Graph c = canonical_form(Graph(n, es));
      if (seen.insert(to_graph6(c)).second)
        out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Graph &a, const Graph &b) { return to_graph6(a) < to_graph6(b); });
  return out;
}

struct CatalogEntry {
  std::string graph6; // canonical
  std::size_t n = 0;
  Graph graph{1};
  /// Absent for n = 1, where the QEC is undefined.
  std::optional<ClassificationReport> report;
};

inline CatalogEntry make_catalog_entry(const Graph &canonical, int d_max = 5) {
  CatalogEntry e;
  e.graph6 = to_graph6(canonical);
  e.n = canonical.size();
  e.graph = canonical;
  if (canonical.size() >= 2)
    e.report = ladder_classify(canonical, d_max);
  return e;
}

inline std::vector<CatalogEntry> enumerate_connected(std::size_t n) {
  std::vector<CatalogEntry> out;
  for (const Graph &g : enumerate_connected_graphs(n))
    out.push_back(make_catalog_entry(g));
  return out;
}

/// Catalog of all connected graphs on 1..max_n vertices, ordered by (n, graph6).
inline std::vector<CatalogEntry> enumerate_catalog(std::size_t max_n) {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

} // namespace qec

#endif // QEC_ENUMERATE_HPP
