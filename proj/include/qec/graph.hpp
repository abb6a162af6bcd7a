#ifndef QEC_GRAPH_HPP
#define QEC_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qec {

/// Hard upper bound on vertex count; adjacency rows are single 64-bit words.
inline constexpr std::size_t max_vertices = 64;

using vertex = std::size_t;
using edge = std::pair<vertex, vertex>;

/// Thrown when an operation that needs finite distances receives a
/// disconnected graph.
class disconnected_graph_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {0..63} packed into one word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<vertex> members) {
    for (vertex v : members)
      insert(v);
  }

  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(vertex v) const {
    return v < 64 && ((bits_ >> v) & 1u) != 0;
  }
  constexpr vertex front() const {
    return static_cast<vertex>(std::countr_zero(bits_));
  }

  void insert(vertex v) {
    if (v >= max_vertices)
      throw std::out_of_range("vertex index exceeds 63");
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(vertex v) {
    if (v < max_vertices)
      bits_ &= ~(std::uint64_t{1} << v);
  }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<vertex> members() const {
    std::vector<vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<vertex>(std::countr_zero(b)));
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Orders by sorted member list, lexicographically.
  friend bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      const int lx = std::countr_zero(x), ly = std::countr_zero(y);
      if (lx != ly)
        return lx < ly;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), rows_(n, 0) {
    if (n == 0)
      throw std::invalid_argument("graph must have at least one vertex");
    if (n > max_vertices)
      throw std::invalid_argument("graph has more than 64 vertices");
  }

  /// Repeated edges collapse to one; loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: " +
                                    std::to_string(u) + " " + std::to_string(v));
      if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
      rows_[u] |= std::uint64_t{1} << v;
      rows_[v] |= std::uint64_t{1} << u;
    }
  }

  Graph(std::size_t n, std::initializer_list<edge> edges)
      : Graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

  std::size_t size() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(vertex u, vertex v) const {
    return u < n_ && v < n_ && ((rows_[u] >> v) & 1u) != 0;
  }
  VertexSet neighbours(vertex v) const { return VertexSet(rows_.at(v)); }
  std::size_t degree(vertex v) const { return neighbours(v).size(); }

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (auto r : rows_)
      twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    for (vertex u = 0; u < n_; ++u)
      for (vertex v : VertexSet(rows_[u] & ~((std::uint64_t{2} << u) - 1)).members())
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

/// All-pairs shortest-path lengths of a connected graph.
class DistanceMatrix {
public:
  std::size_t size() const { return n_; }
  int operator()(vertex x, vertex y) const { return d_[x * n_ + y]; }

  int row_sum(vertex x) const {
    return std::accumulate(d_.begin() + static_cast<std::ptrdiff_t>(x * n_),
                           d_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n_), 0);
  }
  int max_entry() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

  /// Builds from a dense row-major table; validates the metric axioms.
  static DistanceMatrix from_rows(std::size_t n, std::vector<int> entries) {
    if (entries.size() != n * n)
      throw std::invalid_argument("distance table has wrong size");
    DistanceMatrix dm(n, std::move(entries));
    for (vertex x = 0; x < n; ++x) {
      if (dm(x, x) != 0)
        throw std::invalid_argument("distance diagonal must be zero");
      for (vertex y = 0; y < n; ++y)
        if (dm(x, y) != dm(y, x) || (x != y && dm(x, y) < 1))
          throw std::invalid_argument("distance table is not a metric");
    }
    return dm;
  }

  friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
  DistanceMatrix(std::size_t n, std::vector<int> d) : n_(n), d_(std::move(d)) {}
  friend DistanceMatrix distance_matrix(const Graph &g);

  std::size_t n_ = 0;
  std::vector<int> d_;
};

namespace detail {

/// BFS layers from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph &g, vertex source) {
  std::vector<int> dist(g.size(), -1);
  dist[source] = 0;
  VertexSet frontier{source};
  VertexSet seen = frontier;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    VertexSet next;
    for (vertex u : frontier.members())
      next = next | (g.neighbours(u) - seen);
    for (vertex v : next.members())
      dist[v] = level;
    seen = seen | next;
    frontier = next;
  }
  return dist;
}

inline VertexSet component_of(const Graph &g, vertex source) {
  VertexSet seen{source};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (vertex u : frontier.members())
      next = next | g.neighbours(u);
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen;
}

} // namespace detail

inline bool is_connected(const Graph &g) {
  return detail::component_of(g, 0) == g.vertices();
}

inline DistanceMatrix distance_matrix(const Graph &g) {
  const std::size_t n = g.size();
  std::vector<int> d(n * n);
  for (vertex x = 0; x < n; ++x) {
    auto row = detail::bfs_distances(g, x);
    for (vertex y = 0; y < n; ++y) {
      if (row[y] < 0)
        throw disconnected_graph_error("graph is disconnected: vertex " +
                                       std::to_string(y) + " unreachable from " +
                                       std::to_string(x));
      d[x * n + y] = row[y];
    }
  }
  return DistanceMatrix(n, std::move(d));
}

inline int diameter(const Graph &g) { return distance_matrix(g).max_entry(); }

// --- named constructions -------------------------------------------------

/// K_n on 0..n-1.
inline Graph make_complete(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("make_complete: n must be >= 1");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      es.emplace_back(u, v);
  return Graph(n, es);
}

/// P_n: 0 - 1 - ... - (n-1).
inline Graph make_path(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("make_path: n must be >= 2");
  std::vector<edge> es;
  for (vertex u = 0; u + 1 < n; ++u)
    es.emplace_back(u, u + 1);
  return Graph(n, es);
}

/// C_n: the path 0..n-1 closed by the edge (n-1, 0).
inline Graph make_cycle(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("make_cycle: n must be >= 3");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    es.emplace_back(u, (u + 1) % n);
  return Graph(n, es);
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("make_complete_bipartite: empty part");
  std::vector<edge> es;
  for (vertex u = 0; u < a; ++u)
    for (vertex v = a; v < a + b; ++v)
      es.emplace_back(u, v);
  return Graph(a + b, es);
}

/// K_m ∪_l K_n on m+n-l vertices.
///
/// Labeling: the first clique is {0..m-1}, the second {m-l..m+n-l-1}, so the
/// shared part is {m-l..m-1}.
inline Graph make_two_clique(std::size_t l, std::size_t m, std::size_t n) {
  if (l < 1 || m <= l || n <= l)
    throw std::invalid_argument("make_two_clique: need l >= 1, m > l, n > l");
  const std::size_t total = m + n - l;
  std::vector<edge> es;
  auto add_clique = [&](vertex lo, vertex hi) {
    for (vertex u = lo; u < hi; ++u)
      for (vertex v = u + 1; v < hi; ++v)
        es.emplace_back(u, v);
  };
  add_clique(0, m);
  add_clique(m - l, total);
  return Graph(total, es);
}

/// K_n * (K_{m_1}, ..., K_{m_s}).
///
/// The hub K_n occupies 0..n-1; part i is glued at hub vertex i and its other
/// m_i - 1 vertices follow the previous part's.
inline Graph make_star_product(std::size_t n, std::span<const std::size_t> parts) {
  if (parts.empty())
    throw std::invalid_argument("make_star_product: need at least one part");
  if (parts.size() > n)
    throw std::invalid_argument("make_star_product: more parts than hub vertices");
  std::size_t total = n;
  for (auto m : parts) {
    if (m < 2)
      throw std::invalid_argument("make_star_product: parts must have size >= 2");
    total += m - 1;
  }
  if (total > max_vertices)
    throw std::invalid_argument("make_star_product: graph exceeds 64 vertices");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      es.emplace_back(u, v);
  vertex next = n;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<vertex> part{i};
    for (std::size_t k = 1; k < parts[i]; ++k)
      part.push_back(next++);
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        es.emplace_back(part[a], part[b]);
  }
  return Graph(total, es);
}

inline Graph make_star_product(std::size_t n, std::initializer_list<std::size_t> parts) {
  return make_star_product(n, std::span<const std::size_t>(parts.begin(), parts.size()));
}

// --- subgraphs -----------------------------------------------------------

/// Subgraph induced by `s`, relabeled to 0..|s|-1 in increasing order.
inline Graph induced_subgraph(const Graph &g, VertexSet s) {
  if (s.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  const auto members = s.members();
  std::vector<edge> es;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        es.emplace_back(i, j);
  return Graph(members.size(), es);
}

struct IsometryCheck {
  bool isometric = false;
  std::string reason;

  explicit operator bool() const { return isometric; }
};

/// Whether the subgraph induced by `s` keeps the distances of `g`.
inline IsometryCheck is_isometric_subgraph(const Graph &g, VertexSet s) {
  const Graph h = induced_subgraph(g, s);
  if (!is_connected(h))
    return {false, "induced subgraph is disconnected"};
  const auto dg = distance_matrix(g);
  const auto dh = distance_matrix(h);
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (dh(i, j) != dg(members[i], members[j]))
        return {false, "distance between " + std::to_string(members[i]) + " and " +
                           std::to_string(members[j]) + " is " +
                           std::to_string(dh(i, j)) + " in the subgraph but " +
                           std::to_string(dg(members[i], members[j])) + " in the graph"};
  return {true, {}};
}

} // namespace qec

#endif // QEC_GRAPH_HPP
