#ifndef QEC_CLIQUES_HPP
#define QEC_CLIQUES_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace qec {

/// Maximal cliques, ordered by their sorted member lists.
struct CliqueSet {
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
  const VertexSet &operator[](std::size_t i) const { return cliques[i]; }
  auto begin() const { return cliques.begin(); }
  auto end() const { return cliques.end(); }

  /// Index of the first clique containing all of `s`, or size() if none.
  std::size_t first_containing(VertexSet s) const {
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (s.subset_of(cliques[i]))
        return i;
    return cliques.size();
  }
};

namespace detail {

inline void bron_kerbosch(const Graph &g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet> &out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbours in P.
  vertex pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (vertex u : (p | x).members()) {
    const std::size_t c = (p & g.neighbours(u)).size();
    if (!have || c > best) {
      pivot = u;
      best = c;
      have = true;
    }
  }
  for (vertex v : (p - g.neighbours(pivot)).members()) {
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbours(v), x & g.neighbours(v), out);
    p.erase(v);
    x.insert(v);
  }
}

} // namespace detail

inline CliqueSet maximal_cliques(const Graph &g) {
  CliqueSet cs;
  detail::bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, cs.cliques);
  std::sort(cs.cliques.begin(), cs.cliques.end(),
            [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return cs;
}

/// Γ(G): one vertex per maximal clique, adjacent when the cliques meet.
class CliqueGraph {
public:
  explicit CliqueGraph(CliqueSet base) : base_(std::move(base)), adj_(base_.size()) {
    for (std::size_t i = 0; i < base_.size(); ++i)
      for (std::size_t j = i + 1; j < base_.size(); ++j)
        if (!(base_[i] & base_[j]).empty()) {
          adj_[i].push_back(j);
          adj_[j].push_back(i);
        }
  }

  const CliqueSet &base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  const VertexSet &clique(std::size_t i) const { return base_[i]; }
  const std::vector<std::size_t> &neighbours(std::size_t i) const { return adj_[i]; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && !(base_[i] & base_[j]).empty();
  }

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (const auto &a : adj_)
      twice += a.size();
    return twice / 2;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      for (std::size_t j : adj_[i])
        if (i < j)
          out.emplace_back(i, j);
    return out;
  }

  /// BFS distances from clique `source`; -1 where unreachable.
  std::vector<int> distances_from(std::size_t source) const {
    std::vector<int> dist(size(), -1);
    std::vector<std::size_t> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : adj_[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }

  bool connected() const {
    const auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
  }

  /// Throws if Γ is disconnected.
  int diameter() const {
    int diam = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (int x : distances_from(i)) {
        if (x < 0)
          throw disconnected_graph_error("clique graph is disconnected");
        diam = std::max(diam, x);
      }
    return diam;
  }

private:
  CliqueSet base_;
  std::vector<std::vector<std::size_t>> adj_;
};

inline CliqueGraph clique_graph(const Graph &g) {
  if (!is_connected(g))
    throw disconnected_graph_error("clique_graph: input graph is disconnected");
  CliqueGraph cg(maximal_cliques(g));
  if (!cg.connected())
    throw std::logic_error("clique graph of a connected graph came out disconnected");
  return cg;
}

inline bool is_tree(const CliqueGraph &cg) {
  return cg.connected() && cg.num_edges() + 1 == cg.size();
}

struct CliqueDiameters {
  int graph_diameter = 0;
  int clique_graph_diameter = 0;
  bool tree = false;
};

inline CliqueDiameters clique_diameter_relation(const Graph &g) {
  const CliqueGraph cg = clique_graph(g);
  return {diameter(g), cg.diameter(), is_tree(cg)};
}

/// Lifts a shortest path x_0 ~ ... ~ x_d of G to the cliques H_i ⊇ {x_{i-1}, x_i}
/// (the first such clique in canonical order), a shortest path of length d-1 in Γ.
inline std::vector<std::size_t> lift_shortest_path(const Graph &g, const CliqueGraph &cg,
                                                   std::span<const vertex> path) {
  if (path.size() < 2)
    throw std::invalid_argument("lift_shortest_path: path needs at least one edge");
  for (vertex x : path)
    if (x >= g.size())
      throw std::invalid_argument("lift_shortest_path: vertex out of range");
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!g.adjacent(path[i - 1], path[i]))
      throw std::invalid_argument("lift_shortest_path: consecutive vertices not adjacent");
  const auto dist = detail::bfs_distances(g, path.front());
  if (dist[path.back()] != static_cast<int>(path.size() - 1))
    throw std::invalid_argument("lift_shortest_path: path is not a shortest path");

  std::vector<std::size_t> out;
  out.reserve(path.size() - 1);
  for (std::size_t i = 1; i < path.size(); ++i)
    out.push_back(cg.base().first_containing(VertexSet{path[i - 1], path[i]}));
  return out;
}

inline std::vector<std::size_t> lift_shortest_path(const Graph &g,
                                                   std::span<const vertex> path) {
  return lift_shortest_path(g, clique_graph(g), path);
}

/// Dual of lift_shortest_path: for a shortest path H_0 ~ ... ~ H_d in Γ, picks
/// x_i as the smallest vertex of H_{i-1} ∩ H_i. The result x_1 ~ ... ~ x_d is a
/// shortest path of length d-1 in G.
inline std::vector<vertex> shared_vertex_path(const CliqueGraph &cg,
                                              std::span<const std::size_t> clique_path) {
  if (clique_path.size() < 2)
    throw std::invalid_argument("shared_vertex_path: path needs at least one edge");
  for (std::size_t c : clique_path)
    if (c >= cg.size())
      throw std::invalid_argument("shared_vertex_path: clique index out of range");
  for (std::size_t i = 1; i < clique_path.size(); ++i)
    if (!cg.adjacent(clique_path[i - 1], clique_path[i]))
      throw std::invalid_argument("shared_vertex_path: consecutive cliques do not meet");
  const auto dist = cg.distances_from(clique_path.front());
  if (dist[clique_path.back()] != static_cast<int>(clique_path.size() - 1))
    throw std::invalid_argument("shared_vertex_path: path is not a shortest path in Γ");

  std::vector<vertex> out;
  out.reserve(clique_path.size() - 1);
  for (std::size_t i = 1; i < clique_path.size(); ++i)
    out.push_back((cg.clique(clique_path[i - 1]) & cg.clique(clique_path[i])).front());
  return out;
}

/// Shortest path from `from` to `to` in G, preferring smaller vertex indices.
inline std::vector<vertex> shortest_path(const Graph &g, vertex from, vertex to) {
  const auto dist = detail::bfs_distances(g, to);
  if (dist[from] < 0)
    throw disconnected_graph_error("shortest_path: vertices are in different components");
  std::vector<vertex> path{from};
  for (vertex cur = from; cur != to;) {
    for (vertex v : g.neighbours(cur).members())
      if (dist[v] == dist[cur] - 1) {
        cur = v;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

/// Shortest path between cliques `from` and `to` in Γ.
inline std::vector<std::size_t> shortest_clique_path(const CliqueGraph &cg,
                                                     std::size_t from, std::size_t to) {
  const auto dist = cg.distances_from(to);
  if (dist[from] < 0)
    throw disconnected_graph_error("shortest_clique_path: cliques are not connected");
  std::vector<std::size_t> path{from};
  for (std::size_t cur = from; cur != to;) {
    for (std::size_t v : cg.neighbours(cur))
      if (dist[v] == dist[cur] - 1) {
        cur = v;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

} // namespace qec

#endif // QEC_CLIQUES_HPP
