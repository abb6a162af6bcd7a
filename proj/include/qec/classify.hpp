#ifndef QEC_CLASSIFY_HPP
#define QEC_CLASSIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cliques.hpp"
#include "graph.hpp"
#include "qec.hpp"
#include "two_clique.hpp"

namespace qec {

// --- forbidden induced subgraphs -----------------------------------------

enum class Pattern { claw, diamond };

/// Whether some 4-vertex subset induces the claw K_{1,3} or the diamond K_4 - e.
///
/// On four vertices both patterns are fixed by their degree sequences: the
/// diamond is the only graph with 5 edges, the claw the only 3-edge graph
/// with a vertex of degree 3.
inline bool has_induced(const Graph &g, Pattern pattern) {
  const std::size_t n = g.size();
  for (vertex a = 0; a < n; ++a)
    for (vertex b = a + 1; b < n; ++b)
      for (vertex c = b + 1; c < n; ++c)
        for (vertex e = c + 1; e < n; ++e) {
          const VertexSet quad{a, b, c, e};
          std::size_t edges = 0, max_deg = 0;
          for (vertex v : {a, b, c, e}) {
            const std::size_t dv = (g.neighbours(v) & quad).size();
            edges += dv;
            max_deg = std::max(max_deg, dv);
          }
          edges /= 2;
          if (pattern == Pattern::diamond && edges == 5)
            return true;
          if (pattern == Pattern::claw && edges == 3 && max_deg == 3)
            return true;
        }
  return false;
}

// --- cactus structure ----------------------------------------------------

struct CactusVerdict {
  bool tree = false;        // Γ(G) is a tree
  bool pairwise_ok = false; // |H_i ∩ H_j| <= 1 for all i != j
  bool triple_ok = false;   // H_i ∩ H_j ∩ H_k = ∅ for distinct i, j, k

  bool cactus_like() const { return tree && pairwise_ok && triple_ok; }
};

inline CactusVerdict cactus_check(const CliqueGraph &cg) {
  CactusVerdict v{is_tree(cg), true, true};
  const auto &h = cg.base();
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      const VertexSet ij = h[i] & h[j];
      if (ij.size() > 1)
        v.pairwise_ok = false;
      if (ij.empty())
        continue;
      for (std::size_t k = j + 1; k < h.size(); ++k)
        if (!(ij & h[k]).empty())
          v.triple_ok = false;
    }
  return v;
}

inline CactusVerdict cactus_check(const Graph &g) { return cactus_check(clique_graph(g)); }

// --- structural family recognition ---------------------------------------

enum class Family { complete, two_clique_star, star_product_multi, other };

constexpr std::string_view to_string(Family f) {
  switch (f) {
  case Family::complete:
    return "complete";
  case Family::two_clique_star:
    return "two-clique-star";
  case Family::star_product_multi:
    return "star-product-multi";
  case Family::other:
    return "other";
  }
  return "unknown";
}

/// K_n * (K_{m_1}, ..., K_{m_s}) with m_1 >= ... >= m_s.
struct StarProductShape {
  std::size_t hub = 0;
  std::vector<std::size_t> parts;

  friend bool operator==(const StarProductShape &, const StarProductShape &) = default;
};

struct FamilyInfo {
  Family family = Family::other;
  /// Set whenever G has exactly two maximal cliques (any l), with m >= n.
  std::optional<TwoCliqueParams> two_clique;
  /// Set when Γ(G) is a star K_{1,s}, s >= 2, and G is K_n * (K_{m_1}, ..., K_{m_s}).
  std::optional<StarProductShape> star_product;
};

/// Recognises the families from the clique census and the shape of Γ(G).
inline FamilyInfo recognise_family(const CliqueGraph &cg) {
  FamilyInfo info;
  const auto &h = cg.base();
  if (h.size() == 1) {
    info.family = h[0].size() >= 2 ? Family::complete : Family::other;
    return info;
  }
  if (h.size() == 2) {
    const auto shared = static_cast<std::int64_t>((h[0] & h[1]).size());
    auto a = static_cast<std::int64_t>(h[0].size());
    auto b = static_cast<std::int64_t>(h[1].size());
    if (a < b)
      std::swap(a, b);
    if (shared >= 1) {
      info.two_clique = TwoCliqueParams{shared, a, b};
      info.family = shared == 1 ? Family::two_clique_star : Family::other;
    }
    return info;
  }

  // Γ(G) = K_{1,s}: one centre meeting every other clique, leaves pairwise disjoint.
  const std::size_t s = h.size() - 1;
  std::size_t centre = h.size();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cg.neighbours(i).size() == s)
      centre = i;
  if (centre == h.size() || cg.num_edges() != s)
    return info;
  StarProductShape shape{h[centre].size(), {}};
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == centre)
      continue;
    if ((h[i] & h[centre]).size() != 1)
      return info;
    shape.parts.push_back(h[i].size());
  }
  std::sort(shape.parts.rbegin(), shape.parts.rend());
  info.family = Family::star_product_multi;
  info.star_product = std::move(shape);
  return info;
}

inline bool is_path_graph(const Graph &g) {
  if (g.size() < 2 || g.num_edges() + 1 != g.size() || !is_connected(g))
    return false;
  for (vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) > 2)
      return false;
  return true;
}

// --- QEC with closed forms -----------------------------------------------

/// QEC of g, using a closed form when g is complete, a path, or has exactly
/// two maximal cliques; the numeric eigen route otherwise. The witness always
/// comes from the numeric route.
inline QecResult compute_qec(const Graph &g, const DistanceMatrix &d, const CliqueSet &cliques) {
  if (g.size() < 2)
    throw std::invalid_argument("compute_qec: QEC needs at least 2 vertices");
  QecResult r = qec_numeric(d);
  if (cliques.size() == 1) {
    r.value = -1.0;
    r.method = QecMethod::closed_form_complete;
  } else if (is_path_graph(g)) {
    r.value = qec_path_closed_form(static_cast<int>(g.size()));
    r.method = QecMethod::closed_form_path;
  } else if (cliques.size() == 2) {
    const auto shared = static_cast<std::int64_t>((cliques[0] & cliques[1]).size());
    r.value = qec_two_clique({shared, static_cast<std::int64_t>(cliques[0].size()),
                              static_cast<std::int64_t>(cliques[1].size())});
    r.method = QecMethod::closed_form_two_clique;
  }
  return r;
}

inline QecResult compute_qec(const Graph &g) {
  return compute_qec(g, distance_matrix(g), maximal_cliques(g));
}

// --- the QEC(P_d) ladder --------------------------------------------------

/// Half-width of the band around a threshold inside which a value counts as
/// equal to it.
inline constexpr double boundary_band = 1e-9;

enum class LadderKind {
  equals,        // within the band of QEC(P_d)
  between,       // strictly between QEC(P_d) and QEC(P_{d+1})
  beyond_ladder, // above QEC(P_{d_max}) but below -1/2
  at_least_half, // above -1/2
  boundary,      // within the band of -1/2
};

constexpr std::string_view to_string(LadderKind k) {
  switch (k) {
  case LadderKind::equals:
    return "equals";
  case LadderKind::between:
    return "between";
  case LadderKind::beyond_ladder:
    return "beyond-ladder";
  case LadderKind::at_least_half:
    return "at-least-half";
  case LadderKind::boundary:
    return "boundary";
  }
  return "unknown";
}

struct LadderPosition {
  LadderKind kind = LadderKind::at_least_half;
  /// equals: d; between: lower index d (upper is d+1); beyond_ladder: d_max.
  int d = 0;

  friend bool operator==(const LadderPosition &, const LadderPosition &) = default;
};

inline LadderPosition ladder_position(double q, int d_max) {
  if (d_max < 3)
    throw std::invalid_argument("ladder_position: d_max must be >= 3");
  for (int d = 2; d <= d_max; ++d)
    if (std::abs(q - qec_path_closed_form(d)) <= boundary_band)
      return {LadderKind::equals, d};
  if (std::abs(q + 0.5) <= boundary_band)
    return {LadderKind::boundary, 0};
  if (q > -0.5)
    return {LadderKind::at_least_half, 0};
  if (q < qec_path_closed_form(2))
    throw std::logic_error("QEC below -1 cannot occur");
  int lower = 2;
  while (lower < d_max && q > qec_path_closed_form(lower + 1))
    ++lower;
  if (lower == d_max)
    return {LadderKind::beyond_ladder, d_max};
  return {LadderKind::between, lower};
}

/// Placement of G among the known classification results along QEC(P_d).
enum class LadderFamily {
  none,
  complete,           // QEC = -1: K_n, n >= 2
  p3,                 // QEC = -2/3: P_3 = K_2 * K_2
  star_pair_p3_p4,    // K_m * K_2 (m >= 3) or K_3 * K_3
  p4_level_pair,      // K_4 * K_3
  p4_level_multi,     // K_n * (K_2, ..., K_2), n >= s >= 2
  star_pair_p4_p5,    // K_m * K_n: n = 3, 5 <= m <= 54; n = 4, 4 <= m <= 7; m = n = 5
  multi_open,         // K_n * (K_{m_1}, ...) with m_1 >= 3 below QEC(P_5): not classified
};

constexpr std::string_view to_string(LadderFamily f) {
  switch (f) {
  case LadderFamily::none:
    return "none";
  case LadderFamily::complete:
    return "complete";
  case LadderFamily::p3:
    return "P3";
  case LadderFamily::star_pair_p3_p4:
    return "Km*K2 or K3*K3";
  case LadderFamily::p4_level_pair:
    return "K4*K3";
  case LadderFamily::p4_level_multi:
    return "Kn*(K2,...,K2)";
  case LadderFamily::star_pair_p4_p5:
    return "Km*Kn between P4 and P5";
  case LadderFamily::multi_open:
    return "star-product-multi, classification open";
  }
  return "unknown";
}

/// Structural rule for the ladder families; `qec` is consulted only to
/// decide whether a multi-star product lies below QEC(P_5).
inline LadderFamily ladder_family(const FamilyInfo &info, double qec) {
  if (info.family == Family::complete)
    return LadderFamily::complete;
  if (info.family == Family::two_clique_star) {
    const auto m = info.two_clique->m, n = info.two_clique->n; // m >= n
    if (m == 2 && n == 2)
      return LadderFamily::p3;
    if ((n == 2 && m >= 3) || (m == 3 && n == 3))
      return LadderFamily::star_pair_p3_p4;
    if (m == 4 && n == 3)
      return LadderFamily::p4_level_pair;
    if ((n == 3 && m >= 5 && m <= 54) || (n == 4 && m >= 4 && m <= 7) || (m == 5 && n == 5))
      return LadderFamily::star_pair_p4_p5;
    return LadderFamily::none;
  }
  if (info.family == Family::star_product_multi) {
    const auto &parts = info.star_product->parts;
    if (std::all_of(parts.begin(), parts.end(), [](std::size_t m) { return m == 2; }))
      return LadderFamily::p4_level_multi;
    if (qec < qec_path_closed_form(5) - boundary_band)
      return LadderFamily::multi_open;
  }
  return LadderFamily::none;
}

struct ClassificationReport {
  double qec = 0.0;
  QecMethod method = QecMethod::numeric_eigen;
  bool below_half = false; // qec < -1/2 - band
  LadderPosition ladder_position;
  bool gamma_is_tree = false;
  bool pairwise_ok = false;
  bool triple_ok = false;
  bool has_claw = false;
  bool has_diamond = false;
  Family family = Family::other;
  LadderFamily ladder_family = LadderFamily::none;
  std::optional<TwoCliqueParams> two_clique;
  std::optional<StarProductShape> star_product;
  int diameter = 0;
  int clique_graph_diameter = 0;
  std::size_t clique_count = 0;

  /// Below -1/2 forces the cactus structure and excludes claw and diamond.
  bool consistent() const {
    return !below_half ||
           (gamma_is_tree && pairwise_ok && triple_ok && !has_claw && !has_diamond);
  }
};

inline ClassificationReport ladder_classify(const Graph &g, int d_max = 5) {
  if (g.size() < 2)
    throw std::invalid_argument("ladder_classify: QEC needs at least 2 vertices");
  if (d_max < 3)
    throw std::invalid_argument("ladder_classify: d_max must be >= 3");
  const DistanceMatrix d = distance_matrix(g);
  const CliqueGraph cg(maximal_cliques(g));
  const QecResult q = compute_qec(g, d, cg.base());
  const CactusVerdict cactus = cactus_check(cg);
  const FamilyInfo family = recognise_family(cg);

  ClassificationReport r;
  r.qec = q.value;
  r.method = q.method;
  r.below_half = q.value < -0.5 - boundary_band;
  r.ladder_position = ladder_position(q.value, d_max);
  r.gamma_is_tree = cactus.tree;
  r.pairwise_ok = cactus.pairwise_ok;
  r.triple_ok = cactus.triple_ok;
  r.has_claw = has_induced(g, Pattern::claw);
  r.has_diamond = has_induced(g, Pattern::diamond);
  r.family = family.family;
  r.ladder_family = ladder_family(family, q.value);
  r.two_clique = family.two_clique;
  r.star_product = family.star_product;
  r.diameter = d.max_entry();
  r.clique_graph_diameter = cg.diameter();
  r.clique_count = cg.size();
  return r;
}

} // namespace qec

#endif // QEC_CLASSIFY_HPP
