#ifndef QEC_VERIFY_HPP
#define QEC_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "cliques.hpp"
#include "enumerate.hpp"
#include "qec.hpp"

namespace qec {

struct PropertyOutcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_counterexample; // graph6 of the first failing entry
};

struct VerificationSummary {
  std::size_t graphs = 0;
  std::vector<PropertyOutcome> properties;

  bool all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyOutcome &p) { return p.failed == 0; });
  }

  const PropertyOutcome *find(std::string_view name) const {
    for (const auto &p : properties)
      if (p.name == name)
        return &p;
    return nullptr;
  }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Applied to each entry's report before checking; negative controls use it
  /// to plant a wrong verdict.
  std::function<void(const CatalogEntry &, ClassificationReport &)> tamper;
};

namespace detail {

enum class Verdict : std::uint8_t { skipped, pass, fail };

inline constexpr double witness_tolerance = 1e-10;
inline constexpr double form_tolerance = 1e-8;
inline constexpr double stationarity_tolerance = 1e-6;
inline constexpr double monotonicity_tolerance = 1e-8;

/// Everything the property checks need about one catalog entry.
struct EntryFacts {
  const Graph &g;
  DistanceMatrix d;
  CliqueGraph cg;
  std::optional<QecResult> numeric;
  std::optional<DistanceSpectrum> spectrum;
  std::optional<ClassificationReport> report;
};

struct Property {
  const char *name;
  std::function<Verdict(const EntryFacts &)> check;
};

inline Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

inline bool distance_axioms(const Graph &g, const DistanceMatrix &d) {
  const std::size_t n = g.size();
  for (vertex x = 0; x < n; ++x) {
    if (d(x, x) != 0)
      return false;
    for (vertex y = 0; y < n; ++y) {
      if (d(x, y) != d(y, x) || ((d(x, y) == 1) != g.adjacent(x, y)))
        return false;
      for (vertex z = 0; z < n; ++z)
        if (d(x, z) > d(x, y) + d(y, z))
          return false;
    }
  }
  return true;
}

inline bool clique_set_valid(const Graph &g, const CliqueSet &cs) {
  VertexSet covered;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (vertex v : cs[i].members())
      if (!(cs[i] - VertexSet{v}).subset_of(g.neighbours(v)))
        return false;
    // Maximal: no outside vertex is adjacent to every member.
    for (vertex w : (g.vertices() - cs[i]).members())
      if (cs[i].subset_of(g.neighbours(w)))
        return false;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (i != j && cs[i].subset_of(cs[j]))
        return false;
    covered = covered | cs[i];
  }
  if (covered != g.vertices())
    return false;
  for (auto [u, v] : g.edges())
    if (cs.first_containing(VertexSet{u, v}) == cs.size())
      return false;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (!lex_less(cs[i - 1], cs[i]))
      return false;
  return true;
}

/// Every connected induced subgraph that is isometrically embedded has QEC at
/// most that of G.
inline bool isometric_monotone(const EntryFacts &f) {
  const Graph &g = f.g;
  const std::size_t n = g.size();
  const double outer = f.numeric->value;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (s.size() < 2)
      continue;
    const Graph h = induced_subgraph(g, s);
    if (!is_connected(h))
      continue;
    const DistanceMatrix dh = distance_matrix(h);
    const auto members = s.members();
    bool isometric = true;
    for (std::size_t i = 0; i < members.size() && isometric; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (dh(i, j) != f.d(members[i], members[j])) {
          isometric = false;
          break;
        }
    if (!isometric)
      continue;
    if (qec_numeric(dh).value > outer + monotonicity_tolerance)
      return false;
  }
  return true;
}

/// Induced subgraphs of diameter <= 2 are isometric.
inline bool diameter_two_isometric(const Graph &g) {
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.size()); ++bits) {
    const VertexSet s(bits);
    const Graph h = induced_subgraph(g, s);
    if (!is_connected(h) || diameter(h) > 2)
      continue;
    if (!is_isometric_subgraph(g, s))
      return false;
  }
  return true;
}

inline bool lifts_are_shortest(const EntryFacts &f) {
  const Graph &g = f.g;
  for (vertex x = 0; x < g.size(); ++x)
    for (vertex y = x + 1; y < g.size(); ++y) {
      const auto path = shortest_path(g, x, y);
      const auto lifted = lift_shortest_path(g, f.cg, path);
      const std::size_t d = path.size() - 1;
      if (lifted.size() != d)
        return false;
      for (std::size_t i = 1; i < lifted.size(); ++i)
        if (!f.cg.adjacent(lifted[i - 1], lifted[i]))
          return false;
      auto sorted = lifted;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
      if (f.cg.distances_from(lifted.front())[lifted.back()] != static_cast<int>(d) - 1)
        return false;
    }
  return true;
}

inline bool shared_vertices_are_shortest(const EntryFacts &f) {
  for (std::size_t a = 0; a < f.cg.size(); ++a)
    for (std::size_t b = a + 1; b < f.cg.size(); ++b) {
      const auto cpath = shortest_clique_path(f.cg, a, b);
      const auto xs = shared_vertex_path(f.cg, cpath);
      const std::size_t d = cpath.size() - 1;
      if (xs.size() != d)
        return false;
      for (std::size_t i = 1; i < xs.size(); ++i)
        if (!f.g.adjacent(xs[i - 1], xs[i]))
          return false;
      if (f.d(xs.front(), xs.back()) != static_cast<int>(d) - 1)
        return false;
    }
  return true;
}

inline std::vector<Property> properties() {
  using V = Verdict;
  const double t3 = qec_path_closed_form(3);
  const double t4 = qec_path_closed_form(4);
  auto near = [](double a, double b) { return std::abs(a - b) <= boundary_band; };
  return {
      {"distance-metric", [](const EntryFacts &f) { return verdict(distance_axioms(f.g, f.d)); }},
      {"clique-set-valid",
       [](const EntryFacts &f) { return verdict(clique_set_valid(f.g, f.cg.base())); }},
      {"clique-graph-connected", [](const EntryFacts &f) { return verdict(f.cg.connected()); }},
      {"clique-diameter-inequality",
       [](const EntryFacts &f) { return verdict(f.d.max_entry() - 1 <= f.cg.diameter()); }},
      {"clique-diameter-tree-equality",
       [](const EntryFacts &f) {
         if (f.g.size() < 2 || !is_tree(f.cg))
           return V::skipped;
         return verdict(f.d.max_entry() - 1 == f.cg.diameter());
       }},
      {"lift-shortest-path",
       [](const EntryFacts &f) {
         return f.g.size() < 2 ? V::skipped : verdict(lifts_are_shortest(f));
       }},
      {"shared-vertex-path",
       [](const EntryFacts &f) {
         return f.cg.size() < 2 ? V::skipped : verdict(shared_vertices_are_shortest(f));
       }},
      {"diameter-two-isometric", [](const EntryFacts &f) { return verdict(diameter_two_isometric(f.g)); }},
      {"witness-constraints",
       [](const EntryFacts &f) {
         if (!f.numeric)
           return V::skipped;
         const auto &w = f.numeric->witness;
         double sum = 0.0;
         for (double x : w)
           sum += x;
         return verdict(std::abs(dot(w, w) - 1.0) <= witness_tolerance &&
                        std::abs(sum) <= witness_tolerance &&
                        std::abs(quadratic_form(f.d, w) - f.numeric->value) <= form_tolerance);
       }},
      {"witness-stationarity",
       [](const EntryFacts &f) {
         if (!f.numeric)
           return V::skipped;
         return verdict(stationarity_residual(f.d, *f.numeric) <= stationarity_tolerance);
       }},
      {"qec-at-least-minus-one",
       [](const EntryFacts &f) {
         return f.numeric ? verdict(f.numeric->value >= -1.0 - witness_tolerance) : V::skipped;
       }},
      {"spectral-sandwich",
       [](const EntryFacts &f) {
         return f.numeric ? verdict(check_sandwich(*f.spectrum, f.numeric->value)) : V::skipped;
       }},
      {"transmission-regular-equality",
       [](const EntryFacts &f) {
         if (!f.numeric || !f.spectrum->transmission_regular)
           return V::skipped;
         return verdict(std::abs(f.spectrum->delta2() - f.numeric->value) <= sandwich_tolerance);
       }},
      {"qec-minus-one-iff-complete",
       [](const EntryFacts &f) {
         if (!f.numeric)
           return V::skipped;
         const bool complete = f.g.num_edges() == f.g.size() * (f.g.size() - 1) / 2;
         return verdict(complete == (std::abs(f.numeric->value + 1.0) <= witness_tolerance));
       }},
      {"closed-form-agreement",
       [](const EntryFacts &f) {
         if (!f.report || f.report->method == QecMethod::numeric_eigen)
           return V::skipped;
         return verdict(std::abs(f.report->qec - f.numeric->value) <= form_tolerance);
       }},
      {"isometric-monotonicity",
       [](const EntryFacts &f) { return f.numeric ? verdict(isometric_monotone(f)) : V::skipped; }},
      {"structure-below-half",
       [](const EntryFacts &f) {
         if (!f.report || !f.report->below_half)
           return V::skipped;
         const auto &r = *f.report;
         return verdict(r.gamma_is_tree && r.pairwise_ok && r.triple_ok && !r.has_claw &&
                        !r.has_diamond && is_tree(f.cg) && cactus_check(f.cg).cactus_like() &&
                        !has_induced(f.g, Pattern::claw) && !has_induced(f.g, Pattern::diamond));
       }},
      {"forbidden-subgraph-floor",
       [](const EntryFacts &f) {
         if (!f.report || !(f.report->has_claw || f.report->has_diamond))
           return V::skipped;
         return verdict(f.report->qec >= -0.5 - form_tolerance);
       }},
      {"shared-edge-floor",
       [](const EntryFacts &f) {
         if (!f.report || !f.report->two_clique || f.report->two_clique->l < 2)
           return V::skipped;
         return verdict(f.report->qec >= -0.5 - boundary_band);
       }},
      {"diameter-bound-below-path",
       [](const EntryFacts &f) {
         if (!f.report)
           return V::skipped;
         for (int d = 3; d <= 5; ++d)
           if (f.report->qec < qec_path_closed_form(d) - boundary_band &&
               (f.report->diameter > d - 2 || f.report->clique_graph_diameter > d - 3))
             return V::fail;
         return V::pass;
       }},
      {"level-set-complete",
       [near](const EntryFacts &f) {
         if (!f.report)
           return V::skipped;
         return verdict(near(f.report->qec, -1.0) == (f.report->family == Family::complete));
       }},
      {"level-set-p3",
       [near, t3](const EntryFacts &f) {
         if (!f.report)
           return V::skipped;
         return verdict(near(f.report->qec, t3) ==
                        (f.report->ladder_family == LadderFamily::p3));
       }},
      {"level-set-p3-p4",
       [t3, t4](const EntryFacts &f) {
         if (!f.report)
           return V::skipped;
         const double q = f.report->qec;
         const bool inside = q > t3 + boundary_band && q < t4 - boundary_band;
         return verdict(inside == (f.report->ladder_family == LadderFamily::star_pair_p3_p4));
       }},
      {"level-set-p4",
       [near, t4](const EntryFacts &f) {
         if (!f.report)
           return V::skipped;
         const bool family = f.report->ladder_family == LadderFamily::p4_level_pair ||
                             f.report->ladder_family == LadderFamily::p4_level_multi;
         return verdict(near(f.report->qec, t4) == family);
       }},
      {"report-consistency",
       [](const EntryFacts &f) { return f.report ? verdict(f.report->consistent()) : V::skipped; }},
  };
}

inline std::vector<Verdict> check_entry(const std::vector<Property> &props,
                                        const CatalogEntry &entry, const VerifyOptions &opt) {
  if (!is_connected(entry.graph))
    return std::vector<Verdict>(props.size(), Verdict::fail);
  EntryFacts f{entry.graph, distance_matrix(entry.graph), CliqueGraph(maximal_cliques(entry.graph)),
               std::nullopt, std::nullopt, entry.report};
  if (entry.graph.size() >= 2) {
    f.numeric = qec_numeric(f.d);
    f.spectrum = distance_spectrum(f.d);
    if (!f.report)
      f.report = ladder_classify(entry.graph);
  }
  if (f.report && opt.tamper)
    opt.tamper(entry, *f.report);
  std::vector<Verdict> out;
  out.reserve(props.size());
  for (const auto &p : props)
    out.push_back(p.check(f));
  return out;
}

} // namespace detail

/// Runs every structural and numeric invariant over the catalog. Failures are
/// reported per property with the first failing graph in catalog order.
inline VerificationSummary verify_paper(const std::vector<CatalogEntry> &entries,
                                        const VerifyOptions &opt = {}) {
  const auto props = detail::properties();
  std::vector<std::vector<detail::Verdict>> results(entries.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, 64));
  if (workers == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      results[i] = detail::check_entry(props, entries[i], opt);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < entries.size(); i += workers)
          results[i] = detail::check_entry(props, entries[i], opt);
      });
  }

  VerificationSummary summary;
  summary.graphs = entries.size();
  for (std::size_t p = 0; p < props.size(); ++p) {
    PropertyOutcome o;
    o.name = props[p].name;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto v = results[i][p];
      if (v == detail::Verdict::skipped)
        continue;
      ++o.checked;
      if (v == detail::Verdict::fail && o.failed++ == 0)
        o.first_counterexample = entries[i].graph6;
    }
    summary.properties.push_back(std::move(o));
  }
  return summary;
}

} // namespace qec

#endif // QEC_VERIFY_HPP
