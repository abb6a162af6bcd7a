#ifndef QEC_REPORT_JSON_HPP
#define QEC_REPORT_JSON_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "classify.hpp"
#include "cliques.hpp"
#include "graph.hpp"
#include "qec.hpp"
#include "two_clique.hpp"
#include "verify.hpp"

namespace qec {

using json = nlohmann::json;

/// Rounds to 15 significant digits; the JSON writer then prints the shortest
/// form, which is at most those 15 digits.
inline double round15(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline json real_vector(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs)
    a.push_back(round15(x));
  return a;
}

inline json vertex_list(VertexSet s) { return s.members(); }

inline json to_json(const TwoCliqueParams &p) { return {{"l", p.l}, {"m", p.m}, {"n", p.n}}; }

inline json to_json(const QecResult &r) {
  return {{"value", round15(r.value)},
          {"witness", real_vector(r.witness)},
          {"method", to_string(r.method)},
          {"residual", round15(r.residual)}};
}

inline json to_json(const DistanceSpectrum &s) {
  return {{"eigenvalues", real_vector(s.eigenvalues)},
          {"delta1", round15(s.delta1())},
          {"delta2", round15(s.delta2())},
          {"transmission_regular", s.transmission_regular}};
}

inline json to_json(const CliqueGraph &cg) {
  json cliques = json::array();
  for (const auto &c : cg.base())
    cliques.push_back(vertex_list(c));
  json edges = json::array();
  for (auto [i, j] : cg.edges())
    edges.push_back({i, j});
  return {{"cliques", cliques}, {"gamma_edges", edges}, {"gamma_is_tree", is_tree(cg)}};
}

inline json to_json(const LadderPosition &p) {
  json j{{"kind", to_string(p.kind)}};
  if (p.kind == LadderKind::equals || p.kind == LadderKind::between ||
      p.kind == LadderKind::beyond_ladder)
    j["d"] = p.d;
  return j;
}

inline json to_json(const ClassificationReport &r) {
  json j{{"qec", round15(r.qec)},
         {"method", to_string(r.method)},
         {"below_half", r.below_half},
         {"ladder_position", to_json(r.ladder_position)},
         {"gamma_is_tree", r.gamma_is_tree},
         {"pairwise_ok", r.pairwise_ok},
         {"triple_ok", r.triple_ok},
         {"has_claw", r.has_claw},
         {"has_diamond", r.has_diamond},
         {"family", to_string(r.family)},
         {"ladder_family", to_string(r.ladder_family)},
         {"diameter", r.diameter},
         {"clique_graph_diameter", r.clique_graph_diameter},
         {"clique_count", r.clique_count}};
  j["two_clique"] = r.two_clique ? to_json(*r.two_clique) : json(nullptr);
  if (r.star_product)
    j["star_product"] = {{"hub", r.star_product->hub}, {"parts", r.star_product->parts}};
  else
    j["star_product"] = nullptr;
  return j;
}

inline json to_json(const StationaryPoint &sp) {
  const char *branch = sp.branch == StationaryBranch::plus    ? "plus"
                       : sp.branch == StationaryBranch::minus ? "minus"
                                                              : "degenerate";
  return {{"xi", round15(sp.xi)},         {"eta", round15(sp.eta)},
          {"zeta", round15(sp.zeta)},     {"lambda", round15(sp.lambda)},
          {"mu", round15(sp.mu)},         {"delta", round15(sp.delta)},
          {"branch", branch},             {"admissible", sp.admissible}};
}

inline json to_json(const VerificationSummary &s) {
  json props = json::array();
  for (const auto &p : s.properties) {
    json o{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}};
    o["first_counterexample"] = p.failed ? json(p.first_counterexample) : json(nullptr);
    props.push_back(std::move(o));
  }
  return {{"graphs", s.graphs}, {"all_passed", s.all_passed()}, {"properties", props}};
}

} // namespace qec

#endif // QEC_REPORT_JSON_HPP
