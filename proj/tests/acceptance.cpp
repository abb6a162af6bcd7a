// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qec/qec_all.hpp"

using namespace qec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const std::vector<CatalogEntry> &catalog7() {
  static const auto cat = enumerate_catalog(7);
  return cat;
}

const VerificationSummary &summary7() {
  static const auto s = verify_paper(catalog7(), {1, {}});
  return s;
}

void require_property(Outcome &o, const char *name) {
  const auto *p = summary7().find(name);
  o.require(p != nullptr, std::string("missing property ") + name);
  if (!p)
    return;
  o.require(p->checked > 0, std::string(name) + " never checked");
  o.require(p->failed == 0, std::string(name) + " failed " + std::to_string(p->failed) +
                                " times, first " + p->first_counterexample);
}

Outcome path_ladder() {
  Outcome o;
  const auto t0 = Clock::now();
  double prev = -2.0;
  for (int d = 2; d <= 12; ++d) {
    const double q = qec_numeric(distance_matrix(make_path(static_cast<std::size_t>(d)))).value;
    const double closed = -1.0 / (1.0 + std::cos(M_PI / d));
    o.require(std::abs(q - closed) <= 1e-8, "P_" + std::to_string(d) + " numeric " + fmt(q));
    o.require(q > prev, "not increasing at d = " + std::to_string(d));
    o.require(q < -0.5, "P_" + std::to_string(d) + " not below -1/2");
    prev = q;
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + fmt(t) + " s");
  return o;
}

Outcome constants() {
  Outcome o;
  for (std::size_t n = 2; n <= 12; ++n) {
    const double q = qec_numeric(distance_matrix(make_complete(n))).value;
    o.require(std::abs(q + 1.0) <= 1e-10, "K_" + std::to_string(n) + " gives " + fmt(q));
  }
  const double claw = qec_numeric(distance_matrix(make_complete_bipartite(1, 3))).value;
  o.require(std::abs(claw + 0.5) <= 1e-10, "K_{1,3} gives " + fmt(claw));
  const double diamond = qec_numeric(distance_matrix(make_two_clique(2, 3, 3))).value;
  o.require(std::abs(diamond + 0.5) <= 1e-10, "K_{1,1,2} gives " + fmt(diamond));
  const double multi = qec_numeric(distance_matrix(make_star_product(2, {3, 2}))).value;
  const double expect = -2.0 * (6.0 - std::sqrt(21.0)) / 5.0;
  o.require(std::abs(multi - expect) <= 1e-10, "K_2*(K_3,K_2) gives " + fmt(multi));
  return o;
}

Outcome two_clique_grid() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  for (std::int64_t l = 1; l <= 4; ++l)
    for (std::int64_t m = l + 1; m <= 10; ++m)
      for (std::int64_t n = l + 1; n <= 10; ++n) {
        const TwoCliqueParams p{l, m, n};
        const double forms[4] = {
            qec_two_clique(p), qec_two_clique_private_form(p),
            appendix_stationary_solve(p).front().lambda,
            qec_numeric(distance_matrix(make_two_clique(p))).value};
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            o.require(std::abs(forms[i] - forms[j]) <= 1e-8,
                      "(l,m,n) = (" + std::to_string(l) + "," + std::to_string(m) + "," +
                          std::to_string(n) + ") forms " + std::to_string(i) + "," +
                          std::to_string(j) + " differ");
        ++cases;
      }
  const double t = seconds_since(t0);
  o.require(t < 10.0, "runtime " + fmt(t) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases";
  return o;
}

Outcome structure_theorem() {
  Outcome o;
  const auto t0 = Clock::now();
  summary7();
  const double t = seconds_since(t0);
  std::size_t with_qec = 0;
  for (const auto &e : catalog7())
    with_qec += e.report.has_value();
  o.require(with_qec == 853 + 112 + 21 + 6 + 2 + 1, "catalog has " + std::to_string(with_qec));
  require_property(o, "structure-below-half");
  require_property(o, "report-consistency");
  std::size_t below = 0;
  for (const auto &e : catalog7())
    if (e.report && e.report->below_half) {
      ++below;
      o.require(!has_induced(e.graph, Pattern::claw) && !has_induced(e.graph, Pattern::diamond) &&
                    cactus_check(e.graph).cactus_like(),
                "counterexample " + e.graph6);
    }
  o.require(t < 300.0, "runtime " + fmt(t) + " s");
  if (o.pass)
    o.detail = std::to_string(below) + " graphs below -1/2, catalog and checks in " + fmt(t) + " s";
  return o;
}

Outcome diameter_relations() {
  Outcome o;
  require_property(o, "clique-diameter-inequality");
  require_property(o, "clique-diameter-tree-equality");
  return o;
}

Outcome spectral_sandwich() {
  Outcome o;
  require_property(o, "spectral-sandwich");
  require_property(o, "transmission-regular-equality");
  const auto d = distance_matrix(make_path(4));
  const auto spec = distance_spectrum(d);
  const double q = qec_numeric(d).value;
  o.require(!spec.transmission_regular, "P_4 reported transmission regular");
  o.require(std::abs(spec.delta2() - q) <= 1e-8, "delta2(P_4) = " + fmt(spec.delta2()));
  return o;
}

// Expected members of each level set, built from the constructions and
// compared by canonical form.
Outcome level_sets() {
  Outcome o;
  std::set<std::string> complete, p3, p3_p4, p4;
  for (std::size_t n = 2; n <= 7; ++n)
    complete.insert(canonical_graph6(make_complete(n)));
  p3.insert(canonical_graph6(make_path(3)));
  for (std::size_t m = 3; m + 1 <= 7; ++m)
    p3_p4.insert(canonical_graph6(make_two_clique(1, m, 2)));
  p3_p4.insert(canonical_graph6(make_two_clique(1, 3, 3)));
  p4.insert(canonical_graph6(make_two_clique(1, 4, 3)));
  for (std::size_t hub = 2; hub <= 7; ++hub)
    for (std::size_t s = 2; s <= hub && hub + s <= 7; ++s)
      p4.insert(canonical_graph6(make_star_product(hub, std::vector<std::size_t>(s, 2))));

  const double t3 = -2.0 / 3.0, t4 = -(2.0 - std::sqrt(2.0)), band = 1e-9;
  std::size_t sizes[4] = {};
  for (const auto &e : catalog7()) {
    if (!e.report)
      continue;
    const double q = qec_numeric(distance_matrix(e.graph)).value;
    const bool in[4] = {std::abs(q + 1.0) <= band, std::abs(q - t3) <= band,
                        q > t3 + band && q < t4 - band, std::abs(q - t4) <= band};
    const bool expected[4] = {complete.count(e.graph6) > 0, p3.count(e.graph6) > 0,
                              p3_p4.count(e.graph6) > 0, p4.count(e.graph6) > 0};
    for (int k = 0; k < 4; ++k) {
      o.require(in[k] == expected[k], "level set " + std::to_string(k) + " mismatch at " + e.graph6);
      sizes[k] += in[k];
    }
  }
  require_property(o, "level-set-complete");
  require_property(o, "level-set-p3");
  require_property(o, "level-set-p3-p4");
  require_property(o, "level-set-p4");
  if (o.pass)
    o.detail = "sizes " + std::to_string(sizes[0]) + "/" + std::to_string(sizes[1]) + "/" +
               std::to_string(sizes[2]) + "/" + std::to_string(sizes[3]);
  return o;
}

Outcome star_pair_boundaries() {
  Outcome o;
  const auto t0 = Clock::now();
  const double threshold = -(5.0 - std::sqrt(5.0)) / 5.0;
  auto below = [&](std::int64_t m, std::int64_t n) { return qec_star_product_pair(m, n) < threshold; };
  const std::pair<std::int64_t, std::int64_t> inside[] = {{54, 3}, {7, 4}, {5, 5}};
  const std::pair<std::int64_t, std::int64_t> outside[] = {{55, 3}, {8, 4}, {6, 5}};
  for (int k = 0; k < 3; ++k) {
    o.require(below(inside[k].first, inside[k].second),
              "(" + std::to_string(inside[k].first) + "," + std::to_string(inside[k].second) +
                  ") not below threshold");
    o.require(!below(outside[k].first, outside[k].second),
              "(" + std::to_string(outside[k].first) + "," + std::to_string(outside[k].second) +
                  ") below threshold");
  }
  const double t = seconds_since(t0);
  o.require(t < 1e-3, "runtime " + fmt(t) + " s");
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const auto frozen = oracle::frozen_connected_counts();
  const std::size_t expected[] = {1, 2, 6, 21, 112, 853};
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto got = enumerate_connected_graphs(n).size();
    const auto it = frozen.find(n);
    o.require(it != frozen.end(), "fixture lacks n = " + std::to_string(n));
    if (it != frozen.end())
      o.require(got == it->second, "n = " + std::to_string(n) + " enumerated " +
                                       std::to_string(got) + ", oracle " + std::to_string(it->second));
    o.require(got == expected[n - 2], "n = " + std::to_string(n) + " enumerated " + std::to_string(got));
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"path ladder", path_ladder},
      {"constants", constants},
      {"two-clique grid", two_clique_grid},
      {"structure below -1/2, n <= 7", structure_theorem},
      {"diameter relations, n <= 7", diameter_relations},
      {"spectral sandwich, n <= 7", spectral_sandwich},
      {"level sets, n <= 7", level_sets},
      {"star pair boundaries", star_pair_boundaries},
      {"enumeration counts", enumeration_counts},
  };
  int failures = 0;
  int index = 0;
  for (const auto &[name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %d %s%s%s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
