// qec: command-line front end for the QEC toolkit.
//
//   qec compute  [<graph6|file>] [--format graph6|edgelist]
//   qec spectrum [<graph6|file>]
//   qec cliques  [<graph6|file>]
//   qec classify [<graph6|file>] [--d-max 5]
//   qec enumerate --n <k>
//   qec verify --max-n <k> [--threads t] [--input <file>]
//   qec two-clique --l <l> --m <m> --n <n>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qec/qec_all.hpp"
#include "qec/report_json.hpp"

namespace {

using qec::json;

struct InputSpec {
  std::string source;
  std::string format = "graph6";
};

std::vector<qec::Graph> read_graphs(const InputSpec &in) {
  std::string text;
  if (in.source.empty() || in.source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (std::filesystem::is_regular_file(in.source)) {
    std::ifstream f(in.source);
    if (!f)
      throw std::runtime_error("cannot open " + in.source);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    text = in.source;
  }
  if (in.format == "edgelist")
    return {qec::from_edge_list(text)};
  std::istringstream ss(text);
  auto graphs = qec::read_graph6_stream(ss);
  if (graphs.empty())
    throw qec::parse_error("no graph in input");
  return graphs;
}

void add_input(CLI::App *cmd, InputSpec &in) {
  cmd->add_option("input", in.source, "graph6 string or file (stdin when omitted)");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

void emit(const json &j) { std::cout << j.dump() << '\n'; }

json graph_header(const qec::Graph &g) {
  return {{"graph6", qec::to_graph6(g)}, {"n", g.size()}};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quadratic embedding constants of graphs"};
  app.require_subcommand(1);

  InputSpec compute_in, spectrum_in, cliques_in, classify_in;
  int d_max = 5;
  std::size_t enum_n = 0;
  std::size_t max_n = 0;
  unsigned threads = 1;
  std::string verify_input;
  std::int64_t l = 0, m = 0, n = 0;

  auto *compute = app.add_subcommand("compute", "QEC and a maximising witness");
  add_input(compute, compute_in);
  auto *spectrum = app.add_subcommand("spectrum", "distance spectrum");
  add_input(spectrum, spectrum_in);
  auto *cliques = app.add_subcommand("cliques", "maximal cliques and clique graph edges");
  add_input(cliques, cliques_in);
  auto *classify = app.add_subcommand("classify", "classification report");
  add_input(classify, classify_in);
  classify->add_option("--d-max", d_max, "largest path index on the ladder")
      ->check(CLI::Range(3, 64));
  auto *enumerate = app.add_subcommand("enumerate", "connected graphs on n vertices, graph6");
  enumerate->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(1, 8));
  auto *verify = app.add_subcommand("verify", "check all invariants over a catalog");
  auto *max_n_opt = verify->add_option("--max-n", max_n, "enumerate all connected graphs up to this size")
                        ->check(CLI::Range(1, 8));
  verify->add_option("--input", verify_input, "graph6 file to verify instead of the built-in catalog")
      ->excludes(max_n_opt);
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  auto *two = app.add_subcommand("two-clique", "closed form and stationary points for K_m ∪_l K_n");
  two->add_option("--l", l, "shared vertices")->required();
  two->add_option("--m", m, "first clique size")->required();
  two->add_option("--n", n, "second clique size")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      for (const auto &g : read_graphs(compute_in)) {
        json j = graph_header(g);
        j["qec"] = qec::to_json(qec::compute_qec(g));
        emit(j);
      }
    } else if (*spectrum) {
      for (const auto &g : read_graphs(spectrum_in)) {
        json j = graph_header(g);
        j["spectrum"] = qec::to_json(qec::distance_spectrum(qec::distance_matrix(g)));
        emit(j);
      }
    } else if (*cliques) {
      for (const auto &g : read_graphs(cliques_in)) {
        json j = graph_header(g);
        j.update(qec::to_json(qec::clique_graph(g)));
        emit(j);
      }
    } else if (*classify) {
      for (const auto &g : read_graphs(classify_in)) {
        json j = graph_header(g);
        j["report"] = qec::to_json(qec::ladder_classify(g, d_max));
        emit(j);
      }
    } else if (*enumerate) {
      for (const auto &g : qec::enumerate_connected_graphs(enum_n))
        std::cout << qec::to_graph6(g) << '\n';
    } else if (*verify) {
      std::vector<qec::CatalogEntry> entries;
      if (!verify_input.empty()) {
        for (const auto &g : read_graphs({verify_input, "graph6"})) {
          if (!qec::is_connected(g))
            throw std::invalid_argument("verify: disconnected graph " + qec::to_graph6(g));
          qec::CatalogEntry e;
          e.graph6 = qec::to_graph6(g);
          e.n = g.size();
          e.graph = g;
          if (g.size() >= 2)
            e.report = qec::ladder_classify(g);
          entries.push_back(std::move(e));
        }
      } else {
        if (max_n == 0)
          throw std::invalid_argument("verify: pass --max-n or --input");
        entries = qec::enumerate_catalog(max_n);
      }
      const auto summary = qec::verify_paper(entries, {threads, {}});
      std::cout << qec::to_json(summary).dump(2) << '\n';
      return summary.all_passed() ? 0 : 1;
    } else if (*two) {
      const qec::TwoCliqueParams p{l, m, n};
      p.validate();
      json j{{"params", qec::to_json(p)},
             {"qec", qec::round15(qec::qec_two_clique(p))},
             {"qec_private_form", qec::round15(qec::qec_two_clique_private_form(p))}};
      if (p.vertex_count() <= static_cast<std::int64_t>(qec::max_vertices))
        j["qec_numeric"] = qec::round15(
            qec::qec_numeric(qec::distance_matrix(qec::make_two_clique(p))).value);
      json points = json::array();
      for (const auto &sp : qec::appendix_stationary_solve(p))
        points.push_back(qec::to_json(sp));
      j["stationary_points"] = points;
      emit(j);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
