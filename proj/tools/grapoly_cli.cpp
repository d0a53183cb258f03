// Command-line front end. Everything goes through the C API in grapoly.h;
// this binary only parses flags, formats JSON and maps statuses to exit
// codes (0 ok, 1 verification/numeric failure, 2 input error, 3 guard).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "grapoly.h"

namespace {

int exit_code_for(gp_status status) {
  switch (status) {
    case GP_OK: return 0;
    case GP_ERROR_VERIFY: return 1;
    case GP_ERROR_INPUT: return 2;
    case GP_ERROR_GUARD: return 3;
    case GP_ERROR_DOMAIN: return 2;
    case GP_ERROR_NUMERIC: return 1;
    default: return 1;
  }
}

struct GraphHandle {
  gp_graph* ptr = nullptr;
  ~GraphHandle() { gp_graph_free(ptr); }
};

int load_graph(const std::string& path, const std::string& named, GraphHandle& handle) {
  gp_status status;
  if (!named.empty())
    status = gp_graph_named(named.c_str(), &handle.ptr);
  else
    status = gp_graph_from_file(path.c_str(), &handle.ptr);
  if (status != GP_OK) {
    std::cerr << "error: " << gp_last_error() << "\n";
    return exit_code_for(status);
  }
  return 0;
}

int emit_json(char* json, bool compact, const std::string& output_path) {
  std::string text;
  if (compact) {
    text = json;
  } else {
    text = nlohmann::json::parse(json).dump(2);
  }
  gp_string_free(json);
  text += "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

int finish(gp_status status, char* json, bool compact, const std::string& output_path) {
  if (json == nullptr) {
    std::cerr << "error: " << gp_last_error() << "\n";
    return exit_code_for(status);
  }
  const int emit_rc = emit_json(json, compact, output_path);
  if (emit_rc != 0) return emit_rc;
  if (status != GP_OK) {
    std::cerr << "error: " << gp_last_error() << "\n";
    return exit_code_for(status);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph polynomials with an Ising/Bethe verification harness"};
  app.require_subcommand(1);

  std::string graph_path, named, output_path, algorithm = "enum", route = "spec", what;
  int max_edges = 0, max_vertices = 0, draws = 10, random_count = -1;
  unsigned long seed = 0;
  double tol = 1e-8;
  bool compact = false, self_test = false, timings = false;

  auto add_common = [&](CLI::App* cmd, bool needs_graph) {
    auto* g = cmd->add_option("--graph", graph_path, "edge-list file");
    auto* n = cmd->add_option("--named", named, "built-in graph name");
    if (needs_graph) {
      g->check(CLI::ExistingFile);
      n->excludes(g);
      cmd->final_callback([g, n, cmd]() {
        if (g->count() == 0 && n->count() == 0)
          throw CLI::RequiredError(cmd->get_name() + " needs --graph or --named");
      });
    }
    cmd->add_option("--output", output_path, "write JSON here instead of stdout");
    cmd->add_flag("--json", compact, "compact single-line JSON");
  };

  auto* compute = app.add_subcommand("compute", "compute a polynomial");
  compute->add_option("what", what, "theta | omega | tutte | matching")->required();
  compute->add_option("--algorithm", algorithm, "theta algorithm: enum | dc | vexp");
  compute->add_option("--route", route, "omega route: spec | vexp | dc | md | det");
  compute->add_option("--max-edges", max_edges, "enumeration guard override");
  compute->add_option("--max-vertices", max_vertices, "state-sum guard override");
  add_common(compute, true);

  auto* verify = app.add_subcommand("verify", "run the invariant suite over the corpus");
  verify->add_option("--max-edges", max_edges, "enumeration guard override");
  verify->add_option("--max-vertices", max_vertices, "state-sum guard override");
  verify->add_option("--seed", seed, "seed for random graphs and draws");
  verify->add_option("--random-count", random_count, "number of random corpus graphs");
  verify->add_flag("--self-test", self_test, "only run a corrupted expectation");
  verify->add_flag("--timings", timings, "include per-check elapsed milliseconds");
  add_common(verify, false);

  auto* zeros = app.add_subcommand("zeros", "roots of omega with the annulus check");
  zeros->add_option("--max-edges", max_edges, "enumeration guard override");
  add_common(zeros, true);

  auto* count = app.add_subcommand("count", "sub-coregraph counts");
  count->add_option("what", what, "subcoregraphs | by-degree3")->required();
  count->add_option("--max-edges", max_edges, "enumeration guard override");
  add_common(count, true);

  auto* bethe = app.add_subcommand("bethe", "Bethe approximation ratio report");
  bethe->add_option("--seed", seed, "seed for parameter draws");
  bethe->add_option("--draws", draws, "number of parameter draws");
  bethe->add_option("--tol", tol, "relative error tolerance");
  add_common(bethe, true);

  auto* corpus = app.add_subcommand("corpus", "list the built-in corpus");
  corpus->add_option("--output", output_path, "write JSON here instead of stdout");
  corpus->add_flag("--json", compact, "compact single-line JSON");

  CLI11_PARSE(app, argc, argv);

  char* json = nullptr;

  if (corpus->parsed()) {
    const gp_status status = gp_corpus_list(&json);
    return finish(status, json, compact, output_path);
  }

  if (verify->parsed()) {
    GraphHandle extra;
    if (!graph_path.empty() || !named.empty()) {
      const int rc = load_graph(graph_path, named, extra);
      if (rc != 0) return rc;
    }
    const gp_status status =
        gp_verify(extra.ptr, named.empty() ? "user" : named.c_str(), max_edges, max_vertices,
                  seed, random_count, self_test ? 1 : 0, timings ? 1 : 0, &json);
    return finish(status, json, compact, output_path);
  }

  GraphHandle graph;
  const int rc = load_graph(graph_path, named, graph);
  if (rc != 0) return rc;

  gp_status status = GP_ERROR_INPUT;
  if (compute->parsed()) {
    if (what == "theta")
      status = gp_compute_theta(graph.ptr, algorithm.c_str(), max_edges, &json);
    else if (what == "omega")
      status = gp_compute_omega(graph.ptr, route.c_str(), max_edges, &json);
    else if (what == "tutte")
      status = gp_compute_tutte(graph.ptr, max_edges, &json);
    else if (what == "matching")
      status = gp_compute_matching(graph.ptr, max_vertices, &json);
    else {
      std::cerr << "error: unknown target '" << what << "'\n";
      return 2;
    }
  } else if (zeros->parsed()) {
    status = gp_omega_zeros(graph.ptr, max_edges, &json);
  } else if (count->parsed()) {
    if (what == "subcoregraphs")
      status = gp_count_subcoregraphs(graph.ptr, max_edges, &json);
    else if (what == "by-degree3")
      status = gp_count_by_degree3(graph.ptr, max_edges, &json);
    else {
      std::cerr << "error: unknown count target '" << what << "'\n";
      return 2;
    }
  } else if (bethe->parsed()) {
    status = gp_bethe_report(graph.ptr, seed, draws, tol, &json);
  }

  return finish(status, json, compact, output_path);
}
