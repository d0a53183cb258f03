#include "grapoly.h"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "grapoly/corpus.hpp"
#include "grapoly/ising.hpp"
#include "grapoly/json_io.hpp"
#include "grapoly/multigraph.hpp"
#include "grapoly/omega.hpp"
#include "grapoly/theta.hpp"
#include "grapoly/verify.hpp"

struct gp_graph {
  grapoly::Multigraph graph;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Body>
gp_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const grapoly::GuardError& e) {
    g_last_error = e.what();
    return GP_ERROR_GUARD;
  } catch (const grapoly::DomainError& e) {
    g_last_error = e.what();
    return GP_ERROR_DOMAIN;
  } catch (const grapoly::DivisibilityError& e) {
    g_last_error = e.what();
    return GP_ERROR_NUMERIC;
  } catch (const grapoly::NumericError& e) {
    g_last_error = e.what();
    return GP_ERROR_NUMERIC;
  } catch (const grapoly::InputError& e) {
    g_last_error = e.what();
    return GP_ERROR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GP_ERROR_INTERNAL;
  }
}

grapoly::Guards make_guards(int max_edges, int max_vertices) {
  grapoly::Guards guards;
  if (max_edges > 0) guards.max_edges = max_edges;
  if (max_vertices > 0) guards.max_vertices = max_vertices;
  return guards;
}

gp_status emit(const nlohmann::json& value, char** json_out) {
  if (!json_out) {
    g_last_error = "null output pointer";
    return GP_ERROR_INPUT;
  }
  *json_out = dup_string(value.dump());
  return *json_out ? GP_OK : GP_ERROR_INTERNAL;
}

nlohmann::json verify_report_json(const grapoly::VerifyReport& report, bool include_timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const grapoly::CheckRecord& record : report.checks) {
    nlohmann::json item = {{"check", record.check},
                           {"graph", record.graph},
                           {"status", record.status},
                           {"residual", record.residual}};
    if (include_timings) item["elapsed_ms"] = record.elapsed_ms;
    if (!record.detail.empty()) item["reproducer"] = record.detail;
    checks.push_back(std::move(item));
  }
  return {{"summary",
           {{"pass", report.passed}, {"fail", report.failed}, {"skipped", report.skipped}}},
          {"checks", std::move(checks)}};
}

}  // namespace

extern "C" {

const char* gp_version(void) { return "1.0.0"; }

const char* gp_last_error(void) { return g_last_error.c_str(); }

void gp_string_free(char* s) { std::free(s); }

gp_status gp_graph_from_text(const char* text, gp_graph** out) {
  return guarded([&]() -> gp_status {
    if (!text || !out) {
      g_last_error = "null argument";
      return GP_ERROR_INPUT;
    }
    *out = new gp_graph{grapoly::from_edge_list(text)};
    return GP_OK;
  });
}

gp_status gp_graph_from_file(const char* path, gp_graph** out) {
  return guarded([&]() -> gp_status {
    if (!path || !out) {
      g_last_error = "null argument";
      return GP_ERROR_INPUT;
    }
    std::ifstream in(path);
    if (!in) {
      g_last_error = std::string("cannot open '") + path + "'";
      return GP_ERROR_INPUT;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new gp_graph{grapoly::from_edge_list(buffer.str())};
    return GP_OK;
  });
}

gp_status gp_graph_named(const char* name, gp_graph** out) {
  return guarded([&]() -> gp_status {
    if (!name || !out) {
      g_last_error = "null argument";
      return GP_ERROR_INPUT;
    }
    *out = new gp_graph{grapoly::named_graph(name)};
    return GP_OK;
  });
}

void gp_graph_free(gp_graph* g) { delete g; }

int gp_graph_vertex_count(const gp_graph* g) { return g ? g->graph.vertex_count() : -1; }

int gp_graph_edge_count(const gp_graph* g) { return g ? g->graph.edge_count() : -1; }

gp_status gp_compute_theta(const gp_graph* g, const char* algorithm, int max_edges,
                           char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const std::string algo = algorithm ? algorithm : "enum";
    const grapoly::Guards guards = make_guards(max_edges, 0);
    grapoly::ThetaResult result;
    if (algo == "enum")
      result = grapoly::theta_enumerate(g->graph, guards);
    else if (algo == "dc")
      result = grapoly::theta_deletion_contraction(g->graph);
    else if (algo == "vexp")
      result = grapoly::theta_vfunction_expansion(g->graph, guards);
    else {
      g_last_error = "unknown algorithm '" + algo + "' (expected enum, dc or vexp)";
      return GP_ERROR_INPUT;
    }
    return emit({{"graph", grapoly::graph_to_json(g->graph)},
                 {"algorithm", algo},
                 {"polynomial", grapoly::polynomial_to_json(result.polynomial, "beta", "gamma")}},
                json_out);
  });
}

gp_status gp_compute_omega(const gp_graph* g, const char* route, int max_edges, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const std::string r = route ? route : "spec";
    const grapoly::Guards guards = make_guards(max_edges, 0);
    grapoly::OmegaResult result;
    if (r == "spec")
      result = grapoly::omega_specialize(g->graph, guards);
    else if (r == "vexp")
      result = grapoly::omega_vexpansion(g->graph, guards);
    else if (r == "dc")
      result = grapoly::omega_deletion_contraction(g->graph);
    else if (r == "md")
      result = grapoly::omega_via_monomer_dimer(g->graph, guards);
    else if (r == "det")
      result = grapoly::omega_via_determinant_sum(g->graph, guards);
    else {
      g_last_error = "unknown route '" + r + "' (expected spec, vexp, dc, md or det)";
      return GP_ERROR_INPUT;
    }
    return emit({{"graph", grapoly::graph_to_json(g->graph)},
                 {"route", r},
                 {"polynomial", grapoly::polynomial_to_json(result.polynomial, "beta")}},
                json_out);
  });
}

gp_status gp_compute_tutte(const gp_graph* g, int max_edges, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const grapoly::BivariatePoly t =
        grapoly::tutte_polynomial(g->graph, make_guards(max_edges, 0));
    return emit({{"graph", grapoly::graph_to_json(g->graph)},
                 {"polynomial", grapoly::polynomial_to_json(t, "x", "y")}},
                json_out);
  });
}

gp_status gp_compute_matching(const gp_graph* g, int max_vertices, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const grapoly::UnivariatePoly alpha =
        grapoly::matching_polynomial(g->graph, make_guards(0, max_vertices));
    return emit({{"graph", grapoly::graph_to_json(g->graph)},
                 {"polynomial", grapoly::polynomial_to_json(alpha, "x")}},
                json_out);
  });
}

gp_status gp_omega_zeros(const gp_graph* g, int max_edges, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const grapoly::ZeroReport report =
        grapoly::omega_zeros(g->graph, make_guards(max_edges, 0));
    nlohmann::json body = grapoly::zeros_to_json(report);
    body["graph"] = grapoly::graph_to_json(g->graph);
    return emit(body, json_out);
  });
}

gp_status gp_count_subcoregraphs(const gp_graph* g, int max_edges, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const grapoly::Integer count =
        grapoly::subcoregraph_count(g->graph, make_guards(max_edges, 0));
    nlohmann::json body = {{"graph", grapoly::graph_to_json(g->graph)},
                           {"count", grapoly::decimal(count)}};
    if (g->graph.is_connected()) {
      const grapoly::Integer lower = grapoly::subcoregraph_lower_bound(g->graph.nullity());
      const grapoly::Integer upper = grapoly::subcoregraph_upper_bound(g->graph.nullity());
      body["lower_bound"] = grapoly::decimal(lower);
      body["upper_bound"] = grapoly::decimal(upper);
      body["bounds_hold"] = lower <= count && count <= upper;
    }
    return emit(body, json_out);
  });
}

gp_status gp_count_by_degree3(const gp_graph* g, int max_edges, char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    const auto counts =
        grapoly::count_by_degree3_vertices(g->graph, make_guards(max_edges, 0));
    const std::vector<grapoly::Integer> expected =
        grapoly::theta_beta1_coefficients(g->graph.nullity());
    bool matches = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [l, count] : counts) {
      const grapoly::Integer& want = expected[static_cast<size_t>(l)];
      if (count != want) matches = false;
      rows.push_back({{"l", l},
                      {"count", grapoly::decimal(count)},
                      {"expected", grapoly::decimal(want)}});
    }
    return emit({{"graph", grapoly::graph_to_json(g->graph)},
                 {"nullity", g->graph.nullity()},
                 {"counts", std::move(rows)},
                 {"matches", matches}},
                json_out);
  });
}

gp_status gp_bethe_report(const gp_graph* g, unsigned long seed, int draws, double tol,
                          char** json_out) {
  return guarded([&]() -> gp_status {
    if (!g) {
      g_last_error = "null graph";
      return GP_ERROR_INPUT;
    }
    if (draws < 1) {
      g_last_error = "draws must be >= 1";
      return GP_ERROR_INPUT;
    }
    if (!(tol > 0)) {
      g_last_error = "tol must be positive";
      return GP_ERROR_INPUT;
    }
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); };

    double max_rel_error = 0.0;
    nlohmann::json failures = nlohmann::json::array();
    for (int d = 0; d < draws; ++d) {
      bool done = false;
      std::string domain_error;
      for (int attempt = 0; attempt < 10 && !done; ++attempt) {
        std::vector<double> xi(static_cast<size_t>(g->graph.vertex_count()));
        for (double& x : xi) x = std::exp(1.4 * (unit() - 0.5));
        std::map<int, double> beta;
        for (const grapoly::Edge& e : g->graph.edges()) {
          const double mu = std::max(xi[static_cast<size_t>(e.u)], 1.0 / xi[static_cast<size_t>(e.u)]);
          const double mv = std::max(xi[static_cast<size_t>(e.v)], 1.0 / xi[static_cast<size_t>(e.v)]);
          beta[e.id] = (1.8 * unit() - 0.9) / (mu * mv);
        }
        try {
          const grapoly::BetheRatioReport report =
              grapoly::verify_bethe_ratio(g->graph, beta, xi, tol);
          max_rel_error = std::max(max_rel_error, report.rel_error);
          done = true;
        } catch (const grapoly::DomainError& err) {
          domain_error = err.what();
        }
      }
      if (!done) failures.push_back({{"draw", d}, {"error", domain_error}});
    }
    const bool ok = failures.empty() && max_rel_error < tol;
    const gp_status status = emit({{"graph", grapoly::graph_to_json(g->graph)},
                                   {"seed", seed},
                                   {"draws", draws},
                                   {"tol", tol},
                                   {"max_rel_error", max_rel_error},
                                   {"failures", std::move(failures)}},
                                  json_out);
    if (status != GP_OK) return status;
    if (!ok) {
      g_last_error = "bethe ratio check failed";
      return GP_ERROR_VERIFY;
    }
    return GP_OK;
  });
}

gp_status gp_verify(const gp_graph* extra_or_null, const char* extra_name_or_null, int max_edges,
                    int max_vertices, unsigned long seed, int random_count, int self_test,
                    int include_timings, char** json_out) {
  return guarded([&]() -> gp_status {
    grapoly::VerifyOptions options;
    if (max_edges > 0) options.max_edges = max_edges;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    options.seed = seed;
    if (random_count >= 0) options.random_count = random_count;
    options.self_test = self_test != 0;
    if (extra_or_null) {
      options.extra_graphs.push_back(
          {extra_name_or_null ? extra_name_or_null : "user", extra_or_null->graph});
    }
    const grapoly::VerifyReport report = grapoly::run_verification(options);
    const gp_status status = emit(verify_report_json(report, include_timings != 0), json_out);
    if (status != GP_OK) return status;
    if (options.self_test) {
      // The corrupted expectation must have failed and carried a reproducer.
      const bool caught = report.failed == 1 && !report.checks.empty() &&
                          !report.checks.front().detail.empty();
      if (!caught) {
        g_last_error = "self-test did not surface the corrupted expectation";
        return GP_ERROR_VERIFY;
      }
      return GP_OK;
    }
    if (report.failed > 0) {
      g_last_error = std::to_string(report.failed) + " checks failed";
      return GP_ERROR_VERIFY;
    }
    return GP_OK;
  });
}

gp_status gp_corpus_list(char** json_out) {
  return guarded([&]() -> gp_status {
    nlohmann::json entries = nlohmann::json::array();
    for (const grapoly::CorpusEntry& entry : grapoly::named_corpus())
      entries.push_back({{"name", entry.name},
                         {"vertices", entry.graph.vertex_count()},
                         {"edges", entry.graph.edge_count()},
                         {"nullity", entry.graph.nullity()}});
    return emit({{"graphs", std::move(entries)}}, json_out);
  });
}

}  // extern "C"
