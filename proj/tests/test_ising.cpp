#include <doctest.h>

#include <cmath>
#include <random>

#include "grapoly/corpus.hpp"
#include "grapoly/ising.hpp"

using namespace grapoly;

namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) / 9007199254740992.0;
}

IsingModel random_model(const Multigraph& g, std::mt19937_64& rng, double j_scale,
                        double h_scale) {
  IsingModel m;
  m.host = g;
  m.field.resize(static_cast<size_t>(g.vertex_count()));
  for (double& h : m.field) h = h_scale * (2 * unit(rng) - 1);
  for (const Edge& e : g.edges()) m.coupling[e.id] = j_scale * (2 * unit(rng) - 1);
  return m;
}

// Independent oracle for trees: leaf-elimination transfer recursion.
// Eliminating a leaf j attached by J to its neighbor i folds into a factor
// 2 cosh(J x_i + h_j) on the remaining graph.
double tree_log_partition(const Multigraph& g, const IsingModel& m) {
  std::vector<double> field = m.field;
  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
  std::vector<std::pair<int, int>> live_edges;
  for (const Edge& e : g.edges()) live_edges.emplace_back(e.u, e.v);
  std::vector<double> live_j;
  for (const Edge& e : g.edges()) live_j.push_back(m.coupling.at(e.id));

  double log_z = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; i < live_edges.size(); ++i) {
      ++deg[static_cast<size_t>(live_edges[i].first)];
      ++deg[static_cast<size_t>(live_edges[i].second)];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 1) continue;
      size_t pos = 0;
      while (live_edges[pos].first != v && live_edges[pos].second != v) ++pos;
      const int other = live_edges[pos].first == v ? live_edges[pos].second : live_edges[pos].first;
      const double j = live_j[pos];
      const double h = field[static_cast<size_t>(v)];
      // Fold: sum_{x_v} exp(j x_v x_other + h x_v) = 2 cosh(j x_other + h).
      const double plus = 2 * std::cosh(j + h);
      const double minus = 2 * std::cosh(-j + h);
      log_z += 0.5 * (std::log(plus) + std::log(minus));
      field[static_cast<size_t>(other)] += 0.5 * (std::log(plus) - std::log(minus));
      alive[static_cast<size_t>(v)] = 0;
      live_edges.erase(live_edges.begin() + static_cast<long>(pos));
      live_j.erase(live_j.begin() + static_cast<long>(pos));
      changed = true;
      break;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (alive[static_cast<size_t>(v)])
      log_z += std::log(2 * std::cosh(field[static_cast<size_t>(v)]));
  return log_z;
}

}  // namespace

TEST_CASE("brute-force partition function") {
  IsingModel single;
  single.host = Multigraph(1);
  single.field = {0.0};
  CHECK(std::abs(ising_log_partition_bruteforce(single) - std::log(2.0)) < 1e-12);

  IsingModel edge;
  edge.host = path(2);
  edge.field = {0.0, 0.0};
  edge.coupling[0] = 0.8;
  CHECK(std::abs(std::exp(ising_log_partition_bruteforce(edge)) - 4 * std::cosh(0.8)) < 1e-9);

  // Guard.
  IsingModel big;
  big.host = Multigraph(25);
  big.field.assign(25, 0.0);
  CHECK_THROWS_AS(ising_log_partition_bruteforce(big), GuardError);
}

TEST_CASE("brute force matches the tree transfer oracle") {
  std::mt19937_64 rng(31);
  for (const CorpusEntry& entry : random_trees(13, 8)) {
    const IsingModel m = random_model(entry.graph, rng, 1.0, 0.7);
    CHECK(std::abs(ising_log_partition_bruteforce(m) - tree_log_partition(entry.graph, m)) <
          1e-9);
  }
}

TEST_CASE("beliefs from parameters") {
  const Multigraph c4 = cycle(4);

  SUBCASE("independent case factorizes") {
    std::map<int, double> beta;
    for (const Edge& e : c4.edges()) beta[e.id] = 0.0;
    const BeliefSet beliefs = beliefs_from_parameters(c4, beta, {1.3, 0.8, 1.1, 0.9});
    for (const Edge& e : c4.edges())
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj)
          CHECK(std::abs(beliefs.edge.at(e.id)[static_cast<size_t>((si << 1) | sj)] -
                         beliefs.vertex[static_cast<size_t>(e.u)][static_cast<size_t>(si)] *
                             beliefs.vertex[static_cast<size_t>(e.v)][static_cast<size_t>(sj)]) <
                1e-14);
  }

  SUBCASE("unit xi gives uniform singletons") {
    std::map<int, double> beta;
    for (const Edge& e : c4.edges()) beta[e.id] = 0.2;
    const BeliefSet beliefs = beliefs_from_parameters(c4, beta, {1, 1, 1, 1});
    for (const auto& b : beliefs.vertex) {
      CHECK(std::abs(b[0] - 0.5) < 1e-15);
      CHECK(std::abs(b[1] - 0.5) < 1e-15);
    }
  }

  SUBCASE("construction satisfies the marginal identities") {
    std::mt19937_64 rng(3);
    std::map<int, double> beta;
    std::vector<double> xi;
    for (int v = 0; v < 4; ++v) xi.push_back(std::exp(0.6 * (2 * unit(rng) - 1)));
    for (const Edge& e : c4.edges()) beta[e.id] = 0.3 * (2 * unit(rng) - 1);
    const BeliefSet beliefs = beliefs_from_parameters(c4, beta, xi);
    CHECK(beliefs.max_marginalization_residual < 1e-12);
    CHECK(beliefs.max_normalization_residual < 1e-12);
  }

  SUBCASE("nonpositive entries are rejected with the edge named") {
    std::map<int, double> beta;
    for (const Edge& e : c4.edges()) beta[e.id] = e.id == 2 ? -1.5 : 0.0;
    CHECK_THROWS_WITH_AS(beliefs_from_parameters(c4, beta, {1, 1, 1, 1}),
                         "belief entry not positive on edge id 2", DomainError);
    CHECK_THROWS_AS(beliefs_from_parameters(c4, beta, {1, -1, 1, 1}), DomainError);
  }
}

TEST_CASE("transform to coupling-field form") {
  const Multigraph c3 = cycle(3);

  SUBCASE("zero beta maps to the trivial model") {
    std::map<int, double> beta;
    for (const Edge& e : c3.edges()) beta[e.id] = 0.0;
    const TransformOutput t = transform_to_ising(c3, beta, {1.2, 0.9, 1.0});
    for (const Edge& e : c3.edges()) {
      CHECK(std::abs(t.model.coupling.at(e.id)) < 1e-14);
      CHECK(std::abs(t.edge_scale.at(e.id) - 1.0) < 1e-14);
      CHECK(std::abs(t.edge_field.at(e.id).first) < 1e-14);
    }
    CHECK(t.reconstruction_residual < 1e-14);
  }

  SUBCASE("unit xi coupling is artanh(beta)") {
    std::map<int, double> beta;
    for (const Edge& e : c3.edges()) beta[e.id] = 0.35;
    const TransformOutput t = transform_to_ising(c3, beta, {1, 1, 1});
    for (const Edge& e : c3.edges())
      CHECK(std::abs(t.model.coupling.at(e.id) - std::atanh(0.35)) < 1e-12);
  }

  SUBCASE("reconstruction and the scaled product identity") {
    std::mt19937_64 rng(21);
    for (const Multigraph& g : {cycle(3), complete(4), dumbbell_graph(), bouquet(2)}) {
      std::vector<double> xi;
      for (int v = 0; v < g.vertex_count(); ++v) xi.push_back(std::exp(0.5 * (2 * unit(rng) - 1)));
      std::map<int, double> beta;
      for (const Edge& e : g.edges()) {
        const double mu = std::max(xi[static_cast<size_t>(e.u)], 1 / xi[static_cast<size_t>(e.u)]);
        const double mv = std::max(xi[static_cast<size_t>(e.v)], 1 / xi[static_cast<size_t>(e.v)]);
        beta[e.id] = (1.6 * unit(rng) - 0.8) / (mu * mv);
      }
      const TransformOutput t = transform_to_ising(g, beta, xi);
      CHECK(t.reconstruction_residual < 1e-10);

      // Z equals the scale product times the weighted sum.
      const double log_z = ising_log_partition_bruteforce(t.model);
      double log_scales = 0.0;
      for (double a : t.vertex_scale) log_scales += std::log(a);
      for (const auto& [id, b] : t.edge_scale) log_scales += std::log(b);
      WeightedInstance w;
      w.host = g;
      for (const auto& [id, b] : beta) w.beta[id] = Complex(b, 0);
      for (double x : xi) w.gamma.push_back(Complex(x - 1 / x, 0));
      const double theta = theta_weighted(w).real();
      CHECK(std::abs(std::exp(log_z - log_scales) - theta) < 1e-8 * std::abs(theta));
    }
  }

  SUBCASE("out-of-domain parameters are rejected") {
    std::map<int, double> beta;
    for (const Edge& e : c3.edges()) beta[e.id] = 1.5;
    CHECK_THROWS_AS(transform_to_ising(c3, beta, {1, 1, 1}), DomainError);
  }
}

TEST_CASE("bethe ratio harness") {
  std::mt19937_64 rng(47);

  SUBCASE("exact on trees") {
    for (const CorpusEntry& entry : random_trees(51, 5)) {
      const Multigraph& g = entry.graph;
      std::vector<double> xi;
      for (int v = 0; v < g.vertex_count(); ++v) xi.push_back(std::exp(0.6 * (2 * unit(rng) - 1)));
      std::map<int, double> beta;
      for (const Edge& e : g.edges()) {
        const double mu = std::max(xi[static_cast<size_t>(e.u)], 1 / xi[static_cast<size_t>(e.u)]);
        const double mv = std::max(xi[static_cast<size_t>(e.v)], 1 / xi[static_cast<size_t>(e.v)]);
        beta[e.id] = (1.6 * unit(rng) - 0.8) / (mu * mv);
      }
      const BetheRatioReport report = verify_bethe_ratio(g, beta, xi);
      CHECK(report.ok);
      CHECK(std::abs(report.ratio - 1.0) < 1e-10);
      CHECK(std::abs(report.theta - 1.0) < 1e-12);
    }
  }

  SUBCASE("matches the weighted sum on cycles and loop graphs") {
    for (const Multigraph& g : {cycle(4), dumbbell_graph(), bouquet(2), complete(4)}) {
      std::vector<double> xi;
      for (int v = 0; v < g.vertex_count(); ++v) xi.push_back(std::exp(0.5 * (2 * unit(rng) - 1)));
      std::map<int, double> beta;
      for (const Edge& e : g.edges()) {
        const double mu = std::max(xi[static_cast<size_t>(e.u)], 1 / xi[static_cast<size_t>(e.u)]);
        const double mv = std::max(xi[static_cast<size_t>(e.v)], 1 / xi[static_cast<size_t>(e.v)]);
        beta[e.id] = (1.6 * unit(rng) - 0.8) / (mu * mv);
      }
      const BetheRatioReport report = verify_bethe_ratio(g, beta, xi);
      CHECK(report.rel_error < 1e-8);
    }
  }
}

TEST_CASE("belief propagation") {
  SUBCASE("free model has uniform beliefs and log Z = |V| log 2") {
    IsingModel m;
    m.host = path(4);
    m.field.assign(4, 0.0);
    for (const Edge& e : m.host.edges()) m.coupling[e.id] = 0.0;
    const BpResult r = run_belief_propagation(m);
    CHECK(r.converged);
    for (const auto& b : r.beliefs.vertex) CHECK(std::abs(b[0] - 0.5) < 1e-12);
    CHECK(std::abs(r.log_z_bethe - 4 * std::log(2.0)) < 1e-12);
  }

  SUBCASE("exact on trees within diameter sweeps") {
    std::mt19937_64 rng(61);
    for (const CorpusEntry& entry : random_trees(71, 6)) {
      const IsingModel m = random_model(entry.graph, rng, 0.8, 0.5);
      BpOptions options;
      options.damping = 0.0;
      options.tol = 1e-13;
      const BpResult r = run_belief_propagation(m, options);
      CHECK(r.converged);
      CHECK(r.iterations <= graph_diameter(entry.graph) + 1);
      CHECK(std::abs(r.log_z_bethe - ising_log_partition_bruteforce(m)) < 1e-9);
      CHECK(r.beliefs.max_marginalization_residual < 1e-10);
    }
  }

  SUBCASE("loops are rejected") {
    IsingModel m;
    m.host = bouquet(1);
    m.field = {0.0};
    m.coupling[0] = 0.1;
    CHECK_THROWS_AS(run_belief_propagation(m), InputError);
  }

  SUBCASE("cycle fixed point reproduces the ratio") {
    std::mt19937_64 rng(77);
    const Multigraph g = cycle(5);
    const IsingModel m = random_model(g, rng, 0.15, 0.1);
    BpOptions options;
    options.max_iters = 5000;
    options.tol = 1e-13;
    const BpResult r = run_belief_propagation(m, options);
    REQUIRE(r.converged);
    std::vector<double> xi;
    for (int v = 0; v < g.vertex_count(); ++v)
      xi.push_back(std::sqrt(r.beliefs.vertex[static_cast<size_t>(v)][0] /
                             r.beliefs.vertex[static_cast<size_t>(v)][1]));
    WeightedInstance w;
    w.host = g;
    for (const Edge& e : g.edges()) {
      const double nu = xi[static_cast<size_t>(e.u)] + 1 / xi[static_cast<size_t>(e.u)];
      const double nv = xi[static_cast<size_t>(e.v)] + 1 / xi[static_cast<size_t>(e.v)];
      w.beta[e.id] = Complex(r.beliefs.edge.at(e.id)[0] * nu * nv -
                                 xi[static_cast<size_t>(e.u)] * xi[static_cast<size_t>(e.v)],
                             0);
    }
    for (double x : xi) w.gamma.push_back(Complex(x - 1 / x, 0));
    const double theta = theta_weighted(w).real();
    const double ratio = std::exp(ising_log_partition_bruteforce(m) - r.log_z_bethe);
    CHECK(std::abs(ratio - theta) < 1e-6 * std::abs(theta));
  }
}

TEST_CASE("zero-field expansion") {
  std::mt19937_64 rng(83);
  for (const Multigraph& g : {path(4), cycle(3), complete(4), dumbbell_graph(), bouquet(2)}) {
    IsingModel m = random_model(g, rng, 1.0, 0.0);
    m.field.assign(static_cast<size_t>(g.vertex_count()), 0.0);
    CHECK(van_der_waerden_check(m));
  }
  IsingModel with_field = random_model(cycle(3), rng, 1.0, 0.5);
  CHECK_THROWS_AS(van_der_waerden_check(with_field), InputError);
}

TEST_CASE("field expansion") {
  std::mt19937_64 rng(89);
  // Single edge: the eight-term expansion in closed form.
  {
    IsingModel m;
    m.host = path(2);
    m.field = {0.4, -0.7};
    m.coupling[0] = 0.9;
    CHECK(field_expansion_check(m));
    const double z = std::exp(ising_log_partition_bruteforce(m));
    const double expected =
        4 * std::cosh(0.9) *
        (std::cosh(0.4) * std::cosh(-0.7) + std::tanh(0.9) * std::sinh(0.4) * std::sinh(-0.7));
    CHECK(std::abs(z - expected) < 1e-10 * std::abs(expected));
  }
  for (const Multigraph& g : {cycle(3), complete(4), dumbbell_graph()}) {
    const IsingModel m = random_model(g, rng, 0.9, 0.6);
    CHECK(field_expansion_check(m));
  }
}
