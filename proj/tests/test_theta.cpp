#include <doctest.h>

#include <cmath>
#include <random>

#include "grapoly/corpus.hpp"
#include "grapoly/theta.hpp"

using namespace grapoly;

namespace {

// Independent oracle: plain bitmask sum over all 2^|E| subsets with degrees
// recomputed from scratch. No pruning, no shared code with the engine path.
BivariatePoly theta_oracle(const Multigraph& g) {
  const int m = g.edge_count();
  REQUIRE(m <= 16);
  std::vector<UnivariatePoly> f(static_cast<size_t>(2 * m) + 3);
  f[0] = UnivariatePoly(Integer(1));
  f[1] = UnivariatePoly();
  for (size_t n = 2; n < f.size(); ++n)
    f[n] = UnivariatePoly::variable() * f[n - 1] + f[n - 2];

  BivariatePoly total;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    int size = 0;
    for (int p = 0; p < m; ++p)
      if (mask & (1u << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        deg[static_cast<size_t>(e.u)] += e.is_loop() ? 2 : 1;
        if (!e.is_loop()) deg[static_cast<size_t>(e.v)] += 1;
        ++size;
      }
    UnivariatePoly prod(Integer(1));
    for (int d : deg) prod *= f[static_cast<size_t>(d)];
    for (const auto& [e, c] : prod.terms()) total.add_term(size, e, c);
  }
  return total;
}

BivariatePoly theta_k4_paper() {
  BivariatePoly p(Integer(1));
  p.add_term(3, 0, 4);
  p.add_term(4, 0, 3);
  p.add_term(5, 2, 6);
  p.add_term(6, 4, 1);
  return p;
}

}  // namespace

TEST_CASE("enumeration matches stated values") {
  // Trees evaluate to 1.
  for (const CorpusEntry& t : random_trees(2, 5))
    CHECK(theta_enumerate(t.graph).polynomial == BivariatePoly(Integer(1)));

  // Cycles give 1 + beta^n.
  for (int n = 1; n <= 8; ++n) {
    BivariatePoly expected(Integer(1));
    expected.add_term(n, 0, 1);
    CHECK(theta_enumerate(cycle(n)).polynomial == expected);
  }

  CHECK(theta_enumerate(complete(4)).polynomial == theta_k4_paper());

  // Three parallel edges: 1 + 3 b^2 + b^3 g^2 (checked against the oracle).
  const BivariatePoly via_oracle = theta_oracle(theta_graph());
  BivariatePoly expected(Integer(1));
  expected.add_term(2, 0, 3);
  expected.add_term(3, 2, 1);
  CHECK(via_oracle == expected);
  CHECK(theta_enumerate(theta_graph()).polynomial == expected);

  // Two loops plus a bridge: 1 + 2b + b^2 + b^3 g^2.
  BivariatePoly dumb(Integer(1));
  dumb.add_term(1, 0, 2);
  dumb.add_term(2, 0, 1);
  dumb.add_term(3, 2, 1);
  CHECK(theta_oracle(dumbbell_graph()) == dumb);
  CHECK(theta_enumerate(dumbbell_graph()).polynomial == dumb);
}

TEST_CASE("bouquet closed form agrees with the oracle") {
  // Oracle for two loops: 1 + 2b + (1 + g^2) b^2.
  BivariatePoly b2(Integer(1));
  b2.add_term(1, 0, 2);
  b2.add_term(2, 0, 1);
  b2.add_term(2, 2, 1);
  CHECK(theta_oracle(bouquet(2)) == b2);
  for (int n = 0; n <= 5; ++n) {
    CHECK(theta_bouquet(n) == theta_oracle(bouquet(n)));
    CHECK(theta_deletion_contraction(bouquet(n)).polynomial == theta_bouquet(n));
  }
}

TEST_CASE("all three algorithms match the oracle on random multigraphs") {
  for (const CorpusEntry& entry : random_corpus(42, 60)) {
    const BivariatePoly expected = theta_oracle(entry.graph);
    CHECK(theta_enumerate(entry.graph).polynomial == expected);
    CHECK(theta_deletion_contraction(entry.graph).polynomial == expected);
    CHECK(theta_vfunction_expansion(entry.graph).polynomial == expected);
    CHECK(expected.even_in_second());
  }
}

TEST_CASE("deletion-contraction relation holds for every non-loop edge") {
  for (const CorpusEntry& entry : random_corpus(9, 25)) {
    const Multigraph& g = entry.graph;
    const BivariatePoly whole = theta_enumerate(g).polynomial;
    const BivariatePoly beta = BivariatePoly::first_variable();
    const BivariatePoly one_minus = BivariatePoly(Integer(1)) - beta;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      CHECK(whole == one_minus * theta_enumerate(g.delete_edge(e.id)).polynomial +
                         beta * theta_enumerate(g.contract_edge(e.id)).polynomial);
    }
  }
}

TEST_CASE("core invariance and multiplicativity") {
  Multigraph decorated = cycle(3);
  const int a = decorated.add_vertex();
  decorated.add_edge(0, a);
  CHECK(theta_enumerate(decorated).polynomial == theta_enumerate(cycle(3)).polynomial);

  const Multigraph both = disjoint_union(complete(4), cycle(3));
  CHECK(theta_enumerate(both).polynomial ==
        theta_enumerate(complete(4)).polynomial * theta_enumerate(cycle(3)).polynomial);
}

TEST_CASE("guard fires before enumeration") {
  CHECK_THROWS_AS(theta_enumerate(bouquet(27)), GuardError);
  CHECK_THROWS_AS(theta_enumerate(path(28)), GuardError);
  // A loosened guard admits the run; on a tree the pruned scan only ever
  // reaches the empty subset.
  Guards loose;
  loose.max_edges = 30;
  CHECK(theta_enumerate(path(28), loose).polynomial == BivariatePoly(Integer(1)));
}

TEST_CASE("weighted evaluation reduces to the two-variable polynomial") {
  const Multigraph k4 = complete(4);
  const BivariatePoly theta = theta_enumerate(k4).polynomial;
  for (const Complex beta : {Complex(0.3, 0.0), Complex(-0.2, 0.4)}) {
    const Complex gamma(0.9, -0.1);
    const Complex direct = theta.eval(beta, gamma);
    const Complex weighted = theta_weighted(uniform_weights(k4, beta, gamma));
    CHECK(std::abs(direct - weighted) < 1e-10 * (1.0 + std::abs(direct)));
  }
  // Trees evaluate to exactly 1 under any weights.
  WeightedInstance w = uniform_weights(path(4), Complex(0.37, 0.0), Complex(0));
  w.gamma = {Complex(0.5, 0), Complex(-1.2, 0), Complex(2.0, 0), Complex(0.1, 0)};
  CHECK(std::abs(theta_weighted(w) - Complex(1.0)) == 0.0);
  CHECK(theta_weighted(uniform_weights(bouquet(0), Complex(0), Complex(0))) == Complex(1.0));
}

TEST_CASE("vertex state sum equals the subset sum") {
  std::mt19937_64 rng(5);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };
  for (const Multigraph& g : {complete(4), dumbbell_graph(), theta_graph(), cycle(5)}) {
    WeightedInstance w;
    w.host = g;
    w.xi = std::vector<Complex>();
    for (int v = 0; v < g.vertex_count(); ++v) {
      const double xi = std::exp(0.8 * (unit() - 0.5));
      w.xi->push_back(Complex(xi, 0));
      w.gamma.push_back(Complex(xi - 1.0 / xi, 0));
    }
    for (const Edge& e : g.edges()) w.beta[e.id] = Complex(0.6 * unit() - 0.3, 0);
    const Complex direct = theta_weighted(w);
    const Complex state_sum = theta_weighted_vertex_sum(w);
    CHECK(std::abs(direct - state_sum) < 1e-9 * (1.0 + std::abs(direct)));
  }

  // At unit edge weights on a connected graph only the two aligned spin
  // configurations survive.
  const Multigraph c4 = cycle(4);
  WeightedInstance w = uniform_weights(c4, Complex(1.0, 0.0), Complex(0));
  w.xi = std::vector<Complex>(4, Complex(1.4, 0));
  for (auto& gm : w.gamma) gm = Complex(1.4 - 1.0 / 1.4, 0);
  const Complex lhs = theta_weighted_vertex_sum(w);
  const double xi = 1.4, n = 1;  // nullity of a cycle
  const double expected = std::pow(xi, 1 - n) * std::pow(xi + 1 / xi, n - 1) +
                          std::pow(xi, n - 1) * std::pow(xi + 1 / xi, n - 1);
  CHECK(std::abs(lhs - Complex(expected)) < 1e-9);

  // Degenerate xi values are rejected: xi = i makes xi + 1/xi vanish.
  WeightedInstance bad = uniform_weights(cycle(3), Complex(0.2, 0), Complex(0));
  bad.xi = std::vector<Complex>(3, Complex(0, 1));
  for (auto& gm : bad.gamma) gm = Complex(0, 2);  // i - 1/i = 2i
  CHECK_THROWS_AS(theta_weighted_vertex_sum(bad), DomainError);
  WeightedInstance zero_xi = uniform_weights(cycle(3), Complex(0.2, 0), Complex(0));
  zero_xi.xi = std::vector<Complex>(3, Complex(0, 0));
  CHECK_THROWS_AS(theta_weighted_vertex_sum(zero_xi), DomainError);
}

TEST_CASE("weighted deletion-contraction with shared endpoint gamma") {
  const Multigraph g = complete(4);
  std::mt19937_64 rng(17);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };
  WeightedInstance w = uniform_weights(g, Complex(0), Complex(0.73, 0));
  for (const Edge& e : g.edges()) w.beta[e.id] = Complex(0.8 * unit() - 0.4, 0.3 * unit());
  const int pivot = g.edges()[0].id;
  const Complex whole = theta_weighted(w);
  const Complex split =
      (Complex(1) - w.beta[pivot]) * theta_weighted(weighted_delete(w, pivot)) +
      w.beta[pivot] * theta_weighted(weighted_contract(w, pivot));
  CHECK(std::abs(whole - split) < 1e-9 * (1.0 + std::abs(whole)));
}

TEST_CASE("uniform-gamma expansion matches the subset sum") {
  std::mt19937_64 rng(23);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };
  for (const Multigraph& g : {cycle(5), complete(4), dumbbell_graph()}) {
    WeightedInstance w = uniform_weights(g, Complex(0), Complex(0.45, 0));
    for (const Edge& e : g.edges()) w.beta[e.id] = Complex(unit() - 0.5, 0);
    const Complex direct = theta_weighted(w);
    const Complex expansion = theta_weighted_expansion(w);
    CHECK(std::abs(direct - expansion) < 1e-9 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("Tutte subset sum") {
  // Single loop: y. Single bridge: x.
  BivariatePoly y = BivariatePoly::second_variable();
  CHECK(tutte_polynomial(bouquet(1)) == y);
  CHECK(tutte_polynomial(path(2)) == BivariatePoly::first_variable());
  // Triangle: x^2 + x + y (sum over its eight subsets).
  BivariatePoly expected = BivariatePoly::first_variable();
  expected.add_term(2, 0, 1);
  expected += y;
  CHECK(tutte_polynomial(cycle(3)) == expected);
}

TEST_CASE("gamma-zero specialization hits the Tutte curve") {
  for (const Multigraph& g :
       {cycle(3), cycle(6), complete(4), bouquet(3), dumbbell_graph(), theta_graph(), path(4)})
    CHECK(check_gamma0_specialization(g));
  for (const CorpusEntry& entry : random_corpus(31, 30))
    CHECK(check_gamma0_specialization(entry.graph));
}

TEST_CASE("random-cluster sum") {
  // Single vertex: kappa.
  CHECK(random_cluster(bouquet(0)) == BivariatePoly::second_variable());
  // Single edge: kappa^2 (1 - beta) + kappa beta.
  BivariatePoly expected;
  expected.add_term(0, 2, 1);
  expected.add_term(1, 2, -1);
  expected.add_term(1, 1, 1);
  CHECK(random_cluster(path(2)) == expected);

  // The reduction holds on loops for the cluster sum but not for theta.
  const BivariatePoly beta = BivariatePoly::first_variable();
  const BivariatePoly one_minus = BivariatePoly(Integer(1)) - beta;
  const BivariatePoly r1 = random_cluster(bouquet(1));
  const BivariatePoly r0 = random_cluster(bouquet(0));
  CHECK(r1 == one_minus * r0 + beta * r0);
  const BivariatePoly t1 = theta_enumerate(bouquet(1)).polynomial;
  const BivariatePoly t0 = theta_enumerate(bouquet(0)).polynomial;
  CHECK(!(t1 == one_minus * t0 + beta * t0));
}

TEST_CASE("activity-one closed forms") {
  CHECK(theta_beta1_closed_form(complete(4), Rational(1)) == 8);  // 2^nullity
  CHECK(theta_beta1_closed_form(cycle(5), Rational(1)) == 2);

  // Coefficients: n=1 gives [2]; n=3 gives 8, 6, 1 summing to theta(1,1)=15.
  CHECK(theta_beta1_coefficients(1) == std::vector<Integer>{2});
  const std::vector<Integer> c3 = theta_beta1_coefficients(3);
  CHECK(c3 == std::vector<Integer>{8, 6, 1});
  CHECK(c3[1] + c3[2] == 7);
  CHECK(theta_k4_paper().eval(Rational(1), Rational(1)) == 15);

  // The closed form agrees with direct evaluation of the polynomial.
  for (const Multigraph& g : {complete(4), cycle(4), theta_graph(), dumbbell_graph()}) {
    const BivariatePoly theta = theta_deletion_contraction(g).polynomial;
    for (const Rational& xi : {Rational(1), Rational(2), Rational(5, 3)})
      CHECK(theta_beta1_closed_form(g, xi) == theta.eval(Rational(1), xi - 1 / xi));
  }
  CHECK_THROWS_AS(theta_beta1_closed_form(disjoint_union(cycle(3), cycle(3)), Rational(1)),
                  InputError);
}

TEST_CASE("sub-coregraph counts and bounds") {
  CHECK(subcoregraph_count(complete(4)) == 15);
  for (int n = 0; n <= 5; ++n) CHECK(subcoregraph_count(bouquet(n)) == int_pow(2, n));
  for (int n = 3; n <= 8; ++n) CHECK(subcoregraph_count(cycle(n)) == 2);
  CHECK(subcoregraph_count(theta_graph()) == 5);
  CHECK(subcoregraph_count(dumbbell_graph()) == 5);
  CHECK(subcoregraph_count(petersen()) == 625);

  // Bounds: lower attained on bouquet subdivisions, upper on K4 at n=3.
  CHECK(subcoregraph_lower_bound(3) == 8);
  CHECK(subcoregraph_upper_bound(3) == 15);
  CHECK(subcoregraph_upper_bound(1) == 2);
  CHECK(subcoregraph_upper_bound(2) == 5);
  CHECK(subcoregraph_upper_bound(6) == 625);
  CHECK(subcoregraph_upper_bound(0) == 1);
  CHECK(subcoregraph_count(bouquet(2).subdivide(3)) == subcoregraph_lower_bound(2));
  CHECK(subcoregraph_count(complete(4).subdivide(2)) == subcoregraph_upper_bound(3));

  // The subdivision keeps the sub-coregraph family intact.
  for (const CorpusEntry& entry : random_corpus(77, 20)) {
    if (entry.graph.edge_count() > 8) continue;
    CHECK(subcoregraph_count(entry.graph) == subcoregraph_count(entry.graph.subdivide(2)));
  }

  int streamed = 0;
  enumerate_subcoregraphs(complete(4), [&](const EdgeSubset& s) {
    ++streamed;
    for (int id : s.ids) CHECK(complete(4).has_edge(id));
  });
  CHECK(streamed == 15);
}

TEST_CASE("degree-three refinement") {
  const std::map<int, Integer> k4 = count_by_degree3_vertices(complete(4));
  CHECK(k4.at(0) == 8);
  CHECK(k4.at(1) == 6);
  CHECK(k4.at(2) == 1);

  const std::map<int, Integer> th = count_by_degree3_vertices(theta_graph());
  CHECK(th.at(0) == 4);
  CHECK(th.at(1) == 1);

  for (int n = 3; n <= 6; ++n) {
    const std::map<int, Integer> c = count_by_degree3_vertices(cycle(n));
    CHECK(c.at(0) == 2);
  }

  const std::map<int, Integer> pet = count_by_degree3_vertices(petersen());
  const std::vector<Integer> expected = theta_beta1_coefficients(6);
  for (int l = 0; l < 6; ++l) CHECK(pet.at(l) == expected[static_cast<size_t>(l)]);

  CHECK_THROWS_AS(count_by_degree3_vertices(complete(5)), InputError);   // degree 4 core
  CHECK_THROWS_AS(count_by_degree3_vertices(path(3)), InputError);       // tree
  CHECK_THROWS_AS(count_by_degree3_vertices(disjoint_union(cycle(3), cycle(3))), InputError);
}
