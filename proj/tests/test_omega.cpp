#include <doctest.h>

#include <cmath>

#include "grapoly/corpus.hpp"
#include "grapoly/omega.hpp"

using namespace grapoly;

namespace {

UnivariatePoly from_coeffs(std::initializer_list<long> cs) {
  UnivariatePoly p;
  int e = 0;
  for (long c : cs) p.add_term(e++, Integer(c));
  return p;
}

// Independent matching-sum oracle: bitmask over edges, disjointness checked
// from scratch, weights -beta and 1 + (d_i - 1) beta.
UnivariatePoly omega_matching_oracle(const Multigraph& g) {
  const int m = g.edge_count();
  REQUIRE(m <= 16);
  const std::vector<int> deg = g.degrees();
  UnivariatePoly total;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> used(static_cast<size_t>(g.vertex_count()), 0);
    bool valid = true;
    int size = 0;
    for (int p = 0; p < m && valid; ++p)
      if (mask & (1u << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        if (e.is_loop() || used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)])
          valid = false;
        else {
          used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
          ++size;
        }
      }
    if (!valid) continue;
    UnivariatePoly term = UnivariatePoly::monomial(size, size % 2 == 0 ? 1 : -1);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!used[static_cast<size_t>(v)]) {
        UnivariatePoly lambda(Integer(1));
        lambda.add_term(1, Integer(deg[static_cast<size_t>(v)] - 1));
        term *= lambda;
      }
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("stated omega values") {
  for (const CorpusEntry& t : random_trees(4, 5))
    CHECK(omega_specialize(t.graph).polynomial == from_coeffs({1, -1}));
  for (int n = 1; n <= 8; ++n) {
    UnivariatePoly expected(Integer(1));
    expected.add_term(n, 1);
    CHECK(omega_specialize(cycle(n)).polynomial == expected);
  }
  CHECK(omega_specialize(complete(4)).polynomial == from_coeffs({1, 2, 3, 8, 16}));
  for (int n = 0; n <= 4; ++n)
    CHECK(omega_specialize(bouquet(n)).polynomial == from_coeffs({1, 2 * n - 1}));
  CHECK(omega_specialize(theta_graph()).polynomial == from_coeffs({1, 1, 4}));
  CHECK(omega_specialize(dumbbell_graph()).polynomial == from_coeffs({1, 3, 4}));
}

TEST_CASE("five routes and the oracle agree") {
  auto check_graph = [](const Multigraph& g) {
    const UnivariatePoly expected = omega_matching_oracle(g);
    CHECK(omega_specialize(g).polynomial == expected);
    CHECK(omega_vexpansion(g).polynomial == expected);
    CHECK(omega_deletion_contraction(g).polynomial == expected);
    CHECK(omega_via_monomer_dimer(g).polynomial == expected);
    CHECK(omega_via_determinant_sum(g).polynomial == expected);
  };
  for (const Multigraph& g :
       {cycle(3), cycle(6), complete(4), theta_graph(), dumbbell_graph(), bouquet(3), path(4),
        disjoint_union(cycle(3), path(2))})
    check_graph(g);
  for (const CorpusEntry& entry : random_corpus(19, 40)) check_graph(entry.graph);
}

TEST_CASE("vexpansion hand values") {
  CHECK(omega_vexpansion(path(2)).polynomial == from_coeffs({1, -1}));
  CHECK(omega_vexpansion(bouquet(1)).polynomial == from_coeffs({1, 1}));
}

TEST_CASE("deletion-contraction hand values") {
  // Bridge between two loops: (1+b)^2 + b(1+3b) = 1 + 3b + 4b^2.
  CHECK(omega_deletion_contraction(dumbbell_graph()).polynomial == from_coeffs({1, 3, 4}));
  // Triple edge: (1+b^2) + b(1+3b) = 1 + b + 4b^2.
  CHECK(omega_deletion_contraction(theta_graph()).polynomial == from_coeffs({1, 1, 4}));
}

TEST_CASE("monomer-dimer sums") {
  // Empty graph: the product of vertex weights.
  Multigraph empty(3);
  std::vector<Rational> lambda{Rational(2), Rational(3), Rational(5, 2)};
  CHECK(monomer_dimer(empty, {}, lambda) == Rational(15));

  // Bouquets admit only the empty matching.
  for (int n = 0; n <= 4; ++n)
    CHECK(monomer_dimer_activity(bouquet(n)) == from_coeffs({1, 2 * n - 1}));

  // K4 at mu = -1/4, lambda_i = 1 + 2/4 equals omega(1/4).
  const Multigraph k4 = complete(4);
  std::map<int, Rational> mu;
  for (const Edge& e : k4.edges()) mu[e.id] = Rational(-1, 4);
  std::vector<Rational> lam(4, Rational(3, 2));
  CHECK(monomer_dimer(k4, mu, lam) ==
        omega_specialize(k4).polynomial.eval(Rational(1, 4)));
}

TEST_CASE("matching counts and polynomial") {
  CHECK(matching_polynomial(path(2)) == from_coeffs({-1, 0, 1}));  // x^2 - 1
  UnivariatePoly c3;
  c3.add_term(3, 1);
  c3.add_term(1, -3);
  CHECK(matching_polynomial(cycle(3)) == c3);  // x^3 - 3x
  UnivariatePoly k4;
  k4.add_term(4, 1);
  k4.add_term(2, -6);
  k4.add_term(0, 3);
  CHECK(matching_polynomial(complete(4)) == k4);  // x^4 - 6x^2 + 3

  const std::vector<Integer> p = matching_counts(complete(4));
  CHECK(p == std::vector<Integer>{1, 6, 3});
  // Loops are never matchable.
  CHECK(matching_counts(bouquet(4)) == std::vector<Integer>{1});
}

TEST_CASE("regular-graph identities") {
  CHECK(regularity(complete(4)) == 3);
  CHECK(regularity(cycle(5)) == 2);
  CHECK(regularity(dumbbell_graph()) == 3);  // loops count twice
  CHECK(regularity(path(3)) == -1);

  const std::vector<Rational> samples{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                                      Rational(3)};
  for (const Multigraph& g :
       {complete(4), complete(5), cycle(3), cycle(7), petersen(), theta_graph(),
        dumbbell_graph()}) {
    CHECK(check_regular_identity(g, samples));
    CHECK(check_coefficient_symmetry(g));
  }
  // Spot value: omega_K4(1) = 30 = alpha_K4(3).
  CHECK(omega_specialize(complete(4)).polynomial.eval(Rational(1)) == 30);
  CHECK(matching_polynomial(complete(4)).eval(Rational(3)) == 30);
  CHECK_THROWS_AS(check_coefficient_symmetry(path(3)), InputError);
}

TEST_CASE("zero locations") {
  // Cycle roots are the n-th roots of -1.
  const ZeroReport c4 = omega_zeros(cycle(4));
  CHECK(c4.roots.size() == 4);
  for (const Complex& z : c4.roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
  CHECK(c4.annulus_ok);

  const ZeroReport k4 = omega_zeros(complete(4));
  CHECK(k4.roots.size() == 4);
  for (const Complex& z : k4.roots) CHECK(std::abs(std::abs(z) - 0.5) < 1e-8);

  const ZeroReport dumb = omega_zeros(dumbbell_graph());
  for (const Complex& z : dumb.roots) CHECK(std::abs(std::abs(z) - 0.5) < 1e-8);

  const ZeroReport pet = omega_zeros(petersen());
  CHECK(pet.roots.size() == 10);
  for (const Complex& z : pet.roots) CHECK(std::abs(std::abs(z) - 0.5) < 1e-8);

  // Roots are sorted by modulus then argument.
  for (size_t i = 1; i < pet.roots.size(); ++i)
    CHECK(std::abs(pet.roots[i - 1]) <= std::abs(pet.roots[i]) + 1e-12);

  CHECK_THROWS_AS(omega_zeros(path(4)), InputError);  // tree core is degree-0
}

TEST_CASE("determinant sum values") {
  // At u = 0 only the empty union contributes det(I) = 1.
  CHECK(omega_determinant_sum(path(4), Rational(0)) == 1);
  // Triangle at u = 1: singular Laplacian-like term plus 2 for the cycle.
  CHECK(omega_determinant_sum(cycle(3), Rational(1)) == 2);
  const UnivariatePoly k4 = omega_specialize(complete(4)).polynomial;
  for (const Rational& u : {Rational(1, 2), Rational(1, 3), Rational(2)})
    CHECK(omega_determinant_sum(complete(4), u) == k4.eval(u * u));
  // Loop-bearing graphs follow the doubled-diagonal convention.
  const UnivariatePoly dumb = omega_specialize(dumbbell_graph()).polynomial;
  for (const Rational& u : {Rational(1), Rational(1, 2), Rational(3)})
    CHECK(omega_determinant_sum(dumbbell_graph(), u) == dumb.eval(u * u));
}

TEST_CASE("cycle union enumeration") {
  int count = 0;
  bool saw_loop_union = false;
  enumerate_cycle_unions(dumbbell_graph(), [&](const EdgeSubset& s) {
    ++count;
    if (s.ids.size() == 2) saw_loop_union = true;
  });
  // {}, {loop0}, {loop1}, {loop0, loop1}
  CHECK(count == 4);
  CHECK(saw_loop_union);
}

TEST_CASE("value at one as a covering-matching count") {
  const Beta2Record c3 = subcoregraph_count_expansion_beta2(cycle(3));
  CHECK(c3.omega_at_one == 2);
  CHECK(c3.consistent);
  const Beta2Record b1 = subcoregraph_count_expansion_beta2(bouquet(1));
  CHECK(b1.omega_at_one == 2);
  CHECK(b1.consistent);
  const Beta2Record k4 = subcoregraph_count_expansion_beta2(complete(4));
  CHECK(k4.omega_at_one == 30);
  CHECK(k4.covering_matchings == 30);
  CHECK(k4.consistent);
}

TEST_CASE("value-at-one identities") {
  const OmegaAtOneReport c3 = omega_at_one_identities(cycle(3));
  CHECK(c3.omega_at_one == 2);
  CHECK(c3.all_ok);
  const OmegaAtOneReport k4 = omega_at_one_identities(complete(4));
  CHECK(k4.omega_at_one == 30);
  CHECK(k4.all_ok);
  const OmegaAtOneReport tree = omega_at_one_identities(path(5));
  CHECK(tree.omega_at_one == 0);
  CHECK(tree.all_ok);
}

TEST_CASE("coefficient nonnegativity when no component is a tree") {
  CHECK(check_nonnegativity(complete(4)).applies);
  CHECK(check_nonnegativity(complete(4)).ok);
  CHECK(check_nonnegativity(bouquet(3)).applies);
  CHECK(check_nonnegativity(bouquet(3)).ok);
  const NonnegativityReport tree = check_nonnegativity(path(4));
  CHECK(!tree.applies);  // exempt: omega = 1 - beta has a negative coefficient
  CHECK(!check_nonnegativity(disjoint_union(cycle(3), path(2))).applies);
}

TEST_CASE("subdivision law") {
  CHECK(check_subdivision_law(bouquet(1), 3));
  CHECK(check_subdivision_law(complete(4), 2));
  CHECK(check_subdivision_law(path(4), 2));  // negative exponent side
  for (const CorpusEntry& entry : random_corpus(8, 15)) {
    if (entry.graph.edge_count() > 8) continue;
    CHECK(check_subdivision_law(entry.graph, 1));
    CHECK(check_subdivision_law(entry.graph, 2));
    CHECK(check_subdivision_law(entry.graph, 3));
  }
  // Direct instance: omega of C3 equals omega of B1 at beta^3.
  CHECK(omega_specialize(cycle(3)).polynomial ==
        omega_specialize(bouquet(1)).polynomial.stretch(3));
}

TEST_CASE("structure law: constant, degree, leading coefficient") {
  for (const CorpusEntry& entry : random_corpus(55, 30)) {
    const Multigraph& g = entry.graph;
    const UnivariatePoly omega = omega_specialize(g).polynomial;
    CHECK(omega.coeff(0) == 1);
    const Multigraph core = g.core();
    CHECK(omega.degree() == core.vertex_count());
    Integer leading(1);
    for (int d : core.degrees()) leading *= Integer(d - 1);
    CHECK(omega.coeff(omega.degree()) == leading);
  }
}
