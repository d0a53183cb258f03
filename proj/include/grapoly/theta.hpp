#ifndef GRAPOLY_THETA_HPP
#define GRAPOLY_THETA_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "grapoly/multigraph.hpp"
#include "grapoly/polynomial.hpp"

namespace grapoly {

// Size guards for the exponential algorithms. They exist to fail loudly
// instead of hanging; override per call when you mean it.
struct Guards {
  int max_edges = 26;     // 2^|E| subset sums
  int max_vertices = 24;  // 2^|V| spin sums, matching enumerations
};

void check_edge_guard(const Multigraph& g, const Guards& guards);
void check_vertex_guard(const Multigraph& g, const Guards& guards);

enum class ThetaAlgorithm { enumeration, deletion_contraction, vfunction_expansion };

struct GraphStats {
  int vertices = 0;
  int edges = 0;
  int components = 0;
  int nullity = 0;
};

GraphStats graph_stats(const Multigraph& g);

// theta as a bivariate polynomial: variable 1 is the edge activity, variable
// 2 the vertex variable fed to the f_n family.
struct ThetaResult {
  BivariatePoly polynomial;
  ThetaAlgorithm algorithm = ThetaAlgorithm::enumeration;
  GraphStats stats;
};

// Per-edge / per-vertex weights for the numeric multivariate evaluation.
// When xi is present, gamma must satisfy gamma_i = xi_i - 1/xi_i.
struct WeightedInstance {
  Multigraph host;
  std::map<int, Complex> beta;   // edge_id -> weight
  std::vector<Complex> gamma;    // per vertex
  std::optional<std::vector<Complex>> xi;
};

void validate_weights(const WeightedInstance& w);
WeightedInstance uniform_weights(const Multigraph& g, Complex beta, Complex gamma);
// Induced weights on minors; contraction requires equal endpoint gammas.
WeightedInstance weighted_delete(const WeightedInstance& w, int edge_id);
WeightedInstance weighted_contract(const WeightedInstance& w, int edge_id);

// Direct sum over edge subsets; subsets with a degree-1 vertex contribute a
// zero factor and are pruned as soon as such a vertex can no longer gain
// incident edges.
ThetaResult theta_enumerate(const Multigraph& g, const Guards& guards = {});
// Recursion on a non-loop edge (always the lowest surviving id), with
// disjoint unions of bouquets as the closed-form base case.
ThetaResult theta_deletion_contraction(const Multigraph& g);
// Sum over all edge subsets of the per-component boundary values at
// activity 1, weighted by beta^|s| (1-beta)^(|E|-|s|).
ThetaResult theta_vfunction_expansion(const Multigraph& g, const Guards& guards = {});

// Closed form for the n-loop bouquet: sum_k C(n,k) f_{2k}(gamma) beta^k.
BivariatePoly theta_bouquet(int n);
// The bouquet value at activity 1, as a polynomial in gamma.
UnivariatePoly theta_bouquet_at_one(int n);

// Numeric multivariate evaluations.
Complex theta_weighted(const WeightedInstance& w, const Guards& guards = {});
// Vertex-state-sum form; requires xi with xi_i != 0 and xi_i + 1/xi_i != 0.
Complex theta_weighted_vertex_sum(const WeightedInstance& w, const Guards& guards = {});
// Component-decomposition expansion for uniform gamma (all gamma_i equal).
Complex theta_weighted_expansion(const WeightedInstance& w, const Guards& guards = {});

// Rank-nullity subset sum; variable 1 is x, variable 2 is y.
BivariatePoly tutte_polynomial(const Multigraph& g, const Guards& guards = {});

// Checks the identity tying theta at gamma=0 to the Tutte polynomial along
// the two-state curve, comparing exact polynomials after clearing
// denominators.
bool check_gamma0_specialization(const Multigraph& g, const Guards& guards = {});

// Random-cluster style sum: variable 1 is the edge activity, variable 2
// counts connected components.
BivariatePoly random_cluster(const Multigraph& g, const Guards& guards = {});

// Closed form of theta at activity 1 for connected graphs, evaluated at
// gamma = xi - 1/xi for an exact rational xi != 0 with xi + 1/xi != 0.
Rational theta_beta1_closed_form(const Multigraph& g, const Rational& xi);
// Coefficients C_{n,l} of gamma^{2l} in theta(1, gamma) for a connected
// graph of nullity n >= 1 (l = 0..n-1).
std::vector<Integer> theta_beta1_coefficients(int n);
// theta(1, gamma) for connected graphs as a polynomial in gamma.
UnivariatePoly theta_beta1_gamma_poly(const Multigraph& g);

// Sub-coregraph counting. Bounds below are for connected graphs.
Integer subcoregraph_count(const Multigraph& g, const Guards& guards = {});
void enumerate_subcoregraphs(const Multigraph& g,
                             const std::function<void(const EdgeSubset&)>& visit,
                             const Guards& guards = {});
Integer subcoregraph_lower_bound(int nullity);  // 2^n
Integer subcoregraph_upper_bound(int nullity);  // integer Lucas-type closed form

// For connected non-tree graphs whose core has max degree <= 3: number of
// sub-coregraphs with exactly 2l degree-3 vertices, keyed by l.
std::map<int, Integer> count_by_degree3_vertices(const Multigraph& g, const Guards& guards = {});

}  // namespace grapoly

#endif
