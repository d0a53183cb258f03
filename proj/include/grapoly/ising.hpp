#ifndef GRAPOLY_ISING_HPP
#define GRAPOLY_ISING_HPP

#include <array>
#include <map>
#include <vector>

#include "grapoly/multigraph.hpp"
#include "grapoly/theta.hpp"

namespace grapoly {

// Pairwise +-1 spin model: factor exp(J_e x_i x_j) per edge (a loop
// contributes the constant exp(J_e)) and exp(h_i x_i) per vertex.
struct IsingModel {
  Multigraph host;
  std::map<int, double> coupling;  // edge_id -> J_e
  std::vector<double> field;       // h_i per vertex
};

void validate_model(const IsingModel& m);

// log Z by exhaustive spin summation, accumulated in the log domain.
double ising_log_partition_bruteforce(const IsingModel& m, const Guards& guards = {});

// Spin states are indexed 0 -> +1, 1 -> -1; edge tables use (i_state<<1)|j_state.
struct BeliefSet {
  std::map<int, std::array<double, 4>> edge;  // edge_id -> b_e table
  std::vector<std::array<double, 2>> vertex;  // b_i tables
  double max_marginalization_residual = 0.0;
  double max_normalization_residual = 0.0;
};

// Pairwise beliefs b_e = (xi_i^{x_i} xi_j^{x_j} + beta_e x_i x_j) / norm and
// their singleton marginals. Requires xi_i > 0 and every entry positive.
BeliefSet beliefs_from_parameters(const Multigraph& g, const std::map<int, double>& beta,
                                  const std::vector<double>& xi);

// The edge/vertex factorization turning the parameterized beliefs into an
// Ising model with per-factor scale constants, so that
// Z = prod A_i prod B_e * Theta.
struct TransformOutput {
  std::vector<double> vertex_scale;                  // A_i = xi_i + 1/xi_i
  std::map<int, double> edge_scale;                  // B_e
  std::vector<double> base_field;                    // log xi_i
  std::map<int, std::pair<double, double>> edge_field;  // (at u, at v)
  IsingModel model;
  double reconstruction_residual = 0.0;
};

TransformOutput transform_to_ising(const Multigraph& g, const std::map<int, double>& beta,
                                   const std::vector<double>& xi);

struct BetheRatioReport {
  double log_z = 0.0;
  double log_z_bethe = 0.0;
  double ratio = 0.0;  // Z / Z_B
  double theta = 0.0;
  double rel_error = 0.0;
  bool ok = false;
};

// Computes Z by brute force, Z_B from the transform scales, Theta from the
// weighted subset sum, and compares Z/Z_B with Theta.
BetheRatioReport verify_bethe_ratio(const Multigraph& g, const std::map<int, double>& beta,
                                    const std::vector<double>& xi, double tol = 1e-8,
                                    const Guards& guards = {});

struct BpOptions {
  int max_iters = 1000;
  double damping = 0.5;  // 0 reproduces plain synchronous sweeps
  double tol = 1e-12;
};

struct BpResult {
  BeliefSet beliefs;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
  double log_z_bethe = 0.0;  // from the Bethe free energy at the beliefs
};

// Synchronous sum-product with uniform initialization. Loop-free hosts only;
// parallel edges carry independent messages. Non-convergence is reported,
// not thrown.
BpResult run_belief_propagation(const IsingModel& m, const BpOptions& options = {});

// Zero-field expansion: Z = 2^|V| prod cosh(J_e) * sum over even-degree
// subgraphs of prod tanh(J_e), checked against brute force.
bool van_der_waerden_check(const IsingModel& m, double rel_tol = 1e-10,
                           const Guards& guards = {});

// General-field expansion over all subsets with cosh/sinh factors split by
// degree parity, checked against brute force.
bool field_expansion_check(const IsingModel& m, double rel_tol = 1e-10,
                           const Guards& guards = {});

}  // namespace grapoly

#endif
